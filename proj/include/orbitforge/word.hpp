#ifndef ORBITFORGE_WORD_HPP
#define ORBITFORGE_WORD_HPP

#include <string>
#include <vector>

namespace orbitforge {

/** One syllable of a word: generator index with nonzero exponent. */
struct Letter {
    int gen;
    long exp;

    friend bool operator==(const Letter& x, const Letter& y) = default;
};

/**
 * Word over an indexed generating set, kept in canonical form: exponents are
 * nonzero and adjacent syllables use distinct generators.  The textual form
 * names generator i by the i-th character of an alphabet string ("tab",
 * "abc", ...); uppercase means inverse and an optional digit run gives the
 * exponent, so with alphabet "tab" the string "t3A2" reads t^3 a^-2.
 */
class Word {
  public:
    Word() = default;

    static Word parse(const std::string& alphabet, const std::string& text);
    std::string format(const std::string& alphabet) const;

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /** Sum of |exponent|. */
    long length() const;

    /** Appends one syllable, merging with the tail and dropping cancellations. */
    void append(int gen, long exp);

    Word inverse() const;
    Word concat(const Word& o) const;

    friend bool operator==(const Word& x, const Word& y) = default;

  private:
    std::vector<Letter> letters_;
};

}  // namespace orbitforge

#endif

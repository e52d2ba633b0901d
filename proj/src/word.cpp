#include "orbitforge/word.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitforge {

long Word::length() const {
    long n = 0;
    for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
    return n;
}

void Word::append(int gen, long exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
        letters_.back().exp += exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back(Letter{gen, exp});
}

Word Word::inverse() const {
    Word r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.append(it->gen, -it->exp);
    return r;
}

Word Word::concat(const Word& o) const {
    Word r = *this;
    for (const Letter& l : o.letters_) r.append(l.gen, l.exp);
    return r;
}

Word Word::parse(const std::string& alphabet, const std::string& text) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos;
            continue;
        }
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        std::size_t gen = alphabet.find(lower);
        if (gen == std::string::npos)
            throw std::invalid_argument(std::string("word: unknown generator '") + c + "'");
        bool inv = std::isupper(static_cast<unsigned char>(c));
        ++pos;
        long count = 0;
        bool have_digits = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            count = count * 10 + (text[pos] - '0');
            have_digits = true;
            ++pos;
        }
        if (!have_digits) count = 1;
        if (count == 0) throw std::invalid_argument("word: zero exponent");
        w.append(static_cast<int>(gen), inv ? -count : count);
    }
    return w;
}

std::string Word::format(const std::string& alphabet) const {
    std::string out;
    for (const Letter& l : letters_) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= alphabet.size())
            throw std::invalid_argument("word: generator index outside alphabet");
        char c = alphabet[static_cast<std::size_t>(l.gen)];
        long e = l.exp;
        if (e < 0) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            e = -e;
        }
        out += c;
        if (e != 1) out += std::to_string(e);
    }
    return out;
}

}  // namespace orbitforge

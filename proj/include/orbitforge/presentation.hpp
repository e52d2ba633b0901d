#ifndef ORBITFORGE_PRESENTATION_HPP
#define ORBITFORGE_PRESENTATION_HPP

#include <string>
#include <vector>

#include "orbitforge/word.hpp"

namespace orbitforge {

/**
 * Finitely presented group read from a small line format:
 *
 *   gens 3          # generators a, b, c (lowercase; uppercase = inverse)
 *   rel abABC       # relator word, run-length letters ("a3B2" = a^3 b^-2)
 *   central c       # word declared central (checked by consumers, not here)
 *   nilpotent       # marker: consumers may rely on nilpotency
 *
 * '#' starts a comment; blank lines are skipped.  Generators are always the
 * first `gens` lowercase letters, so the alphabet is derived, never spelled.
 */
struct Presentation {
    int num_gens = 0;
    std::vector<Word> relators;
    std::vector<Word> central_words;
    bool nilpotent = false;

    /** "abc..." prefix with num_gens letters. */
    std::string alphabet() const;

    /** Parses the line format; std::invalid_argument on any malformed line. */
    static Presentation parse(const std::string& text);

    /** Canonical re-emission of the same line format. */
    std::string format() const;

    friend bool operator==(const Presentation& x, const Presentation& y) = default;
};

}  // namespace orbitforge

#endif

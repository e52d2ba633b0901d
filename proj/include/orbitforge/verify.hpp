#ifndef ORBITFORGE_VERIFY_HPP
#define ORBITFORGE_VERIFY_HPP

#include <string>
#include <vector>

namespace orbitforge {

/** Seed for every randomized corpus below; fixed seed => byte-identical text. */
struct VerifyOptions {
    unsigned long seed = 42;
};

struct CriterionOutcome {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;   // deterministic, goes into the report text
    long elapsed_ms = 0;  // informational only, never part of the text
};

struct VerifyReport {
    std::vector<CriterionOutcome> criteria;
    bool all_pass = false;
    std::string text;  // one line per criterion, deterministic for a fixed seed
};

/**
 * Runs the claim suite: ten named checks, each tied to one verified statement
 * about the library (dense orbits, flat-distance formula, stabilizer tower,
 * integer-lattice distances, cocycle/isometry axioms, central-gap bounds,
 * nilpotent vanishing, free-group contrast, orbit-radius certificates, and
 * determinism of this very report).  Pure in its output: the text depends
 * only on the seed.  The determinism check re-runs the other nine criteria
 * and compares the two texts byte for byte.
 */
VerifyReport verify_claims(const VerifyOptions& opts);

}  // namespace orbitforge

#endif

// Acceptance runner: executes the full claim suite at the default seed and
// prints one PASS/FAIL line per claim.  Exit status 0 iff everything passed,
// including the runtime budgets pinned here (construction claims must stay
// interactive).  Timings go to stderr so stdout stays deterministic.
#include <cstdio>
#include <iostream>

#include "orbitforge/verify.hpp"

int main() {
    const orbitforge::VerifyReport report = orbitforge::verify_claims(orbitforge::VerifyOptions{});
    std::cout << report.text << std::flush;

    bool ok = report.all_pass;
    long total_ms = 0;
    for (const auto& c : report.criteria) {
        total_ms += c.elapsed_ms;
        std::fprintf(stderr, "criterion %02d: %ld ms\n", c.number, c.elapsed_ms);
        const long budget_ms = c.number == 1 ? 10000 : c.number == 3 ? 30000 : 0;
        if (budget_ms != 0 && c.elapsed_ms >= budget_ms) {
            std::printf("criterion %02d exceeded its %ld ms runtime budget (%ld ms)\n", c.number,
                        budget_ms, c.elapsed_ms);
            ok = false;
        }
    }
    std::fprintf(stderr, "total: %ld ms\n", total_ms);
    return ok ? 0 : 1;
}

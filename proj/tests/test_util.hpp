#ifndef ORBITFORGE_TEST_UTIL_HPP
#define ORBITFORGE_TEST_UTIL_HPP

#include <cstdint>
#include <random>

#include "orbitforge/quad_scalar.hpp"

namespace orbitforge::testutil {

// Deterministic draws: raw engine output reduced by hand so results do not
// depend on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    long rand_long(long lo, long hi) {  // inclusive range
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    Rational rand_rational(long max_abs_num, long max_den) {
        Integer num(rand_long(-max_abs_num, max_abs_num));
        Integer den(rand_long(1, max_den));
        return make_rational(num, den);
    }

    Rational rand_positive_rational(long max_num, long max_den) {
        Integer num(rand_long(1, max_num));
        Integer den(rand_long(1, max_den));
        return make_rational(num, den);
    }

    QuadScalar rand_quad(long max_abs_num, long max_den) {
        return QuadScalar(rand_rational(max_abs_num, max_den),
                          rand_rational(max_abs_num, max_den));
    }
};

}  // namespace orbitforge::testutil

#endif

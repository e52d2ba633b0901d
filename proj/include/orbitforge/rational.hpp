#ifndef ORBITFORGE_RATIONAL_HPP
#define ORBITFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace orbitforge {

// Exact arithmetic is GMP-backed throughout.  mpq_class canonical form (lowest
// terms, positive denominator) is the representation invariant for rationals.
using Integer = mpz_class;
using Rational = mpq_class;

/** num/den in canonical form; throws std::domain_error when den == 0. */
Rational make_rational(const Integer& num, const Integer& den);

/**
 * Parses "p", "p/q", "0.25", "2.5e-3", "1e6" exactly (no floating point).
 * Throws std::invalid_argument on malformed input or zero denominator.
 */
Rational parse_rational(const std::string& text);

/** Canonical "p/q" (or "p" when the denominator is 1). */
std::string rational_to_string(const Rational& q);

/** Largest integer <= q. */
Integer floor_rational(const Rational& q);

/** floor(q + 1/2); ties round toward +infinity. */
Integer round_half_up(const Rational& q);

/** Closed rational interval known to contain an exact real value. */
struct Enclosure {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
};

/**
 * Exact test |sqrt(a) - sqrt(b)| <= c for rationals a, b >= 0, c >= 0.
 * Equivalent to a + b - c^2 <= 2*sqrt(a*b), decided by one more squaring;
 * no approximation is involved.
 */
bool sqrt_gap_leq(const Rational& a, const Rational& b, const Rational& c);

/**
 * Certified enclosure of sqrt(x) with rational endpoints and width <= 2^-prec.
 * Exact squares yield a point interval.  Requires x >= 0 (std::domain_error).
 *
 * With x = u/v canonical, n = isqrt(u*v*4^prec) gives
 *   n/(2^prec * v) <= sqrt(x) <= (n+1)/(2^prec * v),
 * since sqrt(u/v) = sqrt(u*v)/v; both endpoints are exact rationals.
 */
Enclosure sqrt_enclosure(const Rational& x, unsigned prec);

}  // namespace orbitforge

#endif

#ifndef ORBITFORGE_QUAD_SCALAR_HPP
#define ORBITFORGE_QUAD_SCALAR_HPP

#include <string>

#include "orbitforge/rational.hpp"

namespace orbitforge {

/**
 * Element of the real quadratic field Q(sqrt2): value = a + b*sqrt2 with
 * rational a, b.  All arithmetic and comparisons are exact; every ordering
 * decision goes through sign(), never through floating point.
 */
class QuadScalar {
  public:
    QuadScalar() : a_(0), b_(0) {}
    QuadScalar(long v) : a_(v), b_(0) {}  // NOLINT: implicit by design
    QuadScalar(Rational a) : a_(std::move(a)), b_(0) {}
    QuadScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadScalar sqrt2() { return QuadScalar(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    /** True when a and b are both integers (the ring Z[sqrt2]). */
    bool has_integer_components() const;

    /** Galois conjugate a - b*sqrt2. */
    QuadScalar conj() const { return QuadScalar(a_, -b_); }

    /**
     * Exact sign in {-1, 0, +1}.  Mixed-sign components reduce to comparing
     * a^2 against 2*b^2; a^2 = 2b^2 forces a = b = 0 since sqrt2 is
     * irrational, so the case split is exhaustive.
     */
    int sign() const;

    QuadScalar operator-() const { return QuadScalar(-a_, -b_); }
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o);

    /** Multiplicative inverse via the conjugate; std::domain_error on zero. */
    QuadScalar inverse() const;

    /** Binary exponentiation; negative exponents go through inverse(). */
    QuadScalar pow(long e) const;

    /** Rational interval containing the value, width <= |b| * 2^-prec. */
    Enclosure enclosure(unsigned prec) const;

    /**
     * Nearest double within 2 ulp of the true real value (contract allows 4).
     * Adaptive precision: the enclosure is refined until its width is provably
     * small against the ulp of the candidate, so cancellation between a and
     * b*sqrt2 never degrades the result.  std::domain_error when the value
     * exceeds double range.
     */
    double to_float() const;

    /** Exact floor; terminates because a + b*sqrt2 is irrational when b != 0. */
    Integer floor() const;
    /** floor(x + 1/2); ties round toward +infinity. */
    Integer round_half_up() const;

    /** "289 - 204*sqrt2" style; omits zero terms, "0" for zero. */
    std::string to_string() const;
    /** Inverse of to_string; also accepts "a/b + c/d*sqrt2" with any signs. */
    static QuadScalar parse(const std::string& text);

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

  private:
    Rational a_;
    Rational b_;
};

inline QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
inline QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
inline QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
inline QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

/** Exact comparison: sign of x - y. */
inline int cmp(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign(); }
inline bool operator<(const QuadScalar& x, const QuadScalar& y) { return cmp(x, y) < 0; }
inline bool operator<=(const QuadScalar& x, const QuadScalar& y) { return cmp(x, y) <= 0; }
inline bool operator>(const QuadScalar& x, const QuadScalar& y) { return cmp(x, y) > 0; }
inline bool operator>=(const QuadScalar& x, const QuadScalar& y) { return cmp(x, y) >= 0; }

/** Result of small_unit: u = (sqrt2 - 1)^k, the smallest such power <= eps. */
struct SmallUnit {
    long k = 0;      // exponent, always >= 1
    QuadScalar u;    // (sqrt2-1)^k expanded in Z[sqrt2]
};

/**
 * Smallest k >= 1 with (sqrt2 - 1)^k <= eps.  Since 0 < sqrt2 - 1 < 1 the
 * powers decrease strictly to 0, so k exists for every eps > 0; for eps < 1
 * minimality means (sqrt2 + 1) * u > eps.  Throws std::invalid_argument for
 * eps <= 0.
 */
SmallUnit small_unit(const Rational& eps);

/**
 * Element q of Z[sqrt2] with |q - t| <= u/2 <= eps/2, where u is the
 * small_unit witness: q = round(t/u) * u.  This is the effective form of the
 * density of Z[sqrt2] in R.
 */
QuadScalar approximate_real(const Rational& t, const Rational& eps);

}  // namespace orbitforge

#endif

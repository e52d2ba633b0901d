#ifndef ORBITFORGE_WREATH_HPP
#define ORBITFORGE_WREATH_HPP

#include <string>

#include "orbitforge/sparse_vec.hpp"
#include "orbitforge/word.hpp"

namespace orbitforge {

/** Coefficient lattice of the restricted product: Z or Z[sqrt2]. */
enum class Lattice { Int, Quad };

/**
 * Element (f, s) of the restricted wreath product L wr Z, L in {Z, Z[sqrt2]}:
 * f is a finitely supported Z-indexed function into L and s the shift.
 * Multiplication: (f1, s1)(f2, s2) = (f1 + shift(f2, s1), s1 + s2).
 *
 * The group acts on l2(Z) by affine isometries: (f, s) . v = f + shift(v, s),
 * making f the cocycle part and s the linear (translation) part.
 */
class WreathElement {
  public:
    WreathElement() : lattice_(Lattice::Int), f_(Domain::Z), s_(0) {}
    WreathElement(Lattice lattice, SparseVec f, long s);

    static WreathElement identity(Lattice lattice) {
        return WreathElement(lattice, SparseVec(Domain::Z), 0);
    }

    Lattice lattice() const { return lattice_; }
    const SparseVec& f() const { return f_; }
    long s() const { return s_; }
    bool is_identity() const { return f_.empty() && s_ == 0; }

    friend bool operator==(const WreathElement& x, const WreathElement& y) {
        return x.lattice_ == y.lattice_ && x.s_ == y.s_ && x.f_ == y.f_;
    }
    friend bool operator!=(const WreathElement& x, const WreathElement& y) { return !(x == y); }

  private:
    Lattice lattice_;
    SparseVec f_;
    long s_;
};

/** Group law; lattices must match (std::domain_error). */
WreathElement compose(const WreathElement& x, const WreathElement& y);

/** Inverse: (f, s)^-1 = (-shift(f, -s), -s). */
WreathElement invert(const WreathElement& g);

/** Affine action on Z-indexed vectors: f + shift(v, s). */
SparseVec act(const WreathElement& g, const SparseVec& v);

/** Cocycle of the action: act(g, 0) = f. */
SparseVec cocycle(const WreathElement& g);

/**
 * Evaluates a word over the generators
 *   t: pure shift (0, 1),
 *   a: translation by delta_0,
 *   b: translation by sqrt2 * delta_0,
 * with uppercase inverses and run-length exponents ("t3A2").  The result is
 * in the Quad lattice when the word mentions b, else in the Int lattice.
 */
WreathElement evaluate_word(const std::string& word);
WreathElement evaluate_word(const Word& word, Lattice lattice);

/** Exact witness that the orbit of 0 passes within eps of the target. */
struct OrbitCertificate {
    WreathElement g;          // shift-free: s = 0
    QuadScalar achieved_dist2;
    Rational eps2;
};

/**
 * Translation part g = (f, 0) with ||cocycle(g) - target||^2 <= eps^2,
 * certified exactly.  Each support coordinate gets the rational budget
 * eps / ceil(sqrt(N)) (N = support size), so the squared budgets sum to at
 * most eps^2; approximate_real then delivers half of each budget.
 * target must be Z-indexed with rational coefficients; eps > 0.
 */
OrbitCertificate approximate_orbit(const SparseVec& target, const Rational& eps);

}  // namespace orbitforge

#endif

#ifndef ORBITFORGE_LINALG_HPP
#define ORBITFORGE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitforge/quad_scalar.hpp"

namespace orbitforge {

using QVec = std::vector<QuadScalar>;
using QMat = std::vector<std::vector<QuadScalar>>;  // row-major, rectangular

// ---------------------------------------------------------------------------
// Matrix basics (all arithmetic exact; dimension mismatches throw
// std::invalid_argument)

QMat identity_mat(std::size_t d);
QMat zero_mat(std::size_t rows, std::size_t cols);
std::size_t row_count(const QMat& m);
std::size_t col_count(const QMat& m);

QMat transpose(const QMat& m);
QMat mat_add(const QMat& x, const QMat& y);
QMat mat_sub(const QMat& x, const QMat& y);
QMat mat_mul(const QMat& x, const QMat& y);
QMat mat_scale(const QMat& x, const QuadScalar& c);
QVec mat_vec(const QMat& m, const QVec& v);
QuadScalar trace(const QMat& m);
bool is_symmetric(const QMat& m);

QuadScalar dot(const QVec& x, const QVec& y);
QVec vec_add(const QVec& x, const QVec& y);
QVec vec_sub(const QVec& x, const QVec& y);
QVec vec_scale(const QVec& x, const QuadScalar& c);
bool is_zero_vec(const QVec& x);

// ---------------------------------------------------------------------------
// Exact Gaussian elimination

/** Reduces m to reduced row echelon form in place; returns the rank.
 *  When pivots is non-null it receives the pivot column indices. */
std::size_t rref(QMat& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(QMat m);

/** Basis of the right kernel {x : m x = 0}; empty when injective. */
std::vector<QVec> kernel_basis(const QMat& m);

/** One exact solution of a x = b, or nullopt when inconsistent. */
std::optional<QVec> solve(const QMat& a, const QVec& b);

/** Exact inverse; std::domain_error when singular or non-square. */
QMat inverse(const QMat& a);

// ---------------------------------------------------------------------------
// Characteristic polynomial and real-root machinery
//
// Polynomials are coefficient vectors, ascending powers (coeffs[k] multiplies
// x^k), trimmed so the leading coefficient is nonzero (zero polynomial = {}).

using QPoly = std::vector<QuadScalar>;

QuadScalar poly_eval(const QPoly& p, const QuadScalar& x);
QPoly poly_derivative(const QPoly& p);

/** det(xI - a) via the Faddeev-LeVerrier recurrence; monic, degree = dim. */
QPoly charpoly(const QMat& a);

/** p with repeated roots stripped: p / gcd(p, p'), made monic. */
QPoly squarefree_part(const QPoly& p);

/**
 * Sturm chain of the squarefree part; counts distinct real roots exactly.
 * Evaluation points are rational so every sign decision is exact.
 */
class SturmChain {
  public:
    explicit SturmChain(const QPoly& p);

    /** Number of distinct real roots in (lo, hi]. */
    int count_in(const Rational& lo, const Rational& hi) const;
    /** Same half-open count with endpoints in the field; signs stay exact. */
    int count_in(const QuadScalar& lo, const QuadScalar& hi) const;
    /** Number of distinct real roots overall. */
    int count_all() const;
    /** Rational R with every real root in [-R, R] (Cauchy bound). */
    const Rational& root_bound() const { return bound_; }

  private:
    int variations_at(const QuadScalar& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    std::vector<QPoly> chain_;
    Rational bound_;
};

/** Rational upper bound on |a + b*sqrt2|: |a| + (3/2)|b|. */
Rational abs_upper_bound(const QuadScalar& x);

/** max_i sum_j ub|a_ij|: rational bound on the spectral radius. */
Rational gershgorin_bound(const QMat& a);

/**
 * Rational enclosures of the extreme eigenvalues of an exactly symmetric
 * matrix, via Sturm bisection on the characteristic polynomial.  The interval
 * width shrinks below tol; the eigenvalue lies in (lo, hi].
 */
Enclosure eigen_max_enclosure(const QMat& sym, const Rational& tol);
Enclosure eigen_min_enclosure(const QMat& sym, const Rational& tol);

/**
 * Roots of p lying in the field and of the form r or r*sqrt2 with r rational,
 * found by rational-root candidates on an integer-coefficient companion and
 * verified exactly by evaluation.  Eigenvalues outside these forms are not
 * reported (callers treat the corresponding spaces as unsplit).  Sorted
 * ascending, no duplicates.
 */
std::vector<QuadScalar> field_roots(const QPoly& p);

}  // namespace orbitforge

#endif

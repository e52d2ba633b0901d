#ifndef ORBITFORGE_STABILIZER_HPP
#define ORBITFORGE_STABILIZER_HPP

#include <map>
#include <vector>

#include "orbitforge/sparse_vec.hpp"

namespace orbitforge {

using RatMat = std::vector<std::vector<Rational>>;

/**
 * Rational vector indexed 0..n stored as a finite window of explicit entries
 * plus a constant fill value everywhere else.  Inner products, norms and
 * linear combinations all have closed forms in O(window) exact operations,
 * independent of n.  Canonical: window values differ from fill.
 *
 * This is the workhorse behind level-n certificates: offsets against the
 * all-ones flat are constant (-1) off a small support, and reflections keep
 * that shape, so n may reach the scan ceiling without any O(n) arithmetic.
 *
 * When the window covers every index the fill is dead weight; such vectors
 * normalize to fill 0 so that equality and is_zero stay structural.
 */
class PaddedVec {
  public:
    PaddedVec() : n_(-1), fill_(0) { normalize(); }
    PaddedVec(long n, Rational fill) : n_(n), fill_(std::move(fill)) { normalize(); }

    long top_index() const { return n_; }
    long dim() const { return n_ + 1; }
    const Rational& fill() const { return fill_; }
    const std::map<long, Rational>& window() const { return window_; }

    Rational at(long i) const;
    void set(long i, const Rational& v);

    bool is_zero() const { return window_.empty() && sgn(fill_) == 0; }

    PaddedVec operator-() const;
    PaddedVec& operator+=(const PaddedVec& o);
    PaddedVec& operator-=(const PaddedVec& o);
    PaddedVec& operator*=(const Rational& c);

    std::vector<Rational> to_dense() const;  // guarded: small n only

    friend bool operator==(const PaddedVec& x, const PaddedVec& y) = default;

  private:
    void normalize();

    long n_;
    Rational fill_;
    std::map<long, Rational> window_;
};

PaddedVec operator+(PaddedVec x, const PaddedVec& y);
PaddedVec operator-(PaddedVec x, const PaddedVec& y);
PaddedVec operator*(PaddedVec x, const Rational& c);

/** Exact inner product over indices 0..n (dimensions must match). */
Rational inner(const PaddedVec& x, const PaddedVec& y);
Rational norm2(const PaddedVec& x);

/** Offsets (v_j - 1) for j in 0..n; fill is -1 off the support. */
PaddedVec offsets_against_ones(const SparseVec& v, long n);

/**
 * Element of the pointwise stabilizer of the flat A_n, acting on coordinates
 * 0..n by an exact rational orthogonal map Q around the all-ones point:
 * v |-> 1 + Q(v|_{0..n} - 1), coordinates beyond n untouched.
 *
 * The linear part is stored either as a dense matrix (small n; validated
 * orthogonal on construction) or as an implicit Householder reflection with a
 * padded vector, which scales to the levels the certificate search needs.
 */
class StabilizerIsometry {
  public:
    enum class Form { Identity, Dense, Householder };

    static StabilizerIsometry identity(long n);
    /** Dense orthogonal matrix; requires (n+1)x(n+1), Q^T Q = I exactly. */
    StabilizerIsometry(long n, RatMat q);
    /** Reflection I - 2ww^T/<w,w>; w must be nonzero with top index n. */
    static StabilizerIsometry householder_at(long n, PaddedVec w);

    long level() const { return n_; }
    Form form() const { return form_; }
    const PaddedVec& householder_vector() const;

    /** Materializes the matrix; guarded to n <= 512 (std::domain_error). */
    RatMat to_dense() const;

    /** Applies the linear part to an offset vector of matching dimension. */
    PaddedVec apply(const PaddedVec& offsets) const;

  private:
    StabilizerIsometry() : n_(-1), form_(Form::Identity) {}

    long n_;
    Form form_;
    RatMat q_;       // Dense
    PaddedVec w_;    // Householder
    Rational ww_;    // cached <w, w>
};

/** The affine action described above; v must be N-indexed and rational. */
SparseVec act_stab(const StabilizerIsometry& g, const SparseVec& v);

/**
 * Exchange reflection: exact rational orthogonal Q with Q u0 = u1, built as
 * I - 2ww^T/<w,w> for w = u0 - u1.  Preconditions: equal dimensions >= 1 and
 * ||u0||^2 = ||u1||^2 exactly (std::domain_error); u0 = u1 yields identity.
 */
StabilizerIsometry householder(const std::vector<Rational>& u0, const std::vector<Rational>& u1);

/** Certificate that g moves x0 within eps of z while fixing A_n pointwise. */
struct ApproxCertificate {
    long n = 0;
    StabilizerIsometry g = StabilizerIsometry::identity(0);
    Rational achieved_dist2;
    Rational eps2;
};

/** Scan ceiling: ORBITFORGE_NMAX env override, else 10^6. */
long default_n_max();

/**
 * Moves x0 within eps of z by an element fixing A_n pointwise, n minimal
 * certified.
 *
 * Write A(n), B(n) for the squared distances of x0, z to A_n; their
 * difference is constant once n clears both supports, so the gap
 * |sqrt(A)-sqrt(B)| = |A-B|/(sqrt(A)+sqrt(B)) decreases to 0 and the smallest
 * n with gap <= eps/2 is found by exact test + binary search.  At that level
 * a rational point w' with ||w'||^2 = A(n) exactly and ||w' - w_z|| <= eps is
 * produced by a chord through the sphere: for rational b on the sphere and
 * any rational direction d, b - (2<b,d>/||d||^2) d lies on the sphere again,
 * and aiming d at the ideal point sqrt(A/B) w_z from the farther of +-w0
 * converges.  The Householder taking w0 to w' is the witness; the certified
 * distance is checked exactly before returning.
 *
 * x0, z: N-indexed with rational coefficients; eps > 0.  Degenerate inputs
 * (either offset vanishing, or A = B) short-circuit before the scan.
 * Raises ComputeLimitError when no level <= n_max certifies.
 */
ApproxCertificate approximate_pair(const SparseVec& x0, const SparseVec& z, const Rational& eps,
                                   long n_max = default_n_max());

/**
 * The all-ones point of A_m for m = max level among gs, returned truncated to
 * coordinates 0..m; verifies exactly that every g fixes it.
 */
SparseVec fixed_point_witness(const std::vector<StabilizerIsometry>& gs);

}  // namespace orbitforge

#endif

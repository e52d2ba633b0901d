#ifndef ORBITFORGE_SPARSE_VEC_HPP
#define ORBITFORGE_SPARSE_VEC_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitforge/quad_scalar.hpp"

namespace orbitforge {

/** Index domain of a sparse sequence: all integers, or naturals (>= 0). */
enum class Domain { Z, N };

/**
 * Finitely supported sequence of QuadScalar values over Z or N.
 * Canonical form: stored entries are nonzero and sorted by index (std::map).
 * Arithmetic between vectors requires matching domains.
 */
class SparseVec {
  public:
    SparseVec() : domain_(Domain::Z) {}
    explicit SparseVec(Domain d) : domain_(d) {}

    static SparseVec from_entries(Domain d,
                                  const std::vector<std::pair<long, QuadScalar>>& entries);

    Domain domain() const { return domain_; }
    const std::map<long, QuadScalar>& entries() const { return entries_; }

    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    std::optional<long> min_index() const;
    std::optional<long> max_index() const;

    /** Coefficient at i (zero off the support). */
    QuadScalar at(long i) const;
    /** Sets coefficient i; zero erases.  N-domain rejects negative indices. */
    void set(long i, const QuadScalar& v);

    /** True when every coefficient has zero sqrt2 part. */
    bool is_rational() const;
    /** True when every coefficient lies in Z[sqrt2]. */
    bool has_integer_components() const;

    SparseVec operator-() const;
    SparseVec& operator+=(const SparseVec& o);
    SparseVec& operator-=(const SparseVec& o);
    SparseVec& operator*=(const QuadScalar& c);

    friend bool operator==(const SparseVec& x, const SparseVec& y) {
        return x.domain_ == y.domain_ && x.entries_ == y.entries_;
    }
    friend bool operator!=(const SparseVec& x, const SparseVec& y) { return !(x == y); }

  private:
    void check_index(long i) const;

    Domain domain_;
    std::map<long, QuadScalar> entries_;
};

inline SparseVec operator+(SparseVec x, const SparseVec& y) { return x += y; }
inline SparseVec operator-(SparseVec x, const SparseVec& y) { return x -= y; }
inline SparseVec operator*(SparseVec x, const QuadScalar& c) { return x *= c; }

/** Exact l2 pairing sum_i x_i * y_i (domains must match). */
QuadScalar inner(const SparseVec& x, const SparseVec& y);
/** Exact squared l2 norm. */
QuadScalar norm2(const SparseVec& x);
/** Exact squared l2 distance. */
QuadScalar dist2(const SparseVec& x, const SparseVec& y);

/** Translation (shift v)(i) = v(i - s); Z-indexed vectors only. */
SparseVec shift(const SparseVec& v, long s);

/**
 * Nearest point of the affine flat A_n = {x : x_j = 1 for 0 <= j <= n} with
 * the tail of v: coordinates 0..n forced to 1, the rest kept.  N-indexed.
 */
SparseVec project_An(const SparseVec& v, long n);

/**
 * Exact squared distance to A_n: sum_{j=0}^{n} (v_j - 1)^2.  Evaluated in
 * closed form over the support and re-derived through the expansion
 * n+1 - 2*sum_{j<=n} v_j + sum_{j<=n} v_j^2; the two must agree exactly.
 * N-indexed, n >= 0.
 */
QuadScalar dist2_to_An(const SparseVec& v, long n);

}  // namespace orbitforge

#endif

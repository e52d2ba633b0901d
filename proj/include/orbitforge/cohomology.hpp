#ifndef ORBITFORGE_COHOMOLOGY_HPP
#define ORBITFORGE_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitforge/linalg.hpp"
#include "orbitforge/presentation.hpp"

namespace orbitforge {

/**
 * Finite-dimensional orthogonal representation: one exact orthogonal matrix
 * per generator.  Entries live in Q(sqrt2); inverses are transposes.
 * Validation (orthogonality, relator satisfaction, declared centrality) is
 * performed by validate_rep and assumed by everything downstream.
 */
struct OrthoRep {
    std::size_t dim = 0;
    std::vector<QMat> mats;
};

struct RepReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/** Exact validation: matrix shapes, Q^T Q = I, relators evaluate to the
 *  identity, declared central words commute with every generator matrix. */
RepReport validate_rep(const Presentation& p, const OrthoRep& r);

/** pi(w); inverse letters use the transpose (valid: matrices orthogonal). */
QMat rep_evaluate(const OrthoRep& r, const Word& w);

/** One vector per generator: the values b(x_i) of a candidate cocycle. */
struct Cocycle {
    std::vector<QVec> vals;
};

/**
 * b(w) under the cocycle rule b(uv) = b(u) + pi(u) b(v), with inverse letters
 * via b(x^-1) = -pi(x)^-1 b(x), folded left to right over w.
 */
QVec extend_cocycle(const OrthoRep& r, const Cocycle& b, const Word& w);

/** True when every relator extension of b vanishes (membership in Z^1). */
bool is_cocycle(const Presentation& p, const OrthoRep& r, const Cocycle& b);

/** Basis of Z^1: kernel of the relator-extension map on generator values. */
std::vector<Cocycle> cocycle_space(const Presentation& p, const OrthoRep& r);

/** Basis of B^1: image of v -> ((pi(x_1)-1)v, ..., (pi(x_m)-1)v). */
std::vector<Cocycle> coboundary_space(const OrthoRep& r);

/** dim H^1 = dim Z^1 - dim B^1 (always >= 0). */
long h1_dim(const Presentation& p, const OrthoRep& r);

struct CocycleClass {
    bool is_coboundary = false;
    QVec witness;  // v with b(x_i) = (pi(x_i) - 1) v, set when is_coboundary
};

/** Class of b in H^1; std::invalid_argument when b is not a cocycle. */
CocycleClass h1_of_cocycle(const Presentation& p, const OrthoRep& r, const Cocycle& b);

/** Basis of the invariant subspace: the joint kernel of pi(x_i) - 1. */
std::vector<QVec> invariant_vectors(const OrthoRep& r);

// ---------------------------------------------------------------------------
// Subrepresentation decomposition

/**
 * Invariant subspace produced by commutant splitting.  The projector is the
 * exact orthogonal projector onto the block; basis columns span it.
 *
 * irreducible_certified: the symmetric part of the block commutant is just
 * the scalars, which rules out any proper invariant subspace.
 * split_obstructed: a symmetric commutant element exists whose spectrum left
 * the working field, so a finer real splitting may exist but was not guessed.
 */
struct RepBlock {
    QMat projector;
    std::vector<QVec> basis;
    bool irreducible_certified = false;
    bool split_obstructed = false;
};

struct Decomposition {
    std::vector<RepBlock> blocks;
    bool fully_split = true;  // no block is obstructed
};

/**
 * Splits the space along eigenspaces of symmetric commutant elements with
 * eigenvalues in the field, searching a small deterministic family
 * (symmetrized kernel-basis elements, then pairwise sums) and recursing until
 * blocks are certified irreducible or the obstruction flag is set.  Blocks
 * are pairwise orthogonal and sum to the whole space.
 */
Decomposition decompose(const OrthoRep& r);

struct StrongCohomologyReport {
    bool strongly_cohomological = false;
    bool all_blocks_split = true;       // false when obstructed blocks remain
    std::vector<long> block_h1;         // aligned with decomposition blocks
    std::optional<RepBlock> witness;    // a subrepresentation with H^1 = 0
    Decomposition decomposition;
};

/**
 * Checks dim H^1 > 0 for every decomposition block and for every sum of
 * blocks sharing an isomorphism type (detected by exact intertwiner spaces;
 * sums across distinct types split cohomologically and need no recheck).
 * The first failing subrepresentation is returned as the witness.
 */
StrongCohomologyReport is_strongly_cohomological(const Presentation& p, const OrthoRep& r);

// ---------------------------------------------------------------------------
// Central spectral gap and vanishing on the centre

struct CentralGapReport {
    bool central_ok = false;    // pi(z) commutes with every generator matrix
    bool has_gap = false;       // 1 - pi(z) exactly invertible
    QuadScalar bz_norm2;        // ||b(z)||^2, exact
    bool c2_exact = false;      // smallest Gram eigenvalue found in the field
    QuadScalar c2_bound;        // C^2 exactly, or a strict rational upper bound
    Enclosure c_enclosure;      // rational interval containing C, for display
    long words_checked = 0;
    QuadScalar max_disp2;       // max ||b(w)||^2 over enumerated words
    bool bound_ok = false;      // max_disp2 <= c2_bound, exact comparison
    long h1 = -1;
    bool h1_zero = false;
};

/**
 * Certifies the displacement bound C = 2 ||(1-pi(z))^-1|| ||b(z)|| attached
 * to a central element: computes C^2 through the exact Gram matrix of
 * 1 - pi(z) (exactly when its smallest eigenvalue lies in the field, else as
 * a strict rational upper bound from a certified enclosure) and verifies
 * ||b(w)||^2 <= C^2 for every freely reduced word of length <= L, plus the
 * stronger conclusion h1_dim = 0.
 *
 * Errors: std::invalid_argument when z is not central in the representation
 * or b is not a cocycle; std::domain_error("no central gap") when 1 is in
 * the spectrum of pi(z).
 */
CentralGapReport central_gap_check(const Presentation& p, const OrthoRep& r, const Word& z,
                                   const Cocycle& b, long word_ceiling = 8);

struct VanishOnCentreReport {
    bool preconditions_ok = false;
    std::vector<std::string> problems;  // precondition failures, human-readable
    bool all_vanish = false;            // b(z) = 0 for every declared central word
    std::vector<bool> vanished;         // per central word
};

/**
 * For representations without invariant vectors whose declared central words
 * act trivially, every cocycle must vanish on those words; this verifies
 * extend_cocycle(b, z) = 0 for each.  Precondition failures are reported,
 * not thrown.  An empty central list passes vacuously.
 */
VanishOnCentreReport vanish_on_centre_check(const Presentation& p, const OrthoRep& r,
                                            const Cocycle& b);

// ---------------------------------------------------------------------------
// Affine actions: fixed points and the orbit probe

/** Affine isometric action data: linear part and translation per generator. */
struct AffineActionSpec {
    OrthoRep rep;
    Cocycle b;
};

struct FixedPointResult {
    bool exists = false;
    QVec point;  // lies in the orthocomplement of the invariant subspace
};

/**
 * Splits the space into the invariant part T and its orthocomplement; solves
 * (pi(x_i) - 1) v = -b_perp(x_i) jointly over the generators for v in the
 * complement.  Inconsistency means the cocycle class on the complement is
 * genuinely unbounded: result "none".
 */
FixedPointResult affine_fixed_point(const AffineActionSpec& a);

struct OrbitRadiusRow {
    long length = 0;
    long new_elements = 0;      // affine maps first reached at this length
    QuadScalar max_perp_norm2;  // max squared norm of the T-complement part
};

struct OrbitProbeReport {
    std::vector<OrbitRadiusRow> rows;  // lengths 0..L
    long total_elements = 0;
    bool fixed_point_exists = false;
    QVec fixed_point;
    bool bound_certified = false;  // every row obeys max <= 4 ||v||^2
};

/**
 * Breadth-first enumeration of the affine maps of all words of length <= L,
 * pruned by exact element equality (matrix and translation both), recording
 * per length the maximal squared norm of the orbit point of 0 projected onto
 * the complement of the invariant subspace.  When a fixed point v exists the
 * classical bound max <= 2||v|| is certified exactly as max^2 <= 4||v||^2.
 */
OrbitProbeReport orbit_decomposition_probe(const AffineActionSpec& a, long word_ceiling);

}  // namespace orbitforge

#endif

#ifndef ORBITFORGE_DIAGNOSTICS_HPP
#define ORBITFORGE_DIAGNOSTICS_HPP

#include <string>
#include <variant>
#include <vector>

#include "orbitforge/cohomology.hpp"
#include "orbitforge/sparse_vec.hpp"
#include "orbitforge/wreath.hpp"

namespace orbitforge {

/**
 * Exact squared distance from a rational probe to the set of finitely
 * supported integer vectors: each coordinate contributes the squared distance
 * to its nearest integer.  Probe must have rational coefficients.
 */
Rational lattice_distance2(const SparseVec& probe);

/**
 * One certified observation.  `value` holds the exact result when `exact`;
 * `enclosure` is always populated (a point interval for exact rationals).
 */
struct ProbeLine {
    std::string label;
    bool exact = true;
    QuadScalar value;
    Enclosure enclosure;
    bool certified = true;
};

/** Human- and machine-readable probe result, one of the three verdict kinds. */
struct ProbeReport {
    std::string description;
    std::string verdict;  // "coarse-dense-at-C" | "dense-at-eps" | "support-growth-table"
    std::vector<ProbeLine> lines;
    bool all_certified = true;
};

/**
 * Wraps lattice_distance2 with the uniform coarse-density certificate: any
 * probe supported in {-n..n} sits within C^2 = (2n+1)/4 of the lattice, since
 * every coordinate is at most 1/2 from its nearest integer.
 */
ProbeReport lattice_report(const SparseVec& probe);

/**
 * Runs approximate_orbit on every target and reports the exact certified
 * squared distances (all <= eps^2 or the solver would have thrown).
 * Solver errors propagate.
 */
ProbeReport density_report(const std::vector<SparseVec>& targets, const Rational& eps);

/** Action whose orbit of 0 is probed: a wreath lattice or an affine spec. */
using GrowthAction = std::variant<Lattice, AffineActionSpec>;

/** Support-function value at one word length along one direction. */
struct GrowthRow {
    long length = 0;
    std::size_t direction = 0;
    QuadScalar raw_max;  // exact max of <p, dir> over the ball, unnormalized
    Enclosure value;     // raw_max / ||dir||; [0, 0] for the zero direction
};

struct GrowthTable {
    long max_length = 0;
    std::size_t point_count = 0;        // distinct orbit points explored
    std::vector<GrowthRow> rows;        // ordered by (length, direction)
};

/**
 * Support-function growth probe for half-line detection: for each word length
 * l = 1..L, the maximum of <p, dir> over orbit points p of words of length
 * <= l.  Monotone nondecreasing in l by construction; linear growth along a
 * direction is the finite-scale signature of an affine half-line, a bounded
 * table certifies none up to length L.  Exact inner products; normalization
 * by ||dir|| reported as an enclosure with safe endpoints.
 */
GrowthTable support_growth(const GrowthAction& action,
                           const std::vector<SparseVec>& directions, long length_limit);

/**
 * Default probe directions: coordinate directions spanning the support the
 * ball of radius L can reach, plus eight seeded random rational directions.
 */
std::vector<SparseVec> default_growth_directions(const GrowthAction& action, long length_limit,
                                                 unsigned long seed);

}  // namespace orbitforge

#endif

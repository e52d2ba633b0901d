#include "orbitforge/diagnostics.hpp"

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace orbitforge;
using testutil::Rng;

namespace {

QuadScalar Q(long v) { return QuadScalar(v); }
QuadScalar Qr(long num, long den) { return QuadScalar(make_rational(num, den)); }

SparseVec half_ones(long count) {  // (1/2) * 1 on indices 1..count
    SparseVec v(Domain::Z);
    for (long i = 1; i <= count; ++i) v.set(i, Qr(1, 2));
    return v;
}

const GrowthRow& row_at(const GrowthTable& t, long length, std::size_t dir) {
    for (const auto& r : t.rows)
        if (r.length == length && r.direction == dir) return r;
    REQUIRE(false);
    return t.rows.front();
}

SparseVec delta(long i, QuadScalar v = QuadScalar(1)) {
    SparseVec d(Domain::Z);
    d.set(i, v);
    return d;
}

}  // namespace

TEST_CASE("lattice_distance2 sums exact per-coordinate fractional parts") {
    // integer probes sit on the lattice
    SparseVec ints(Domain::Z);
    ints.set(-3, Q(7));
    ints.set(5, Q(-2));
    CHECK(lattice_distance2(ints) == Rational(0));
    CHECK(lattice_distance2(SparseVec(Domain::Z)) == Rational(0));

    // half-ones on 4n coordinates: distance^2 exactly n
    for (long n = 1; n <= 32; ++n) CHECK(lattice_distance2(half_ones(4 * n)) == Rational(n));

    // single coordinate 1/3: nearest integer 0
    CHECK(lattice_distance2(delta(0, Qr(1, 3))) == Rational(1, 9));
    // rounding picks the closer side: 2/3 is 1/3 from 1
    CHECK(lattice_distance2(delta(0, Qr(2, 3))) == Rational(1, 9));
    CHECK(lattice_distance2(delta(0, Qr(-5, 3))) == Rational(1, 9));
    // the half-integer tie contributes exactly 1/4
    CHECK(lattice_distance2(delta(7, Qr(9, 2))) == Rational(1, 4));

    // irrational coordinates are rejected
    CHECK_THROWS_AS(lattice_distance2(delta(0, QuadScalar::sqrt2())), std::invalid_argument);
}

TEST_CASE("lattice_report certifies the uniform coarse-density cap") {
    Rng rng(90101);
    for (int it = 0; it < 25; ++it) {
        const long n = rng.rand_long(0, 6);
        SparseVec probe(Domain::Z);
        for (long i = -n; i <= n; ++i)
            probe.set(i, QuadScalar(Rational(rng.rand_long(0, 4)) / 4));  // coordinates in [0,1]
        // zero draws are erased, so the certified box is the actual support
        long reach = 0;
        if (const auto lo = probe.min_index()) reach = std::max(reach, std::labs(*lo));
        if (const auto hi = probe.max_index()) reach = std::max(reach, std::labs(*hi));
        ProbeReport rep = lattice_report(probe);
        CHECK(rep.verdict == "coarse-dense-at-C");
        CHECK(rep.all_certified);
        REQUIRE(rep.lines.size() == 2);
        CHECK(rep.lines[0].exact);
        CHECK(rep.lines[0].value.a() <= Rational(2 * reach + 1) / 4);
        CHECK(rep.lines[1].value.a() == Rational(2 * reach + 1) / 4);
    }

    ProbeReport four = lattice_report(half_ones(16));
    CHECK(four.lines[0].value == Q(4));
    CHECK(four.lines[0].enclosure.is_point());
    CHECK(four.all_certified);
}

TEST_CASE("density_report certifies orbit approximations per target") {
    // the zero target is hit exactly
    ProbeReport zero = density_report({SparseVec(Domain::Z)}, Rational(1, 10));
    CHECK(zero.verdict == "dense-at-eps");
    CHECK(zero.all_certified);
    REQUIRE(zero.lines.size() == 1);
    CHECK(zero.lines[0].value.is_zero());

    // ten seeded random rational targets at eps = 1/1000
    Rng rng(90202);
    std::vector<SparseVec> targets;
    for (int k = 0; k < 10; ++k) {
        SparseVec t(Domain::Z);
        const int support = static_cast<int>(rng.rand_long(1, 5));
        for (int j = 0; j < support; ++j)
            t.set(rng.rand_long(-6, 6), QuadScalar(rng.rand_rational(8, 5)));
        targets.push_back(std::move(t));
    }
    const Rational eps(1, 1000);
    ProbeReport rep = density_report(targets, eps);
    CHECK(rep.all_certified);
    CHECK(rep.lines.size() == 10);
    for (const auto& line : rep.lines) {
        CHECK(line.exact);
        CHECK((line.value - QuadScalar(eps * eps)).sign() <= 0);
        CHECK(line.value.sign() >= 0);
    }

    // tight tolerance on a single coordinate: unit powers reach eps = 10^-6
    ProbeReport tight = density_report({delta(0, Qr(1, 2))}, make_rational(1, 1000000));
    CHECK(tight.all_certified);
    CHECK(!tight.lines[0].value.is_zero());
}

TEST_CASE("support growth is linear along the lamp direction") {
    GrowthTable t = support_growth(Lattice::Int, {delta(0)}, 6);
    CHECK(t.max_length == 6);
    for (long l = 1; l <= 6; ++l) {
        const GrowthRow& r = row_at(t, l, 0);
        // best length-l word stacks l lamps at the origin
        CHECK(r.raw_max == Q(l));
        CHECK(r.value.lo == Rational(l));  // ||delta_0|| = 1 exactly
        CHECK(r.value.hi == Rational(l));
    }

    // sqrt2 lamps beat integer lamps once available
    GrowthTable q = support_growth(Lattice::Quad, {delta(0)}, 4);
    for (long l = 1; l <= 4; ++l) {
        const GrowthRow& r = row_at(q, l, 0);
        CHECK(r.raw_max == QuadScalar(Rational(0), Rational(l)));
        CHECK(r.value.lo <= r.value.hi);
        CHECK(QuadScalar(r.value.lo) <= r.raw_max);
        CHECK(r.raw_max <= QuadScalar(r.value.hi));
    }

    // zero direction reports zero rows
    GrowthTable z = support_growth(Lattice::Int, {SparseVec(Domain::Z)}, 3);
    for (const auto& r : z.rows) {
        CHECK(r.raw_max.is_zero());
        CHECK(r.value.lo == Rational(0));
        CHECK(r.value.hi == Rational(0));
    }
}

TEST_CASE("support growth flattens for bounded affine actions") {
    // rot90 with unit cocycle: orbit of 0 is the unit square, 4 points
    AffineActionSpec rot{OrthoRep{2, {{{Q(0), Q(-1)}, {Q(1), Q(0)}}}},
                         Cocycle{{{Q(1), Q(0)}}}};
    GrowthTable t = support_growth(GrowthAction{rot}, {delta(0), delta(1), delta(0) + delta(1)}, 6);
    CHECK(t.point_count == 4);
    for (long l = 1; l <= 6; ++l) {
        CHECK(row_at(t, l, 0).raw_max == Q(1));
        CHECK(row_at(t, l, 1).raw_max == Q(1));  // the inverse word A lands on (0,1)
        CHECK(row_at(t, l, 2).raw_max == Q(l >= 2 ? 2 : 1));
    }
    // normalized diagonal direction: 2/sqrt2 = sqrt2 in the enclosure
    const Enclosure diag = row_at(t, 6, 2).value;
    CHECK(diag.lo * diag.lo <= Rational(2));
    CHECK(diag.hi * diag.hi >= Rational(2));

    // translation by sqrt2 on R: growth is exactly l*sqrt2
    AffineActionSpec shift{OrthoRep{1, {identity_mat(1)}}, Cocycle{{{QuadScalar::sqrt2()}}}};
    GrowthTable s = support_growth(GrowthAction{shift}, {delta(0)}, 5);
    for (long l = 1; l <= 5; ++l) {
        const GrowthRow& r = row_at(s, l, 0);
        CHECK(r.raw_max == QuadScalar(Rational(0), Rational(l)));
        CHECK(QuadScalar(r.value.lo) <= r.raw_max);
        CHECK(r.raw_max <= QuadScalar(r.value.hi));
        CHECK(r.value.width() <= Rational(1, 1000000));
    }

    // monotone nondecreasing in length for every direction, by construction
    Rng rng(90303);
    for (int it = 0; it < 5; ++it) {
        std::vector<SparseVec> dirs;
        for (int k = 0; k < 3; ++k) {
            SparseVec d(Domain::Z);
            d.set(rng.rand_long(0, 1), QuadScalar(rng.rand_rational(3, 2)));
            dirs.push_back(std::move(d));
        }
        GrowthTable g = support_growth(GrowthAction{rot}, dirs, 5);
        for (std::size_t j = 0; j < dirs.size(); ++j)
            for (long l = 2; l <= 5; ++l)
                CHECK(row_at(g, l - 1, j).raw_max <= row_at(g, l, j).raw_max);
    }
}

TEST_CASE("support growth validates its inputs") {
    CHECK_THROWS_AS(support_growth(Lattice::Int, {delta(0)}, 0), std::invalid_argument);

    AffineActionSpec bad_dim{OrthoRep{2, {identity_mat(2)}}, Cocycle{{{Q(1)}}}};
    CHECK_THROWS_AS(support_growth(GrowthAction{bad_dim}, {delta(0)}, 2), std::invalid_argument);

    AffineActionSpec skew{OrthoRep{2, {{{Q(1), Q(1)}, {Q(0), Q(1)}}}},
                          Cocycle{{{Q(1), Q(0)}}}};
    CHECK_THROWS_AS(support_growth(GrowthAction{skew}, {delta(0)}, 2), std::invalid_argument);

    AffineActionSpec rot{OrthoRep{2, {{{Q(0), Q(-1)}, {Q(1), Q(0)}}}},
                         Cocycle{{{Q(1), Q(0)}}}};
    CHECK_THROWS_AS(support_growth(GrowthAction{rot}, {delta(-1)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(support_growth(GrowthAction{rot}, {delta(2)}, 2), std::invalid_argument);
}

TEST_CASE("default growth directions are deterministic and well-shaped") {
    GrowthAction wreath{Lattice::Int};
    std::vector<SparseVec> d1 = default_growth_directions(wreath, 4, 42);
    std::vector<SparseVec> d2 = default_growth_directions(wreath, 4, 42);
    CHECK(d1.size() == 7 + 8);  // indices -3..3 plus 8 random
    REQUIRE(d1.size() == d2.size());
    for (std::size_t i = 0; i < d1.size(); ++i) CHECK(d1[i] == d2[i]);
    for (const auto& d : d1) CHECK(!d.empty());

    AffineActionSpec rot{OrthoRep{2, {{{Q(0), Q(-1)}, {Q(1), Q(0)}}}},
                         Cocycle{{{Q(1), Q(0)}}}};
    std::vector<SparseVec> da = default_growth_directions(GrowthAction{rot}, 4, 42);
    CHECK(da.size() == 2 + 8);
    // all usable by the affine probe
    GrowthTable t = support_growth(GrowthAction{rot}, da, 3);
    CHECK(t.rows.size() == 3 * da.size());

    std::vector<SparseVec> d3 = default_growth_directions(wreath, 4, 43);
    bool any_diff = d3.size() != d1.size();
    for (std::size_t i = 0; !any_diff && i < d1.size(); ++i) any_diff = !(d1[i] == d3[i]);
    CHECK(any_diff);
}

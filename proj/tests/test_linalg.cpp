#include "orbitforge/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace orbitforge;
using testutil::Rng;

namespace {

QuadScalar Q(long v) { return QuadScalar(v); }
QuadScalar Qr(long num, long den) { return QuadScalar(make_rational(num, den)); }
QuadScalar S2(long c = 1) { return QuadScalar(Rational(0), Rational(c)); }

QMat random_mat(Rng& rng, std::size_t rows, std::size_t cols) {
    QMat m(rows, QVec(cols, QuadScalar(0)));
    for (auto& row : m)
        for (auto& v : row) v = QuadScalar(rng.rand_rational(3, 2));
    return m;
}

}  // namespace

TEST_CASE("matrix basics behave like the dense oracles") {
    Rng rng(77001);
    for (int it = 0; it < 25; ++it) {
        QMat a = random_mat(rng, 3, 4);
        QMat b = random_mat(rng, 4, 2);
        QMat c = random_mat(rng, 2, 5);
        // associativity is a strong whole-pipeline exactness check
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
        CHECK(transpose(transpose(a)) == a);
        CHECK(transpose(mat_mul(a, b)) == mat_mul(transpose(b), transpose(a)));
        CHECK(mat_mul(identity_mat(3), a) == a);
        CHECK(mat_mul(a, identity_mat(4)) == a);
    }
    CHECK(trace(QMat{{Q(1), Q(5)}, {Q(7), Q(3)}}) == Q(4));
    CHECK_THROWS_AS(mat_mul(random_mat(rng, 2, 3), random_mat(rng, 2, 3)),
                    std::invalid_argument);
}

TEST_CASE("rref exposes rank and pivots") {
    QMat m{{Q(1), Q(2)}, {Q(2), Q(4)}};
    std::vector<std::size_t> pivots;
    CHECK(rref(m, &pivots) == 1);
    CHECK(pivots == std::vector<std::size_t>{0});
    CHECK(m[0][0] == Q(1));
    CHECK(m[0][1] == Q(2));
    CHECK(m[1][0] == Q(0));
    CHECK(m[1][1] == Q(0));

    CHECK(rank(QMat{{Q(1), Q(0)}, {Q(0), Q(1)}}) == 2);
    CHECK(rank(QMat{{Q(0), Q(0)}, {Q(0), Q(0)}}) == 0);
    // sqrt2 pivots eliminate exactly
    CHECK(rank(QMat{{S2(), Q(2)}, {Q(1), S2()}}) == 1);
}

TEST_CASE("kernel basis satisfies rank-nullity and annihilation") {
    QMat m{{Q(1), Q(2)}, {Q(2), Q(4)}};
    std::vector<QVec> k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == QVec{Q(-2), Q(1)});

    Rng rng(77002);
    for (int it = 0; it < 30; ++it) {
        QMat a = random_mat(rng, 3, 5);
        std::vector<QVec> basis = kernel_basis(a);
        CHECK(rank(a) + basis.size() == 5);
        for (const auto& x : basis) CHECK(is_zero_vec(mat_vec(a, x)));
        // basis vectors are independent: stacking them has full rank
        QMat stacked(basis.begin(), basis.end());
        CHECK(rank(stacked) == basis.size());
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    Rng rng(77003);
    for (int it = 0; it < 30; ++it) {
        QMat a = random_mat(rng, 4, 3);
        QVec x0{QuadScalar(rng.rand_rational(3, 2)), QuadScalar(rng.rand_rational(3, 2)),
                QuadScalar(rng.rand_rational(3, 2))};
        QVec b = mat_vec(a, x0);
        auto x = solve(a, b);
        REQUIRE(x.has_value());
        CHECK(mat_vec(a, *x) == b);
    }
    // x must satisfy both x = 1 and x = 2: impossible
    CHECK_FALSE(solve(QMat{{Q(1)}, {Q(1)}}, QVec{Q(1), Q(2)}).has_value());
}

TEST_CASE("inverse is exact and rejects singular input") {
    QMat u{{Q(1), Q(1)}, {Q(0), Q(1)}};
    QMat ui = inverse(u);
    CHECK(ui == QMat{{Q(1), Q(-1)}, {Q(0), Q(1)}});

    Rng rng(77004);
    for (int it = 0; it < 20; ++it) {
        // unit-triangular products are always invertible
        QMat l = identity_mat(3), r = identity_mat(3);
        l[1][0] = QuadScalar(rng.rand_rational(3, 2));
        l[2][0] = QuadScalar(rng.rand_rational(3, 2));
        l[2][1] = QuadScalar(rng.rand_rational(3, 2));
        r[0][1] = QuadScalar(rng.rand_rational(3, 2));
        r[0][2] = QuadScalar(rng.rand_rational(3, 2));
        r[1][2] = QuadScalar(rng.rand_rational(3, 2));
        QMat a = mat_mul(l, r);
        CHECK(mat_mul(a, inverse(a)) == identity_mat(3));
        CHECK(mat_mul(inverse(a), a) == identity_mat(3));
    }
    CHECK_THROWS_AS(inverse(QMat{{Q(1), Q(2)}, {Q(2), Q(4)}}), std::domain_error);
    CHECK_THROWS_AS(inverse(QMat{{Q(1), Q(2)}}), std::domain_error);
}

TEST_CASE("charpoly matches hand-computed cases") {
    // diag(1,2,3): (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    QMat d{{Q(1), Q(0), Q(0)}, {Q(0), Q(2), Q(0)}, {Q(0), Q(0), Q(3)}};
    CHECK(charpoly(d) == QPoly{Q(-6), Q(11), Q(-6), Q(1)});

    // quarter rotation: x^2 + 1
    QMat rot{{Q(0), Q(-1)}, {Q(1), Q(0)}};
    CHECK(charpoly(rot) == QPoly{Q(1), Q(0), Q(1)});

    // symmetric pair-swap + diagonal: x^2 - 4x + 3
    QMat s{{Q(2), Q(1)}, {Q(1), Q(2)}};
    CHECK(charpoly(s) == QPoly{Q(3), Q(-4), Q(1)});

    // sqrt2 * I: x^2 - 2*sqrt2*x + 2
    QMat si{{S2(), Q(0)}, {Q(0), S2()}};
    CHECK(charpoly(si) == QPoly{Q(2), S2(-2), Q(1)});

    CHECK(charpoly(identity_mat(4)) == QPoly{Q(1), Q(-4), Q(6), Q(-4), Q(1)});

    // evaluation at the matrix's own eigenvalues vanishes
    CHECK(poly_eval(charpoly(s), Q(1)).is_zero());
    CHECK(poly_eval(charpoly(s), Q(3)).is_zero());
}

TEST_CASE("squarefree part strips multiplicity") {
    // (x-1)^2
    CHECK(squarefree_part(QPoly{Q(1), Q(-2), Q(1)}) == QPoly{Q(-1), Q(1)});
    // x^2 - 2 is already squarefree
    CHECK(squarefree_part(QPoly{Q(-2), Q(0), Q(1)}) == QPoly{Q(-2), Q(0), Q(1)});
    CHECK(squarefree_part(QPoly{Q(5)}) == QPoly{Q(1)});
}

TEST_CASE("Sturm chain counts real roots exactly") {
    SturmChain sq2(QPoly{Q(-2), Q(0), Q(1)});  // x^2 - 2
    CHECK(sq2.count_all() == 2);
    CHECK(sq2.count_in(Rational(1), Rational(2)) == 1);
    CHECK(sq2.count_in(Rational(-2), Rational(0)) == 1);
    CHECK(sq2.count_in(Rational(2), Rational(9)) == 0);

    SturmChain none(QPoly{Q(1), Q(0), Q(1)});  // x^2 + 1
    CHECK(none.count_all() == 0);

    // triple root collapses to one distinct root; endpoint conventions:
    // interval is half-open (lo, hi]
    SturmChain cube(QPoly{Q(-1), Q(3), Q(-3), Q(1)});  // (x-1)^3
    CHECK(cube.count_all() == 1);
    CHECK(cube.count_in(Rational(0), Rational(1)) == 1);
    CHECK(cube.count_in(Rational(1), Rational(2)) == 0);

    // five distinct rational roots
    QPoly p{Q(0), Q(1)};
    for (long r = 1; r <= 4; ++r) {
        QPoly next(p.size() + 1, Q(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= Q(r) * p[i];
        }
        p = next;
    }
    SturmChain five(p);  // x(x-1)(x-2)(x-3)(x-4)
    CHECK(five.count_all() == 5);
    CHECK(five.count_in(Rational(-1), Rational(5, 2)) == 3);
}

TEST_CASE("eigenvalue enclosures trap the extremes") {
    QMat d{{Q(1), Q(0), Q(0)}, {Q(0), Q(2), Q(0)}, {Q(0), Q(0), Q(3)}};
    Rational tol(1, 1000);
    Enclosure mx = eigen_max_enclosure(d, tol);
    CHECK(mx.hi - mx.lo <= tol);
    CHECK(mx.lo < 3);
    CHECK(Rational(3) <= mx.hi);
    Enclosure mn = eigen_min_enclosure(d, tol);
    CHECK(mn.hi - mn.lo <= tol);
    CHECK(mn.lo < 1);
    CHECK(Rational(1) <= mn.hi);

    // irrational extreme: golden ratio from [[0,1],[1,1]]
    QMat fib{{Q(0), Q(1)}, {Q(1), Q(1)}};
    Rational fine(1, 1 << 20);
    Enclosure phi = eigen_max_enclosure(fib, fine);
    CHECK(phi.hi - phi.lo <= fine);
    double mid = (phi.lo.get_d() + phi.hi.get_d()) / 2;
    CHECK(std::abs(mid - 1.6180339887498949) < 1e-5);

    CHECK_THROWS_AS(eigen_max_enclosure(QMat{{Q(0), Q(1)}, {Q(2), Q(0)}}, tol),
                    std::invalid_argument);
    CHECK_THROWS_AS(eigen_max_enclosure(d, Rational(0)), std::invalid_argument);
}

TEST_CASE("gershgorin bound dominates the spectral radius") {
    QMat s{{Q(0), S2()}, {S2(), Q(0)}};
    CHECK(gershgorin_bound(s) == Rational(3, 2));  // ub(sqrt2) = 3/2 >= sqrt2

    QMat d{{Q(5), Q(1)}, {Q(-1), Q(-7)}};
    CHECK(gershgorin_bound(d) == Rational(8));
}

TEST_CASE("field_roots finds rational and sqrt2-multiple roots") {
    // x^2 - 4x + 3
    auto r1 = field_roots(QPoly{Q(3), Q(-4), Q(1)});
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == Q(1));
    CHECK(r1[1] == Q(3));

    // x^2 - 2: both sqrt2 branches
    auto r2 = field_roots(QPoly{Q(-2), Q(0), Q(1)});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == S2(-1));
    CHECK(r2[1] == S2(1));

    // (x - sqrt2)^2: double root reported once
    auto r3 = field_roots(QPoly{Q(2), S2(-2), Q(1)});
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == S2(1));

    // x^2 - x - 1: golden ratio lies outside the field
    CHECK(field_roots(QPoly{Q(-1), Q(-1), Q(1)}).empty());

    // x^3 - x: zero root path
    auto r4 = field_roots(QPoly{Q(0), Q(-1), Q(0), Q(0), Q(1)});  // x^4 - x
    // x^4 - x = x(x-1)(x^2+x+1): roots 0 and 1
    REQUIRE(r4.size() == 2);
    CHECK(r4[0] == Q(0));
    CHECK(r4[1] == Q(1));

    // fractional roots: (2x-1)(3x+2) = 6x^2 + x - 2
    auto r5 = field_roots(QPoly{Q(-2), Q(1), Q(6)});
    REQUIRE(r5.size() == 2);
    CHECK(r5[0] == Qr(-2, 3));
    CHECK(r5[1] == Qr(1, 2));

    // mixed: (x - 1)(x - sqrt2) = x^2 - (1+sqrt2)x + sqrt2
    auto r6 = field_roots(QPoly{S2(1), QuadScalar(Rational(-1), Rational(-1)), Q(1)});
    REQUIRE(r6.size() == 2);
    CHECK(r6[0] == Q(1));
    CHECK(r6[1] == S2(1));
}

TEST_CASE("charpoly roots agree with eigen enclosures on symmetric input") {
    Rng rng(77005);
    for (int it = 0; it < 10; ++it) {
        // random symmetric 3x3 with small rational entries
        QMat a = random_mat(rng, 3, 3);
        QMat s = mat_add(a, transpose(a));
        SturmChain chain(charpoly(s));
        int total = chain.count_all();
        CHECK(total >= 1);
        CHECK(total <= 3);
        Enclosure mx = eigen_max_enclosure(s, Rational(1, 1 << 16));
        Enclosure mn = eigen_min_enclosure(s, Rational(1, 1 << 16));
        CHECK(mn.lo <= mx.hi);
        // no roots above the max enclosure or below the min enclosure
        CHECK(chain.count_in(mx.hi, mx.hi + chain.root_bound() + 1) == 0);
        CHECK(chain.count_in(-chain.root_bound() - 2, mn.lo) == 0);
    }
}

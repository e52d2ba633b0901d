#include <doctest.h>

#include "orbitforge/wreath.hpp"
#include "test_util.hpp"

using namespace orbitforge;

namespace {

QuadScalar qs(long a, long b = 0) { return QuadScalar(Rational(a), Rational(b)); }

SparseVec zvec(std::initializer_list<std::pair<long, long>> entries) {
    SparseVec v(Domain::Z);
    for (auto [i, val] : entries) v.set(i, qs(val));
    return v;
}

WreathElement wq(std::initializer_list<std::pair<long, long>> entries, long s) {
    return WreathElement(Lattice::Quad, zvec(entries), s);
}

// Random element via a random word: exercises the generators honestly.
WreathElement rand_element(testutil::Rng& rng, bool quad, int len) {
    const char* letters = quad ? "tabTAB" : "taTA";
    int n = quad ? 6 : 4;
    std::string w;
    for (int i = 0; i < len; ++i) w += letters[rng.rand_long(0, n - 1)];
    return evaluate_word(Word::parse("tab", w), quad ? Lattice::Quad : Lattice::Int);
}

SparseVec rand_zvec(testutil::Rng& rng, int max_support) {
    SparseVec v(Domain::Z);
    int count = static_cast<int>(rng.rand_long(0, max_support));
    for (int i = 0; i < count; ++i)
        v.set(rng.rand_long(-6, 6), rng.rand_quad(5, 3));
    return v;
}

}  // namespace

TEST_CASE("word parsing: run-length syntax") {
    Word w = Word::parse("tab", "t3A2");
    REQUIRE(w.letters().size() == 2);
    CHECK(w.letters()[0] == Letter{0, 3});
    CHECK(w.letters()[1] == Letter{1, -2});
    CHECK(w.format("tab") == "t3A2");
    CHECK(w.length() == 5);

    CHECK(Word::parse("tab", "aa").letters() == std::vector<Letter>{{1, 2}});
    CHECK(Word::parse("tab", "aA").empty());
    CHECK(Word::parse("tab", "a t b").letters().size() == 3);
    CHECK_THROWS_AS(Word::parse("tab", "x"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("tab", "a0"), std::invalid_argument);

    testutil::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Word r;
        for (int j = 0; j < 8; ++j)
            r.append(static_cast<int>(rng.rand_long(0, 2)), rng.rand_long(-4, 4));
        CHECK(Word::parse("tab", r.format("tab")) == r);
        CHECK(r.concat(r.inverse()).empty());
    }
}

TEST_CASE("construction validates the lattice") {
    SparseVec f(Domain::Z);
    f.set(0, QuadScalar(Rational(1), Rational(1)));
    CHECK_THROWS_AS(WreathElement(Lattice::Int, f, 0), std::domain_error);
    CHECK_NOTHROW(WreathElement(Lattice::Quad, f, 0));

    SparseVec half(Domain::Z);
    half.set(0, QuadScalar(Rational(1, 2)));
    CHECK_THROWS_AS(WreathElement(Lattice::Quad, half, 0), std::domain_error);

    SparseVec nvec(Domain::N);
    nvec.set(0, qs(1));
    CHECK_THROWS_AS(WreathElement(Lattice::Int, nvec, 0), std::domain_error);
}

TEST_CASE("compose and invert: pinned examples") {
    // (delta_0, 1) * (delta_0, 0) = (delta_0 + delta_1, 1)
    WreathElement x = wq({{0, 1}}, 1);
    WreathElement y = wq({{0, 1}}, 0);
    CHECK(compose(x, y) == wq({{0, 1}, {1, 1}}, 1));
    // (delta_0, 1)^-1 = (-delta_{-1}, -1)
    CHECK(invert(x) == wq({{-1, -1}}, -1));
    CHECK(compose(x, invert(x)).is_identity());
}

TEST_CASE("group axioms on random elements") {
    testutil::Rng rng(32);
    for (int i = 0; i < 250; ++i) {
        bool quad = rng.rand_long(0, 1) == 1;
        WreathElement g = rand_element(rng, quad, 8);
        WreathElement h = rand_element(rng, quad, 8);
        WreathElement k = rand_element(rng, quad, 8);
        CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
        CHECK(compose(g, invert(g)).is_identity());
        CHECK(compose(invert(g), g).is_identity());
        CHECK(compose(WreathElement::identity(g.lattice()), g) == g);
        CHECK(invert(invert(g)) == g);
    }
    CHECK_THROWS_AS(
        compose(WreathElement::identity(Lattice::Int), WreathElement::identity(Lattice::Quad)),
        std::domain_error);
}

TEST_CASE("action: pinned example and compatibility") {
    SparseVec v = zvec({{0, 1}});
    CHECK(act(wq({{0, 1}}, 1), v) == zvec({{0, 1}, {1, 1}}));
    CHECK(cocycle(wq({}, 5)).empty());  // pure shift moves the origin nowhere

    testutil::Rng rng(33);
    for (int i = 0; i < 250; ++i) {
        WreathElement g = rand_element(rng, true, 7);
        WreathElement h = rand_element(rng, true, 7);
        SparseVec x = rand_zvec(rng, 5);
        SparseVec y = rand_zvec(rng, 5);
        CHECK(act(g, act(h, x)) == act(compose(g, h), x));
        CHECK(dist2(act(g, x), act(g, y)) == dist2(x, y));  // affine isometry
        // cocycle identity: b(gh) = b(g) + g-linear-part . b(h)
        CHECK(cocycle(compose(g, h)) == cocycle(g) + shift(cocycle(h), g.s()));
    }
}

TEST_CASE("evaluate_word: pinned examples") {
    CHECK(evaluate_word("ataT") == WreathElement(Lattice::Int, zvec({{0, 1}, {1, 1}}), 0));
    CHECK(evaluate_word("t5") == WreathElement(Lattice::Int, SparseVec(Domain::Z), 5));
    WreathElement b = evaluate_word("b");
    CHECK(b.lattice() == Lattice::Quad);
    CHECK(b.s() == 0);
    CHECK(b.f().at(0) == QuadScalar::sqrt2());
    CHECK(evaluate_word("").is_identity());
    CHECK(evaluate_word("ta").lattice() == Lattice::Int);
    CHECK(evaluate_word("tab").lattice() == Lattice::Quad);
}

TEST_CASE("word evaluation is a homomorphism") {
    testutil::Rng rng(34);
    const std::string letters = "tabTAB";
    for (int i = 0; i < 200; ++i) {
        std::string u, v;
        for (int j = 0; j < 6; ++j) {
            u += letters[rng.rand_long(0, 5)];
            v += letters[rng.rand_long(0, 5)];
        }
        Word wu = Word::parse("tab", u), wv = Word::parse("tab", v);
        WreathElement eu = evaluate_word(wu, Lattice::Quad);
        WreathElement ev = evaluate_word(wv, Lattice::Quad);
        CHECK(evaluate_word(wu.concat(wv), Lattice::Quad) == compose(eu, ev));
        CHECK(evaluate_word(wu.inverse(), Lattice::Quad) == invert(eu));
    }
}

TEST_CASE("int-variant orbit is the integer lattice") {
    testutil::Rng rng(35);
    for (int i = 0; i < 100; ++i) {
        WreathElement g = rand_element(rng, false, 10);
        SparseVec c = cocycle(g);
        CHECK(c.is_rational());
        CHECK(c.has_integer_components());
        // Conversely any finitely supported integer vector is a cocycle value.
        SparseVec target(Domain::Z);
        for (int j = 0; j < 4; ++j)
            target.set(rng.rand_long(-5, 5), qs(rng.rand_long(-3, 3)));
        WreathElement h(Lattice::Int, target, 0);
        CHECK(cocycle(h) == target);
    }
}

TEST_CASE("approximate_orbit: pinned single-coordinate example") {
    SparseVec target(Domain::Z);
    target.set(0, QuadScalar(Rational(1, 2)));
    OrbitCertificate cert = approximate_orbit(target, Rational(1, 20));
    CHECK(cert.g.s() == 0);
    CHECK(cert.g.f().at(0) == qs(289, -204));
    CHECK(cert.eps2 == Rational(1, 400));
    CHECK((cert.achieved_dist2 - QuadScalar(cert.eps2)).sign() <= 0);
    // Independent recomputation of the certificate.
    CHECK(cert.achieved_dist2 == dist2(cocycle(cert.g), target));
}

TEST_CASE("approximate_orbit: two-coordinate example within 1/10") {
    SparseVec target(Domain::Z);
    target.set(0, QuadScalar(Rational(1, 3)));
    target.set(1, QuadScalar(Rational(1, 3)));
    OrbitCertificate cert = approximate_orbit(target, Rational(1, 10));
    CHECK((cert.achieved_dist2 - QuadScalar(Rational(1, 100))).sign() <= 0);
    CHECK(cert.g.f().has_integer_components());
}

TEST_CASE("approximate_orbit: random targets, certificates exact") {
    testutil::Rng rng(36);
    for (int i = 0; i < 200; ++i) {
        SparseVec target(Domain::Z);
        int support = static_cast<int>(rng.rand_long(0, 8));
        for (int j = 0; j < support; ++j)
            target.set(rng.rand_long(-10, 10), QuadScalar(rng.rand_rational(9, 7)));
        Rational eps = rng.rand_positive_rational(20, 200);
        OrbitCertificate cert = approximate_orbit(target, eps);
        CHECK(cert.g.s() == 0);
        CHECK(cert.g.lattice() == Lattice::Quad);
        CHECK((cert.achieved_dist2 - QuadScalar(eps * eps)).sign() <= 0);
        CHECK(cert.achieved_dist2 == dist2(cocycle(cert.g), target));
    }
}

TEST_CASE("approximate_orbit: input validation") {
    SparseVec nvec(Domain::N);
    CHECK_THROWS_AS(approximate_orbit(nvec, Rational(1, 10)), std::domain_error);
    SparseVec irr(Domain::Z);
    irr.set(0, QuadScalar::sqrt2());
    CHECK_THROWS_AS(approximate_orbit(irr, Rational(1, 10)), std::domain_error);
    CHECK_THROWS_AS(approximate_orbit(SparseVec(Domain::Z), Rational(0)), std::invalid_argument);
}

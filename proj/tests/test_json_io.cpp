#include "orbitforge/json_io.hpp"

#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace orbitforge;
using testutil::Rng;

namespace {

QuadScalar Q(long v) { return QuadScalar(v); }
QuadScalar Qr(long num, long den) { return QuadScalar(make_rational(num, den)); }

}  // namespace

TEST_CASE("scalar json uses decimal-string component pairs") {
    const QuadScalar x(Rational(289), Rational(-204));
    CHECK(to_json(x).dump() == R"({"a":["289","1"],"b":["-204","1"]})");
    CHECK(quad_from_json(to_json(x)) == x);

    // fractions keep exact numerator/denominator strings
    const QuadScalar half(Rational(1, 2), Rational(-3, 7));
    const Json j = to_json(half);
    CHECK(j["a"][0] == "1");
    CHECK(j["a"][1] == "2");
    CHECK(j["b"][0] == "-3");
    CHECK(j["b"][1] == "7");
    CHECK(quad_from_json(j) == half);

    // parser is liberal: textual and integer forms are accepted
    CHECK(quad_from_json(Json("3/5")) == Qr(3, 5));
    CHECK(quad_from_json(Json("1/2 + 3*sqrt2")) == QuadScalar(Rational(1, 2), Rational(3)));
    CHECK(quad_from_json(Json(7)) == Q(7));
    CHECK(quad_from_json(Json{{"a", {"2", "3"}}}) == Qr(2, 3));  // missing b defaults to 0

    CHECK_THROWS_AS(quad_from_json(Json{{"b", {"1", "2"}}}), std::invalid_argument);
    CHECK_THROWS_AS(quad_from_json(Json{{"a", {"1"}}}), std::invalid_argument);
    CHECK_THROWS_AS(quad_from_json(Json{{"a", {"x", "2"}}}), std::invalid_argument);

    Rng rng(91101);
    for (int i = 0; i < 50; ++i) {
        const QuadScalar r = rng.rand_quad(1000, 997);
        CHECK(quad_from_json(to_json(r)) == r);
    }
}

TEST_CASE("sequence json round-trips with sorted entries") {
    SparseVec v(Domain::Z);
    v.set(5, Qr(1, 2));
    v.set(-3, QuadScalar::sqrt2());
    v.set(0, Q(-2));
    const Json j = to_json(v);
    CHECK(j["domain"] == "Z");
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0][0] == -3);  // sorted by index
    CHECK(j["entries"][2][0] == 5);
    CHECK(sparse_from_json(j) == v);

    SparseVec n(Domain::N);
    n.set(2, Q(9));
    CHECK(to_json(n)["domain"] == "N");
    CHECK(sparse_from_json(to_json(n)) == n);
    CHECK(sparse_from_json(to_json(SparseVec(Domain::Z))).empty());

    CHECK_THROWS_AS(sparse_from_json(Json{{"domain", "Q"}, {"entries", Json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sparse_from_json(Json{{"domain", "Z"}}), std::invalid_argument);
    // N-domain vectors reject negative indices via the sequence constructor
    Json bad{{"domain", "N"}, {"entries", Json::array({Json::array({-1, to_json(Q(1))})})}};
    CHECK_THROWS(sparse_from_json(bad));

    Rng rng(91202);
    for (int i = 0; i < 25; ++i) {
        SparseVec r(Domain::Z);
        for (int k = rng.rand_long(0, 6); k > 0; --k)
            r.set(rng.rand_long(-40, 40), rng.rand_quad(20, 7));
        CHECK(sparse_from_json(to_json(r)) == r);
    }
}

TEST_CASE("wreath element json carries lattice, lamps and shift") {
    const WreathElement g = evaluate_word("t2a3TbA");
    const Json j = to_json(g);
    CHECK(j["lattice"] == "quad");
    CHECK(j["s"].get<long>() == g.s());
    CHECK(wreath_from_json(j) == g);

    const WreathElement h = evaluate_word("at2A3T");
    CHECK(to_json(h)["lattice"] == "int");
    CHECK(wreath_from_json(to_json(h)) == h);
    CHECK(wreath_from_json(to_json(WreathElement::identity(Lattice::Int))).is_identity());

    // integer lattice rejects sqrt2 lamps at construction
    Json bad{{"lattice", "int"},
             {"f", Json::array({Json::array({0, to_json(QuadScalar::sqrt2())})})},
             {"s", 0}};
    CHECK_THROWS(wreath_from_json(bad));
    CHECK_THROWS_AS(wreath_from_json(Json{{"lattice", "int"}, {"s", 0}}), std::invalid_argument);

    Rng rng(91303);
    for (int i = 0; i < 25; ++i) {
        SparseVec f(Domain::Z);
        for (int k = rng.rand_long(0, 4); k > 0; --k)
            f.set(rng.rand_long(-5, 5),
                  QuadScalar(Rational(rng.rand_long(-9, 9)), Rational(rng.rand_long(-9, 9))));
        const WreathElement r(Lattice::Quad, f, rng.rand_long(-4, 4));
        CHECK(wreath_from_json(to_json(r)) == r);
    }
}

TEST_CASE("stabilizer isometry json round-trips all three forms") {
    // identity
    const StabilizerIsometry id = StabilizerIsometry::identity(7);
    const Json ji = to_json(id);
    CHECK(ji["n"] == 7);
    CHECK(ji["identity"] == true);
    CHECK(stab_from_json(ji).form() == StabilizerIsometry::Form::Identity);
    CHECK(stab_from_json(ji).level() == 7);

    // dense exact rotation
    RatMat rot{{Rational(3, 5), Rational(-4, 5)}, {Rational(4, 5), Rational(3, 5)}};
    const StabilizerIsometry dense(1, rot);
    const Json jd = to_json(dense);
    CHECK(jd["Q"][0][0] == "3/5");
    const StabilizerIsometry dense2 = stab_from_json(jd);
    CHECK(dense2.form() == StabilizerIsometry::Form::Dense);
    PaddedVec probe(1, Rational(0));
    probe.set(0, Rational(1, 3));
    probe.set(1, Rational(-2));
    CHECK(dense.apply(probe) == dense2.apply(probe));

    // householder reflection with a padded vector
    PaddedVec w(40, Rational(-1));
    w.set(0, Rational(7, 2));
    w.set(13, Rational(5));
    const StabilizerIsometry house = StabilizerIsometry::householder_at(40, w);
    const Json jh = to_json(house);
    CHECK(jh["householder"]["fill"] == "-1");
    const StabilizerIsometry house2 = stab_from_json(jh);
    REQUIRE(house2.form() == StabilizerIsometry::Form::Householder);
    PaddedVec off(40, Rational(1, 4));
    off.set(13, Rational(3));
    CHECK(house.apply(off) == house2.apply(off));

    // a non-orthogonal dense matrix is rejected by the constructor
    Json bad{{"n", 1}, {"Q", {{"1", "1"}, {"0", "1"}}}};
    CHECK_THROWS(stab_from_json(bad));
    CHECK_THROWS_AS(stab_from_json(Json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("representation and cocycle json round-trip") {
    OrthoRep rep;
    rep.dim = 2;
    rep.mats = {QMat{{Q(0), Q(-1)}, {Q(1), Q(0)}},
                QMat{{QuadScalar(Rational(0), Rational(1, 2)),
                      QuadScalar(Rational(0), Rational(-1, 2))},
                     {QuadScalar(Rational(0), Rational(1, 2)),
                      QuadScalar(Rational(0), Rational(1, 2))}}};
    const Json j = to_json(rep);
    CHECK(j["dim"] == 2);
    CHECK(j["mats"][0][0][1] == "-1");
    const OrthoRep back = rep_from_json(j);
    CHECK(back.dim == rep.dim);
    CHECK(back.mats == rep.mats);

    // hand-written file form: plain rational strings
    const OrthoRep filed = rep_from_json(Json::parse(
        R"({"dim": 2, "mats": [[["3/5", "-4/5"], ["4/5", "3/5"]]]})"));
    CHECK(filed.mats[0][0][0] == Qr(3, 5));

    Cocycle b{{QVec{Qr(-2, 5), Qr(4, 5)}, QVec{Q(-1), Q(1)}}};
    const Json jb = to_json(b);
    CHECK(jb["vals"][0][0] == "-2/5");
    const Cocycle back_b = cocycle_from_json(jb);
    CHECK(back_b.vals == b.vals);

    CHECK_THROWS_AS(rep_from_json(Json{{"dim", 0}, {"mats", Json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cocycle_from_json(Json{{"dim", 2}}), std::invalid_argument);
}

TEST_CASE("report json keeps exact values and stays float-free") {
    // the lattice probe's flat layout: the exact value sits under its label
    SparseVec half(Domain::Z);
    for (long i = 1; i <= 16; ++i) half.set(i, Qr(1, 2));
    const Json j = to_json(lattice_report(half));
    CHECK(j["verdict"] == "coarse-dense-at-C");
    CHECK(j["certified"] == true);
    CHECK(j["distance2"] == "4");
    CHECK(j.dump().find("\"distance2\":\"4\"") != std::string::npos);

    // density report lines carry exact field values as text
    const Json d = to_json(density_report({SparseVec(Domain::Z)}, Rational(1, 10)));
    CHECK(d["verdict"] == "dense-at-eps");
    CHECK(d["target 0 dist2"] == "0");

    // enclosures are {lo, hi} string pairs
    const Json e = to_json(Enclosure{Rational(1, 3), Rational(1, 2)});
    CHECK(e.dump() == R"({"lo":"1/3","hi":"1/2"})");

    // no value in any emitted document is a json float
    for (const Json& doc : {j, d, e}) {
        bool has_float = false;
        std::function<void(const Json&)> walk = [&](const Json& node) {
            if (node.is_number_float()) has_float = true;
            if (node.is_object() || node.is_array())
                for (const auto& child : node) walk(child);
        };
        walk(doc);
        CHECK(!has_float);
    }
}

TEST_CASE("growth tables emit json rows and the csv form") {
    SparseVec d0(Domain::Z);
    d0.set(0, Q(1));
    const GrowthTable t = support_growth(Lattice::Int, {d0}, 3);
    const Json j = to_json(t);
    CHECK(j["verdict"] == "support-growth-table");
    CHECK(j["max_length"] == 3);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["length"] == 1);
    CHECK(j["rows"][0]["max"] == "1");
    CHECK(j["rows"][2]["max"] == "3");
    CHECK(j["rows"][0]["normalized"]["lo"] == "1");

    const std::string csv = growth_csv(t);
    CHECK(csv ==
          "length,direction,lo,hi\n"
          "1,0,1,1\n"
          "2,0,2,2\n"
          "3,0,3,3\n");
}

TEST_CASE("certificate and cohomology report emissions carry all fields") {
    const OrbitCertificate oc = approximate_orbit([] {
        SparseVec t(Domain::Z);
        t.set(0, Qr(1, 2));
        return t;
    }(), Rational(1, 20));
    const Json jo = to_json(oc);
    CHECK(jo["g"]["s"] == 0);
    CHECK(jo.contains("achieved_dist2"));
    CHECK(jo["eps2"] == "1/400");

    SparseVec x0(Domain::N), z(Domain::N);
    x0.set(0, Rational(2));
    z.set(0, Rational(1, 3));
    const ApproxCertificate ac = approximate_pair(x0, z, Rational(1, 4));
    const Json ja = to_json(ac);
    CHECK(ja["n"].get<long>() == ac.n);
    CHECK(parse_rational(ja["achieved_dist2"].get<std::string>()) == ac.achieved_dist2);

    Presentation zp = Presentation::parse("gens 1");
    OrthoRep rot{2, {QMat{{Q(0), Q(-1)}, {Q(1), Q(0)}}}};
    Cocycle b{{QVec{Q(1), Q(0)}}};
    const Json gap = to_json(central_gap_check(zp, rot, Word::parse("a", "a"), b));
    CHECK(gap["c2_exact"] == true);
    CHECK(gap["c2_bound"] == "2");
    CHECK(gap["bound_ok"] == true);
    CHECK(gap["words_checked"] == 16);

    const Json cls = to_json(h1_of_cocycle(zp, rot, b));
    CHECK(cls["is_coboundary"] == true);
    CHECK(cls["witness"][0] == "-1/2");

    const Json dec = to_json(decompose(rot));
    CHECK(dec["fully_split"] == true);
    CHECK(dec["blocks"][0]["dim"] == 2);

    const Json strong = to_json(is_strongly_cohomological(zp, rot));
    CHECK(strong["strongly_cohomological"] == false);
    CHECK(strong["witness"]["dim"] == 2);

    const Json probe = to_json(orbit_decomposition_probe(AffineActionSpec{rot, b}, 3));
    CHECK(probe["total_elements"] == 4);
    CHECK(probe["bound_certified"] == true);
    CHECK(probe["fixed_point"][0] == "1/2");
    CHECK(probe["rows"][1]["max_perp_norm2"] == "1");

    const Json fp = to_json(affine_fixed_point(AffineActionSpec{rot, b}));
    CHECK(fp["exists"] == true);
    CHECK(fp["point"][1] == "1/2");
}

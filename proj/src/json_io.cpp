#include "orbitforge/json_io.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace orbitforge {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

void need(bool ok, const std::string& what) {
    if (!ok) bad(what);
}

Integer int_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    need(j.is_string(), "integer must be a decimal string");
    try {
        return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        bad("malformed integer '" + j.get<std::string>() + "'");
    }
}

Json rat_pair(const Rational& q) {
    return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rat_from_pair(const Json& j) {
    need(j.is_array() && j.size() == 2, "rational must be [num, den]");
    return make_rational(int_from_json(j[0]), int_from_json(j[1]));
}

Rational rat_from_string(const Json& j) {
    need(j.is_string(), "rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

/** Exact value as its textual form: "p/q" when rational, else "a + b*sqrt2". */
std::string entry_str(const QuadScalar& x) {
    return x.is_rational() ? rational_to_string(x.a()) : x.to_string();
}

QuadScalar entry_from_json(const Json& j) {
    if (j.is_number_integer()) return QuadScalar(j.get<long>());
    need(j.is_string(), "matrix entry must be a string");
    return QuadScalar::parse(j.get<std::string>());
}

Json vec_json(const QVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(entry_str(x));
    return out;
}

QVec vec_from_json(const Json& j) {
    need(j.is_array(), "vector must be an array");
    QVec out;
    for (const auto& x : j) out.push_back(entry_from_json(x));
    return out;
}

Json mat_json(const QMat& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(vec_json(row));
    return out;
}

QMat mat_from_json(const Json& j) {
    need(j.is_array(), "matrix must be an array of rows");
    QMat out;
    for (const auto& row : j) out.push_back(vec_from_json(row));
    return out;
}

std::pair<long, QuadScalar> indexed_entry(const Json& j) {
    need(j.is_array() && j.size() == 2, "entry must be [index, scalar]");
    need(j[0].is_number_integer(), "entry index must be an integer");
    return {j[0].get<long>(), quad_from_json(j[1])};
}

}  // namespace

Json to_json(const QuadScalar& x) {
    return Json{{"a", rat_pair(x.a())}, {"b", rat_pair(x.b())}};
}

QuadScalar quad_from_json(const Json& j) {
    if (j.is_string()) return QuadScalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return QuadScalar(j.get<long>());
    need(j.is_object() && j.contains("a"), "scalar must have \"a\"");
    Rational b(0);
    if (j.contains("b")) b = rat_from_pair(j.at("b"));
    return QuadScalar(rat_from_pair(j.at("a")), std::move(b));
}

Json to_json(const SparseVec& v) {
    Json entries = Json::array();
    for (const auto& [i, x] : v.entries()) entries.push_back(Json::array({i, to_json(x)}));
    return Json{{"domain", v.domain() == Domain::Z ? "Z" : "N"}, {"entries", std::move(entries)}};
}

SparseVec sparse_from_json(const Json& j) {
    need(j.is_object() && j.contains("domain") && j.contains("entries"),
         "sequence must have \"domain\" and \"entries\"");
    const std::string d = j.at("domain").get<std::string>();
    need(d == "Z" || d == "N", "domain must be \"Z\" or \"N\"");
    SparseVec v(d == "Z" ? Domain::Z : Domain::N);
    need(j.at("entries").is_array(), "entries must be an array");
    for (const auto& e : j.at("entries")) {
        auto [i, x] = indexed_entry(e);
        v.set(i, x);
    }
    return v;
}

Json to_json(const WreathElement& g) {
    Json f = Json::array();
    for (const auto& [i, x] : g.f().entries()) f.push_back(Json::array({i, to_json(x)}));
    return Json{{"lattice", g.lattice() == Lattice::Int ? "int" : "quad"},
                {"f", std::move(f)},
                {"s", g.s()}};
}

WreathElement wreath_from_json(const Json& j) {
    need(j.is_object() && j.contains("lattice") && j.contains("f") && j.contains("s"),
         "wreath element must have \"lattice\", \"f\", \"s\"");
    const std::string lat = j.at("lattice").get<std::string>();
    need(lat == "int" || lat == "quad", "lattice must be \"int\" or \"quad\"");
    need(j.at("s").is_number_integer(), "shift must be an integer");
    SparseVec f(Domain::Z);
    for (const auto& e : j.at("f")) {
        auto [i, x] = indexed_entry(e);
        f.set(i, x);
    }
    return WreathElement(lat == "int" ? Lattice::Int : Lattice::Quad, std::move(f),
                         j.at("s").get<long>());
}

Json to_json(const StabilizerIsometry& g) {
    Json out{{"n", g.level()}};
    switch (g.form()) {
        case StabilizerIsometry::Form::Identity:
            out["identity"] = true;
            break;
        case StabilizerIsometry::Form::Dense: {
            Json rows = Json::array();
            for (const auto& row : g.to_dense()) {
                Json r = Json::array();
                for (const auto& q : row) r.push_back(rational_to_string(q));
                rows.push_back(std::move(r));
            }
            out["Q"] = std::move(rows);
            break;
        }
        case StabilizerIsometry::Form::Householder: {
            const PaddedVec& w = g.householder_vector();
            Json window = Json::array();
            for (const auto& [i, q] : w.window())
                window.push_back(Json::array({i, rational_to_string(q)}));
            out["householder"] =
                Json{{"fill", rational_to_string(w.fill())}, {"window", std::move(window)}};
            break;
        }
    }
    return out;
}

StabilizerIsometry stab_from_json(const Json& j) {
    need(j.is_object() && j.contains("n"), "isometry must have \"n\"");
    need(j.at("n").is_number_integer(), "\"n\" must be an integer");
    const long n = j.at("n").get<long>();
    if (j.contains("identity")) {
        need(j.at("identity").is_boolean() && j.at("identity").get<bool>(),
             "\"identity\" must be true when present");
        return StabilizerIsometry::identity(n);
    }
    if (j.contains("Q")) {
        need(j.at("Q").is_array(), "\"Q\" must be an array of rows");
        RatMat q;
        for (const auto& row : j.at("Q")) {
            need(row.is_array(), "\"Q\" rows must be arrays");
            q.emplace_back();
            for (const auto& e : row) q.back().push_back(rat_from_string(e));
        }
        return StabilizerIsometry(n, std::move(q));
    }
    need(j.contains("householder"), "isometry needs \"identity\", \"Q\" or \"householder\"");
    const Json& h = j.at("householder");
    need(h.is_object() && h.contains("fill") && h.contains("window"),
         "householder form must have \"fill\" and \"window\"");
    PaddedVec w(n, rat_from_string(h.at("fill")));
    for (const auto& e : h.at("window")) {
        need(e.is_array() && e.size() == 2 && e[0].is_number_integer(),
             "window entries must be [index, rational]");
        w.set(e[0].get<long>(), rat_from_string(e[1]));
    }
    return StabilizerIsometry::householder_at(n, std::move(w));
}

Json to_json(const OrthoRep& rep) {
    Json mats = Json::array();
    for (const auto& m : rep.mats) mats.push_back(mat_json(m));
    return Json{{"dim", rep.dim}, {"mats", std::move(mats)}};
}

OrthoRep rep_from_json(const Json& j) {
    need(j.is_object() && j.contains("dim") && j.contains("mats"),
         "representation must have \"dim\" and \"mats\"");
    need(j.at("dim").is_number_integer() && j.at("dim").get<long>() >= 1,
         "\"dim\" must be a positive integer");
    OrthoRep rep;
    rep.dim = static_cast<std::size_t>(j.at("dim").get<long>());
    need(j.at("mats").is_array(), "\"mats\" must be an array");
    for (const auto& m : j.at("mats")) rep.mats.push_back(mat_from_json(m));
    return rep;
}

Json to_json(const Cocycle& b) {
    Json vals = Json::array();
    for (const auto& v : b.vals) vals.push_back(vec_json(v));
    return Json{{"vals", std::move(vals)}};
}

Cocycle cocycle_from_json(const Json& j) {
    need(j.is_object() && j.contains("vals"), "cocycle must have \"vals\"");
    need(j.at("vals").is_array(), "\"vals\" must be an array");
    Cocycle b;
    for (const auto& v : j.at("vals")) b.vals.push_back(vec_from_json(v));
    return b;
}

Json to_json(const Enclosure& e) {
    return Json{{"lo", rational_to_string(e.lo)}, {"hi", rational_to_string(e.hi)}};
}

Json to_json(const OrbitCertificate& c) {
    return Json{{"g", to_json(c.g)},
                {"achieved_dist2", entry_str(c.achieved_dist2)},
                {"eps2", rational_to_string(c.eps2)}};
}

Json to_json(const ApproxCertificate& c) {
    return Json{{"n", c.n},
                {"g", to_json(c.g)},
                {"achieved_dist2", rational_to_string(c.achieved_dist2)},
                {"eps2", rational_to_string(c.eps2)}};
}

Json to_json(const ProbeReport& r) {
    Json out{{"description", r.description},
             {"verdict", r.verdict},
             {"certified", r.all_certified}};
    for (const auto& line : r.lines) {
        Json v = line.exact ? Json(entry_str(line.value)) : to_json(line.enclosure);
        if (!line.certified) v = Json{{"value", std::move(v)}, {"certified", false}};
        out[line.label] = std::move(v);
    }
    return out;
}

Json to_json(const GrowthTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back(Json{{"length", r.length},
                            {"direction", r.direction},
                            {"max", entry_str(r.raw_max)},
                            {"normalized", to_json(r.value)}});
    return Json{{"verdict", "support-growth-table"},
                {"max_length", t.max_length},
                {"points", t.point_count},
                {"rows", std::move(rows)}};
}

Json to_json(const CocycleClass& c) {
    Json out{{"is_coboundary", c.is_coboundary}};
    if (c.is_coboundary) out["witness"] = vec_json(c.witness);
    return out;
}

Json to_json(const Decomposition& d) {
    Json blocks = Json::array();
    for (const auto& b : d.blocks) {
        Json basis = Json::array();
        for (const auto& v : b.basis) basis.push_back(vec_json(v));
        blocks.push_back(Json{{"dim", b.basis.size()},
                              {"irreducible_certified", b.irreducible_certified},
                              {"split_obstructed", b.split_obstructed},
                              {"projector", mat_json(b.projector)},
                              {"basis", std::move(basis)}});
    }
    return Json{{"fully_split", d.fully_split}, {"blocks", std::move(blocks)}};
}

Json to_json(const StrongCohomologyReport& r) {
    Json out{{"strongly_cohomological", r.strongly_cohomological},
             {"all_blocks_split", r.all_blocks_split},
             {"block_h1", r.block_h1}};
    if (r.witness)
        out["witness"] = Json{{"dim", r.witness->basis.size()},
                              {"projector", mat_json(r.witness->projector)}};
    out["decomposition"] = to_json(r.decomposition);
    return out;
}

Json to_json(const CentralGapReport& r) {
    return Json{{"central_ok", r.central_ok},
                {"has_gap", r.has_gap},
                {"bz_norm2", entry_str(r.bz_norm2)},
                {"c2_exact", r.c2_exact},
                {"c2_bound", entry_str(r.c2_bound)},
                {"c_enclosure", to_json(r.c_enclosure)},
                {"words_checked", r.words_checked},
                {"max_disp2", entry_str(r.max_disp2)},
                {"bound_ok", r.bound_ok},
                {"h1", r.h1},
                {"h1_zero", r.h1_zero}};
}

Json to_json(const VanishOnCentreReport& r) {
    return Json{{"preconditions_ok", r.preconditions_ok},
                {"problems", r.problems},
                {"all_vanish", r.all_vanish},
                {"vanished", r.vanished}};
}

Json to_json(const FixedPointResult& r) {
    Json out{{"exists", r.exists}};
    if (r.exists) out["point"] = vec_json(r.point);
    return out;
}

Json to_json(const OrbitProbeReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"length", row.length},
                            {"new_elements", row.new_elements},
                            {"max_perp_norm2", entry_str(row.max_perp_norm2)}});
    Json out{{"total_elements", r.total_elements},
             {"fixed_point_exists", r.fixed_point_exists},
             {"bound_certified", r.bound_certified},
             {"rows", std::move(rows)}};
    if (r.fixed_point_exists) out["fixed_point"] = vec_json(r.fixed_point);
    return out;
}

std::string growth_csv(const GrowthTable& t) {
    std::ostringstream out;
    out << "length,direction,lo,hi\n";
    for (const auto& r : t.rows)
        out << r.length << ',' << r.direction << ',' << rational_to_string(r.value.lo) << ','
            << rational_to_string(r.value.hi) << '\n';
    return out.str();
}

}  // namespace orbitforge

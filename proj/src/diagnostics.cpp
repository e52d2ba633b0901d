#include "orbitforge/diagnostics.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace orbitforge {

namespace {

const QuadScalar kZero;

/** Enclosure of num / sqrt(den2) with safe endpoint orientation; den2 > 0. */
Enclosure ratio_enclosure(const QuadScalar& num, const QuadScalar& den2) {
    unsigned prec = 32;
    Enclosure d2 = den2.enclosure(prec);
    while (sgn(d2.lo) <= 0) {
        prec *= 2;
        d2 = den2.enclosure(prec);
    }
    const Enclosure den{sqrt_enclosure(d2.lo, prec).lo, sqrt_enclosure(d2.hi, prec).hi};
    const Enclosure n = num.enclosure(prec);
    Rational lo = std::min(n.lo / den.lo, n.lo / den.hi);
    Rational hi = std::max(n.hi / den.lo, n.hi / den.hi);
    return Enclosure{std::move(lo), std::move(hi)};
}

/** Total order on wreath elements for exact BFS dedup. */
struct WreathLess {
    bool operator()(const WreathElement& x, const WreathElement& y) const {
        if (x.s() != y.s()) return x.s() < y.s();
        const auto& ex = x.f().entries();
        const auto& ey = y.f().entries();
        auto ix = ex.begin();
        auto iy = ey.begin();
        for (; ix != ex.end() && iy != ey.end(); ++ix, ++iy) {
            if (ix->first != iy->first) return ix->first < iy->first;
            int c = cmp(ix->second.a(), iy->second.a());
            if (c == 0) c = cmp(ix->second.b(), iy->second.b());
            if (c != 0) return c < 0;
        }
        return ix == ex.end() && iy != ey.end();
    }
};

SparseVec as_z_domain(const SparseVec& v) {
    if (v.domain() == Domain::Z) return v;
    SparseVec out(Domain::Z);
    for (const auto& [i, x] : v.entries()) out.set(i, x);
    return out;
}

QVec as_dense(const SparseVec& v, std::size_t dim) {
    QVec out(dim, kZero);
    for (const auto& [i, x] : v.entries()) {
        if (i < 0 || static_cast<std::size_t>(i) >= dim)
            throw std::invalid_argument("support_growth: direction index outside dimension");
        out[static_cast<std::size_t>(i)] = x;
    }
    return out;
}

void require_affine_shape(const AffineActionSpec& a) {
    const std::size_t d = a.rep.dim;
    if (d == 0 || a.rep.mats.empty())
        throw std::invalid_argument("support_growth: empty affine action");
    if (a.b.vals.size() != a.rep.mats.size())
        throw std::invalid_argument("support_growth: cocycle/generator count mismatch");
    const QMat id = identity_mat(d);
    for (const QMat& m : a.rep.mats) {
        if (row_count(m) != d || col_count(m) != d)
            throw std::invalid_argument("support_growth: matrix dimension mismatch");
        if (mat_mul(transpose(m), m) != id)
            throw std::invalid_argument("support_growth: linear part not orthogonal");
    }
    for (const QVec& v : a.b.vals)
        if (v.size() != d)
            throw std::invalid_argument("support_growth: cocycle value dimension mismatch");
}

struct MaxTracker {
    std::vector<QuadScalar> maxima;  // running max per direction, starts at <0, dir> = 0

    explicit MaxTracker(std::size_t n) : maxima(n, kZero) {}
    void feed(std::size_t j, const QuadScalar& v) {
        if (v > maxima[j]) maxima[j] = v;
    }
};

GrowthTable wreath_growth(Lattice lat, const std::vector<SparseVec>& directions, long len) {
    std::vector<SparseVec> dirs;
    for (const auto& d : directions) dirs.push_back(as_z_domain(d));

    std::vector<WreathElement> gens;
    gens.push_back(WreathElement(lat, SparseVec(Domain::Z), 1));  // shift
    SparseVec d0(Domain::Z);
    d0.set(0, QuadScalar(1));
    gens.push_back(WreathElement(lat, d0, 0));  // lamp
    if (lat == Lattice::Quad) {
        SparseVec ds(Domain::Z);
        ds.set(0, QuadScalar::sqrt2());
        gens.push_back(WreathElement(lat, ds, 0));  // sqrt2 lamp
    }
    std::vector<WreathElement> moves;
    for (const auto& g : gens) {
        moves.push_back(g);
        moves.push_back(invert(g));
    }

    GrowthTable table;
    table.max_length = len;
    MaxTracker track(dirs.size());
    std::set<WreathElement, WreathLess> seen;
    std::vector<WreathElement> frontier{WreathElement::identity(lat)};
    seen.insert(frontier.front());
    for (long l = 1; l <= len; ++l) {
        std::vector<WreathElement> next;
        for (const auto& el : frontier) {
            for (const auto& mv : moves) {
                WreathElement child = compose(el, mv);
                if (!seen.insert(child).second) continue;
                const SparseVec p = cocycle(child);
                for (std::size_t j = 0; j < dirs.size(); ++j) track.feed(j, inner(p, dirs[j]));
                next.push_back(std::move(child));
            }
        }
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            GrowthRow row;
            row.length = l;
            row.direction = j;
            row.raw_max = track.maxima[j];
            row.value = norm2(dirs[j]).is_zero() ? Enclosure{Rational(0), Rational(0)}
                                                 : ratio_enclosure(row.raw_max, norm2(dirs[j]));
            table.rows.push_back(std::move(row));
        }
        frontier = std::move(next);
    }
    table.point_count = seen.size();
    return table;
}

GrowthTable affine_growth(const AffineActionSpec& act, const std::vector<SparseVec>& directions,
                          long len) {
    require_affine_shape(act);
    const std::size_t d = act.rep.dim;
    const std::size_t m = act.rep.mats.size();
    std::vector<QVec> dirs;
    std::vector<QuadScalar> dir_norm2;
    for (const auto& dir : directions) {
        dirs.push_back(as_dense(dir, d));
        dir_norm2.push_back(dot(dirs.back(), dirs.back()));
    }

    using Element = std::pair<QMat, QVec>;
    GrowthTable table;
    table.max_length = len;
    MaxTracker track(dirs.size());
    std::set<Element> seen;
    std::vector<Element> frontier{{identity_mat(d), QVec(d, kZero)}};
    seen.insert(frontier.front());
    for (long l = 1; l <= len; ++l) {
        std::vector<Element> next;
        for (const auto& [q, t] : frontier) {
            for (std::size_t g = 0; g < 2 * m; ++g) {
                Element child;
                if (g % 2 == 0) {
                    child.first = mat_mul(q, act.rep.mats[g / 2]);
                    child.second = vec_add(t, mat_vec(q, act.b.vals[g / 2]));
                } else {
                    child.first = mat_mul(q, transpose(act.rep.mats[g / 2]));
                    child.second = vec_sub(t, mat_vec(child.first, act.b.vals[g / 2]));
                }
                if (!seen.insert(child).second) continue;
                for (std::size_t j = 0; j < dirs.size(); ++j)
                    track.feed(j, dot(child.second, dirs[j]));
                next.push_back(std::move(child));
            }
        }
        for (std::size_t j = 0; j < dirs.size(); ++j) {
            GrowthRow row;
            row.length = l;
            row.direction = j;
            row.raw_max = track.maxima[j];
            row.value = dir_norm2[j].is_zero() ? Enclosure{Rational(0), Rational(0)}
                                               : ratio_enclosure(row.raw_max, dir_norm2[j]);
            table.rows.push_back(std::move(row));
        }
        frontier = std::move(next);
    }
    table.point_count = seen.size();
    return table;
}

long pick(std::mt19937_64& g, long lo, long hi) {
    // raw modulo keeps the stream implementation-independent (distributions
    // are not pinned by the standard); bias is irrelevant for probe seeding
    return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace

Rational lattice_distance2(const SparseVec& probe) {
    if (!probe.is_rational())
        throw std::invalid_argument("lattice_distance2: probe must be rational");
    Rational sum(0);
    for (const auto& [i, x] : probe.entries()) {
        (void)i;
        const Rational frac = x.a() - Rational(round_half_up(x.a()));
        sum += frac * frac;
    }
    return sum;
}

ProbeReport lattice_report(const SparseVec& probe) {
    const Rational d2 = lattice_distance2(probe);
    long n = 0;
    if (const auto lo = probe.min_index()) n = std::max(n, std::labs(*lo));
    if (const auto hi = probe.max_index()) n = std::max(n, std::labs(*hi));
    const Rational bound = Rational(2 * n + 1) / 4;

    ProbeReport report;
    report.description =
        "distance from the probe to the finitely supported integer vectors, support within {-" +
        std::to_string(n) + ".." + std::to_string(n) + "}";
    report.verdict = "coarse-dense-at-C";
    ProbeLine line;
    line.label = "distance2";
    line.exact = true;
    line.value = QuadScalar(d2);
    line.enclosure = Enclosure{d2, d2};
    line.certified = d2 <= bound;
    report.all_certified = line.certified;
    report.lines.push_back(std::move(line));
    ProbeLine cap;
    cap.label = "C2 = (2n+1)/4";
    cap.exact = true;
    cap.value = QuadScalar(bound);
    cap.enclosure = Enclosure{bound, bound};
    cap.certified = true;
    report.lines.push_back(std::move(cap));
    return report;
}

ProbeReport density_report(const std::vector<SparseVec>& targets, const Rational& eps) {
    ProbeReport report;
    report.description = "orbit of 0 under the wreath action approximates " +
                         std::to_string(targets.size()) + " target(s) to eps = " +
                         rational_to_string(eps);
    report.verdict = "dense-at-eps";
    const Rational eps2 = eps * eps;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        OrbitCertificate cert = approximate_orbit(targets[k], eps);
        ProbeLine line;
        line.label = "target " + std::to_string(k) + " dist2";
        line.exact = true;
        line.value = cert.achieved_dist2;
        line.enclosure = cert.achieved_dist2.enclosure(64);
        line.certified = (cert.achieved_dist2 - QuadScalar(eps2)).sign() <= 0;
        report.all_certified = report.all_certified && line.certified;
        report.lines.push_back(std::move(line));
    }
    return report;
}

GrowthTable support_growth(const GrowthAction& action, const std::vector<SparseVec>& directions,
                           long length_limit) {
    if (length_limit < 1) throw std::invalid_argument("support_growth: length limit must be >= 1");
    if (const auto* lat = std::get_if<Lattice>(&action))
        return wreath_growth(*lat, directions, length_limit);
    return affine_growth(std::get<AffineActionSpec>(action), directions, length_limit);
}

std::vector<SparseVec> default_growth_directions(const GrowthAction& action, long length_limit,
                                                 unsigned long seed) {
    long lo = 0, hi = 0;
    if (std::holds_alternative<Lattice>(action)) {
        // a lamp at position k needs |k| shifts plus one lamp move
        lo = -(length_limit - 1);
        hi = length_limit - 1;
    } else {
        hi = static_cast<long>(std::get<AffineActionSpec>(action).rep.dim) - 1;
    }
    std::vector<SparseVec> dirs;
    for (long i = lo; i <= hi; ++i) {
        SparseVec d(Domain::Z);
        d.set(i, QuadScalar(1));
        dirs.push_back(std::move(d));
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 8; ++k) {
        SparseVec d(Domain::Z);
        for (long i = lo; i <= hi; ++i)
            d.set(i, QuadScalar(make_rational(pick(rng, -3, 3), pick(rng, 1, 4))));
        if (d.empty()) d.set(lo, QuadScalar(1));
        dirs.push_back(std::move(d));
    }
    return dirs;
}

}  // namespace orbitforge

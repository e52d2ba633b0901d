#include "orbitforge/verify.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orbitforge/cohomology.hpp"
#include "orbitforge/diagnostics.hpp"
#include "orbitforge/presentation.hpp"
#include "orbitforge/sparse_vec.hpp"
#include "orbitforge/stabilizer.hpp"
#include "orbitforge/wreath.hpp"

namespace orbitforge {

namespace {

// Deterministic draws: raw engine words reduced by hand, so the stream never
// depends on the standard library's distribution implementations.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(unsigned long seed) : eng(seed) {}

    long pick(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
    }
    Rational rat(long max_abs_num, long max_den) {
        return make_rational(Integer(pick(-max_abs_num, max_abs_num)), Integer(pick(1, max_den)));
    }
    QuadScalar quad(long max_abs_num, long max_den) {
        return QuadScalar(rat(max_abs_num, max_den), rat(max_abs_num, max_den));
    }
};

QuadScalar Q(long v) { return QuadScalar(v); }
QuadScalar Qr(long n, long d) { return QuadScalar(make_rational(n, d)); }

QMat rot2(long cn, long cd, long sn, long sd) {
    return {{Qr(cn, cd), Qr(-sn, sd)}, {Qr(sn, sd), Qr(cn, cd)}};
}
QMat rot90() { return rot2(0, 1, 1, 1); }
QMat rot35() { return rot2(3, 5, 4, 5); }
QMat rot513() { return rot2(5, 13, 12, 13); }
QMat refl35() { return {{Qr(3, 5), Qr(4, 5)}, {Qr(4, 5), Qr(-3, 5)}}; }
QMat neg_id(std::size_t d) { return mat_scale(identity_mat(d), Q(-1)); }

QMat direct_sum(const QMat& a, const QMat& b) {
    const std::size_t da = row_count(a), db = row_count(b);
    QMat m(da + db, QVec(da + db, Q(0)));
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) m[i][j] = a[i][j];
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) m[da + i][da + j] = b[i][j];
    return m;
}

QMat plane_rot4(std::size_t i, std::size_t j) {
    QMat m = identity_mat(4);
    m[i][i] = Qr(3, 5), m[i][j] = Qr(-4, 5);
    m[j][i] = Qr(4, 5), m[j][j] = Qr(3, 5);
    return m;
}

/** Chained plane rotations whose Gram spectrum leaves the working field. */
QMat twisted_rot4() {
    return mat_mul(mat_mul(plane_rot4(0, 1), plane_rot4(1, 2)), plane_rot4(2, 3));
}

QMat random_orthogonal(Rng& rng, std::size_t d) {
    QMat m = identity_mat(d);
    for (int factor = 0; factor < 3; ++factor) {
        if (d >= 2 && rng.pick(0, 1) == 0) {
            const auto i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(d) - 2));
            const auto j = static_cast<std::size_t>(
                rng.pick(static_cast<long>(i) + 1, static_cast<long>(d) - 1));
            QMat rot = identity_mat(d);
            if (rng.pick(0, 1) == 0) {
                rot[i][i] = Qr(3, 5), rot[i][j] = Qr(-4, 5);
                rot[j][i] = Qr(4, 5), rot[j][j] = Qr(3, 5);
            } else {
                rot[i][i] = Qr(5, 13), rot[i][j] = Qr(-12, 13);
                rot[j][i] = Qr(12, 13), rot[j][j] = Qr(5, 13);
            }
            m = mat_mul(m, rot);
        } else {
            QMat sp = identity_mat(d);
            if (d >= 2) {
                const auto i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(d) - 1));
                const auto j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(d) - 1));
                std::swap(sp[i], sp[j]);
            }
            const auto k = static_cast<std::size_t>(rng.pick(0, static_cast<long>(d) - 1));
            for (auto& x : sp[k]) x = -x;
            m = mat_mul(m, sp);
        }
    }
    return m;
}

OrthoRep conjugate(const OrthoRep& r, const QMat& q) {
    OrthoRep out;
    out.dim = r.dim;
    for (const auto& m : r.mats) out.mats.push_back(mat_mul(mat_mul(q, m), transpose(q)));
    return out;
}

Cocycle coboundary_of(const OrthoRep& r, const QVec& v) {
    Cocycle b;
    for (const auto& m : r.mats) b.vals.push_back(vec_sub(mat_vec(m, v), v));
    return b;
}

Cocycle random_cocycle(Rng& rng, const Presentation& p, const OrthoRep& r) {
    const std::vector<Cocycle> basis = cocycle_space(p, r);
    Cocycle out;
    out.vals.assign(r.mats.size(), QVec(r.dim, Q(0)));
    bool nonzero = false;
    for (const auto& c : basis) {
        const QuadScalar coeff(rng.rat(3, 2));
        if (coeff.is_zero()) continue;
        nonzero = true;
        for (std::size_t g = 0; g < out.vals.size(); ++g)
            out.vals[g] = vec_add(out.vals[g], vec_scale(c.vals[g], coeff));
    }
    if (!nonzero && !basis.empty()) out = basis.front();
    return out;
}

const char* kHeisenberg = "gens 3\nrel abABC\nrel acAC\nrel bcBC\ncentral c\nnilpotent\n";

struct CorpusRep {
    Presentation pres;
    OrthoRep rep;
    bool nilpotent_with_centre = false;  // the three-generator family
};

/** 30 representations of Z, Z^2 and the Heisenberg group, none with invariant
 *  vectors: the finite-dimensional shadow corpus for the vanishing claims. */
std::vector<CorpusRep> hct_corpus(Rng& rng) {
    const Presentation z = Presentation::parse("gens 1");
    const Presentation z2 = Presentation::parse("gens 2\nrel abAB");
    const Presentation heis = Presentation::parse(kHeisenberg);

    std::vector<CorpusRep> out;
    const std::vector<QMat> z_mats = {
        QMat{{Q(-1)}},
        rot90(),
        rot35(),
        rot513(),
        neg_id(2),
        direct_sum(rot35(), rot90()),
        neg_id(3),
        direct_sum(QMat{{Q(-1)}}, rot35()),
        direct_sum(rot90(), rot513()),
        twisted_rot4(),
    };
    for (const QMat& m : z_mats) {
        const QMat q = random_orthogonal(rng, row_count(m));
        out.push_back({z, conjugate(OrthoRep{row_count(m), {m}}, q), false});
    }

    // commuting pairs, first generator without eigenvalue 1
    const std::vector<std::pair<QMat, QMat>> pairs = {
        {rot90(), rot35()},
        {rot35(), rot513()},
        {neg_id(2), rot90()},
        {rot513(), mat_mul(rot35(), rot35())},
        {direct_sum(QMat{{Q(-1)}}, rot35()), direct_sum(QMat{{Q(-1)}}, rot90())},
        {direct_sum(rot90(), rot35()), direct_sum(rot35(), rot513())},
        {direct_sum(rot35(), rot513()), direct_sum(rot90(), rot90())},
        {neg_id(3), direct_sum(QMat{{Q(1)}}, rot35())},
        {direct_sum(rot513(), rot90()), neg_id(4)},
        {direct_sum(neg_id(2), rot35()), direct_sum(rot90(), rot513())},
    };
    for (const auto& [a, b] : pairs) {
        const QMat q = random_orthogonal(rng, row_count(a));
        out.push_back({z2, conjugate(OrthoRep{row_count(a), {a, b}}, q), false});
    }
    for (const auto& [a, b] : pairs) {
        const QMat q = random_orthogonal(rng, row_count(a));
        OrthoRep r{row_count(a), {a, b, identity_mat(row_count(a))}};
        out.push_back({heis, conjugate(r, q), true});
    }
    return out;
}

using Clock = std::chrono::steady_clock;

CriterionOutcome criterion_1(unsigned long seed) {
    CriterionOutcome out{1, "dense-orbit-construction", false, "", 0};
    Rng rng(seed * 1000 + 1);
    const long total = 500;
    long certified = 0;
    for (long k = 0; k < total; ++k) {
        SparseVec target(Domain::Z);
        for (long j = rng.pick(1, 8); j > 0; --j) target.set(rng.pick(-10, 10), rng.rat(20, 9));
        Rational eps(1);
        for (long e = 1 + k % 6; e > 0; --e) eps /= 10;  // 10^-1 .. 10^-6
        const OrbitCertificate cert = approximate_orbit(target, eps);
        const bool ok = cert.g.s() == 0 && cert.eps2 == eps * eps &&
                        dist2(cocycle(cert.g), target) == cert.achieved_dist2 &&
                        (cert.achieved_dist2 - QuadScalar(cert.eps2)).sign() <= 0;
        certified += ok ? 1 : 0;
    }
    out.pass = certified == total;
    out.detail = std::to_string(certified) + "/" + std::to_string(total) +
                 " targets certified exactly, eps down to 1/1000000";
    return out;
}

CriterionOutcome criterion_2(unsigned long seed) {
    CriterionOutcome out{2, "flat-distance-formula", false, "", 0};
    Rng rng(seed * 1000 + 2);
    const long total = 1000;
    long matches = 0;
    for (long k = 0; k < total; ++k) {
        SparseVec v(Domain::N);
        for (long j = rng.pick(0, 6); j > 0; --j) v.set(rng.pick(0, 15), rng.quad(9, 4));
        const long n = rng.pick(0, 20);
        // independent closed form: n+1 - 2*sum_{j<=n} v_j + sum_{j<=n} v_j^2
        QuadScalar closed(Rational(n + 1));
        for (const auto& [i, x] : v.entries()) {
            if (i > n) continue;
            closed -= Q(2) * x;
            closed += x * x;
        }
        matches += dist2_to_An(v, n) == closed ? 1 : 0;
    }
    bool zeros_ok = true;
    const SparseVec zero(Domain::N);
    for (long n = 0; n <= 10000; ++n)
        zeros_ok = zeros_ok && dist2_to_An(zero, n) == QuadScalar(Rational(n + 1));
    out.pass = matches == total && zeros_ok;
    out.detail = std::to_string(matches) + "/" + std::to_string(total) +
                 " closed-form matches; d(0,A_n)^2 = n+1 for n <= 10000: " +
                 (zeros_ok ? "exact" : "FAILED");
    return out;
}

CriterionOutcome criterion_3(unsigned long seed) {
    CriterionOutcome out{3, "stabilizer-tower-density", false, "", 0};
    Rng rng(seed * 1000 + 3);
    const long total = 200;
    // The certifying level grows like (|A - B| / eps)^2 for the squared flat
    // distances A, B of the pair, so tighter eps slots draw vectors closer to
    // the all-ones flat to stay well inside the default scan ceiling.
    struct Slot {
        Rational eps;
        long support_max, off_num, off_den;
    };
    const Slot slots[3] = {
        {Rational(1, 4), 5, 3, 3}, {Rational(1, 10), 5, 2, 3}, {Rational(1, 50), 2, 1, 4}};
    long certified = 0;
    std::vector<StabilizerIsometry> produced;
    for (long k = 0; k < total; ++k) {
        const Slot& sl = slots[k % 3];
        SparseVec x0(Domain::N), zt(Domain::N);
        for (long j = rng.pick(1, sl.support_max); j > 0; --j)
            x0.set(rng.pick(0, 9), QuadScalar(Rational(1) + rng.rat(sl.off_num, sl.off_den)));
        for (long j = rng.pick(1, sl.support_max); j > 0; --j)
            zt.set(rng.pick(0, 9), QuadScalar(Rational(1) + rng.rat(sl.off_num, sl.off_den)));
        const ApproxCertificate cert = approximate_pair(x0, zt, sl.eps);
        certified += cert.achieved_dist2 <= cert.eps2 && cert.eps2 == sl.eps * sl.eps ? 1 : 0;
        produced.push_back(cert.g);
    }
    // every finite set of produced isometries has the common fixed point:
    // sampled on consecutive batches and on the full collection
    long batches_ok = 0;
    const long batch = 20;
    for (long start = 0; start + batch <= total; start += batch) {
        std::vector<StabilizerIsometry> set(produced.begin() + start,
                                            produced.begin() + start + batch);
        batches_ok += fixed_point_witness(set).empty() ? 0 : 1;
    }
    const SparseVec ones = fixed_point_witness(produced);
    bool full_ok = !ones.empty();
    for (std::size_t i = 0; i < produced.size(); i += 37)  // independent spot check
        full_ok = full_ok && act_stab(produced[i], ones) == ones;
    out.pass = certified == total && batches_ok == total / batch && full_ok;
    out.detail = std::to_string(certified) + "/" + std::to_string(total) +
                 " pairs certified; fixed point verified on " + std::to_string(batches_ok) + "/" +
                 std::to_string(total / batch) + " batches and the full set";
    return out;
}

CriterionOutcome criterion_4(unsigned long) {
    CriterionOutcome out{4, "integer-lattice-example", false, "", 0};
    long exact = 0;
    for (long n = 1; n <= 32; ++n) {
        SparseVec probe(Domain::Z);
        for (long i = 1; i <= 4 * n; ++i) probe.set(i, Qr(1, 2));
        exact += lattice_distance2(probe) == Rational(n) ? 1 : 0;
    }
    out.pass = exact == 32;
    out.detail = std::to_string(exact) + "/32 levels with distance^2 = n exactly";
    return out;
}

CriterionOutcome criterion_5(unsigned long seed) {
    CriterionOutcome out{5, "cocycle-isometry-axioms", false, "", 0};
    Rng rng(seed * 1000 + 5);
    const char letters[] = "tabTAB";
    auto random_word = [&](long max_len) {
        std::string w;
        for (long j = rng.pick(1, max_len); j > 0; --j) w.push_back(letters[rng.pick(0, 5)]);
        return evaluate_word(Word::parse("tab", w), Lattice::Quad);
    };
    auto random_vec = [&] {
        SparseVec v(Domain::Z);
        for (long j = rng.pick(0, 4); j > 0; --j) v.set(rng.pick(-6, 6), rng.quad(5, 3));
        return v;
    };
    long ok = 0;
    for (int k = 0; k < 250; ++k) {  // associativity
        const WreathElement x = random_word(12), y = random_word(12), z = random_word(12);
        ok += compose(compose(x, y), z) == compose(x, compose(y, z)) ? 1 : 0;
    }
    for (int k = 0; k < 250; ++k) {  // inverses
        const WreathElement g = random_word(12);
        ok += compose(g, invert(g)).is_identity() && compose(invert(g), g).is_identity() ? 1 : 0;
    }
    for (int k = 0; k < 250; ++k) {  // act/compose compatibility and isometry
        const WreathElement x = random_word(12), y = random_word(12);
        const SparseVec u = random_vec(), v = random_vec();
        const bool compat = act(compose(x, y), u) == act(x, act(y, u));
        const bool isometric = dist2(act(x, u), act(x, v)) == dist2(u, v);
        ok += compat && isometric ? 1 : 0;
    }
    for (int k = 0; k < 250; ++k) {  // cocycle rule b(gh) = b(g) + pi(g) b(h)
        const WreathElement x = random_word(12), y = random_word(12);
        ok += cocycle(compose(x, y)) == cocycle(x) + shift(cocycle(y), x.s()) ? 1 : 0;
    }
    out.pass = ok == 1000;
    out.detail = std::to_string(ok) + "/1000 exact equalities over words of length <= 12";
    return out;
}

CriterionOutcome criterion_6(unsigned long seed) {
    CriterionOutcome out{6, "central-gap-bound", false, "", 0};
    Rng rng(seed * 1000 + 6);
    const Presentation z = Presentation::parse("gens 1");
    const Presentation z2 = Presentation::parse("gens 2\nrel abAB");
    const Presentation heis = Presentation::parse(kHeisenberg);

    struct Case {
        Presentation pres;
        OrthoRep rep;
        const char* zword;
    };
    std::vector<Case> cases;
    const std::vector<QMat> z_mats = {QMat{{Q(-1)}},
                                      rot90(),
                                      rot35(),
                                      rot513(),
                                      neg_id(2),
                                      direct_sum(rot90(), rot35()),
                                      neg_id(3),
                                      twisted_rot4()};
    for (const QMat& m : z_mats) cases.push_back({z, OrthoRep{row_count(m), {m}}, "a"});
    const std::vector<std::pair<QMat, QMat>> pairs = {
        {rot90(), rot35()},
        {rot35(), rot513()},
        {neg_id(2), rot35()},
        {rot513(), rot90()},
        {direct_sum(rot90(), rot35()), direct_sum(rot35(), rot90())},
        {direct_sum(rot35(), rot513()), direct_sum(rot513(), rot35())},
        {neg_id(3), direct_sum(QMat{{Q(1)}}, rot90())},
        {direct_sum(neg_id(2), rot90()), direct_sum(rot35(), neg_id(2))},
    };
    for (const auto& [a, b] : pairs) cases.push_back({z2, OrthoRep{row_count(a), {a, b}}, "a"});
    // reflection + quarter turn generate a dihedral image with centre -1,
    // realizing the three-generator presentation with pi(c) = -1
    for (int k = 0; k < 4; ++k) {
        const QMat q = random_orthogonal(rng, 2);
        const OrthoRep gap_rep{2, {refl35(), rot90(), neg_id(2)}};
        cases.push_back({heis, conjugate(gap_rep, q), "c"});
    }

    long bounded = 0, h1_zero = 0;
    for (auto& c : cases) {
        const Cocycle b = random_cocycle(rng, c.pres, c.rep);
        const Word zw = Word::parse(c.pres.alphabet(), c.zword);
        const CentralGapReport rep = central_gap_check(c.pres, c.rep, zw, b, 8);
        bounded += rep.central_ok && rep.has_gap && rep.bound_ok ? 1 : 0;
        h1_zero += rep.h1_zero ? 1 : 0;
    }
    out.pass = bounded == static_cast<long>(cases.size()) &&
               h1_zero == static_cast<long>(cases.size());
    out.detail = std::to_string(bounded) + "/" + std::to_string(cases.size()) +
                 " certified gaps with all length-8 extensions bounded; " +
                 std::to_string(h1_zero) + "/" + std::to_string(cases.size()) + " with H1 = 0";
    return out;
}

CriterionOutcome criterion_7(unsigned long seed) {
    CriterionOutcome out{7, "nilpotent-vanishing", false, "", 0};
    Rng rng(seed * 1000 + 7);
    const std::vector<CorpusRep> corpus = hct_corpus(rng);
    long valid = 0, h1_zero = 0, not_strong = 0, vanishing = 0, nilpotent_count = 0;
    for (const auto& c : corpus) {
        if (!validate_rep(c.pres, c.rep).ok || !invariant_vectors(c.rep).empty()) continue;
        ++valid;
        h1_zero += h1_dim(c.pres, c.rep) == 0 ? 1 : 0;
        not_strong += is_strongly_cohomological(c.pres, c.rep).strongly_cohomological ? 0 : 1;
        if (!c.nilpotent_with_centre) continue;
        ++nilpotent_count;
        bool all = true;
        for (const Cocycle& b : cocycle_space(c.pres, c.rep)) {
            const VanishOnCentreReport v = vanish_on_centre_check(c.pres, c.rep, b);
            all = all && v.preconditions_ok && v.all_vanish;
        }
        vanishing += all ? 1 : 0;
    }
    const long total = static_cast<long>(corpus.size());
    out.pass = valid == total && h1_zero == total && not_strong == total &&
               vanishing == nilpotent_count && nilpotent_count == 10;
    out.detail = std::to_string(h1_zero) + "/" + std::to_string(total) +
                 " invariant-free reps with H1 = 0; strongly-cohomological implication holds on " +
                 std::to_string(not_strong) + "/" + std::to_string(total) +
                 "; central cocycle values vanish on " + std::to_string(vanishing) + "/" +
                 std::to_string(nilpotent_count) + " three-generator reps";
    return out;
}

CriterionOutcome criterion_8(unsigned long seed) {
    CriterionOutcome out{8, "free-group-contrast", false, "", 0};
    Rng rng(seed * 1000 + 8);
    const Presentation f2 = Presentation::parse("gens 2");
    const long total = 10;
    long strong = 0, blocks_positive = 0, formula = 0;
    for (long k = 0; k < total; ++k) {
        const std::size_t d = static_cast<std::size_t>(rng.pick(1, 4));
        OrthoRep rep{d, {random_orthogonal(rng, d), random_orthogonal(rng, d)}};
        const StrongCohomologyReport r = is_strongly_cohomological(f2, rep);
        strong += r.strongly_cohomological ? 1 : 0;
        bool positive = !r.block_h1.empty();
        for (long h : r.block_h1) positive = positive && h > 0;
        blocks_positive += positive ? 1 : 0;
        const long inv = static_cast<long>(invariant_vectors(rep).size());
        formula += h1_dim(f2, rep) == static_cast<long>(d) + inv ? 1 : 0;
    }
    out.pass = strong == total && blocks_positive == total && formula == total;
    out.detail = std::to_string(strong) + "/" + std::to_string(total) +
                 " strongly cohomological with every block H1 > 0; dim H1 = d + dim(inv) exact on " +
                 std::to_string(formula) + "/" + std::to_string(total);
    return out;
}

CriterionOutcome criterion_9(unsigned long seed) {
    CriterionOutcome out{9, "orbit-radius-certificate", false, "", 0};
    Rng rng(seed * 1000 + 7);  // same corpus stream as criterion 7
    const std::vector<CorpusRep> corpus = hct_corpus(rng);
    Rng brng(seed * 1000 + 9);
    long certified = 0;
    for (const auto& c : corpus) {
        QVec v(c.rep.dim, Q(0));
        for (auto& x : v) x = QuadScalar(brng.rat(4, 3));
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || !x.is_zero();
        if (!nonzero) v[0] = Q(1);
        const AffineActionSpec action{c.rep, coboundary_of(c.rep, v)};
        const FixedPointResult fp = affine_fixed_point(action);
        const OrbitProbeReport probe = orbit_decomposition_probe(action, 8);
        certified += fp.exists && probe.fixed_point_exists && probe.bound_certified ? 1 : 0;
    }
    long translations = 0;
    for (int k = 0; k < 5; ++k) {
        const std::size_t d = static_cast<std::size_t>(brng.pick(1, 3));
        OrthoRep triv{d, {identity_mat(d)}};
        Cocycle b;
        b.vals.push_back(QVec(d, Q(0)));
        for (auto& x : b.vals[0]) x = QuadScalar(brng.rat(4, 3));
        const OrbitProbeReport probe = orbit_decomposition_probe(AffineActionSpec{triv, b}, 8);
        bool flat = probe.bound_certified;
        for (const auto& row : probe.rows) flat = flat && row.max_perp_norm2.is_zero();
        translations += flat ? 1 : 0;
    }
    const long total = static_cast<long>(corpus.size());
    out.pass = certified == total && translations == 5;
    out.detail = std::to_string(certified) + "/" + std::to_string(total) +
                 " orbit radii within 2||v|| at all lengths <= 8; " + std::to_string(translations) +
                 "/5 pure translations at perpendicular radius 0";
    return out;
}

std::vector<CriterionOutcome> run_core(unsigned long seed) {
    using Fn = CriterionOutcome (*)(unsigned long);
    const Fn fns[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                      criterion_6, criterion_7, criterion_8, criterion_9};
    const char* names[] = {"dense-orbit-construction", "flat-distance-formula",
                           "stabilizer-tower-density", "integer-lattice-example",
                           "cocycle-isometry-axioms",  "central-gap-bound",
                           "nilpotent-vanishing",      "free-group-contrast",
                           "orbit-radius-certificate"};
    std::vector<CriterionOutcome> out;
    for (std::size_t i = 0; i < 9; ++i) {
        const auto t0 = Clock::now();
        CriterionOutcome c;
        try {
            c = fns[i](seed);
        } catch (const std::exception& e) {
            c = CriterionOutcome{static_cast<int>(i) + 1, names[i], false,
                                 std::string("exception: ") + e.what(), 0};
        }
        const auto t1 = Clock::now();
        c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(c));
    }
    return out;
}

std::string render(const std::vector<CriterionOutcome>& criteria) {
    std::ostringstream out;
    for (const auto& c : criteria) {
        char head[64];
        std::snprintf(head, sizeof(head), "criterion %02d %-26s", c.number, c.name.c_str());
        out << head << (c.pass ? "PASS" : "FAIL") << "  " << c.detail << "\n";
    }
    return out.str();
}

}  // namespace

VerifyReport verify_claims(const VerifyOptions& opts) {
    VerifyReport report;
    report.criteria = run_core(opts.seed);
    const std::string first = render(report.criteria);

    // determinism is claim 10: the whole suite re-runs and must reproduce
    const auto t0 = Clock::now();
    const std::string second = render(run_core(opts.seed));
    const auto t1 = Clock::now();
    CriterionOutcome det{10, "report-determinism", first == second,
                         first == second ? "two full runs byte-identical"
                                         : "second run diverged from the first",
                         std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()};
    report.criteria.push_back(det);

    report.all_pass = true;
    for (const auto& c : report.criteria) report.all_pass = report.all_pass && c.pass;
    report.text = render(report.criteria);
    return report;
}

}  // namespace orbitforge

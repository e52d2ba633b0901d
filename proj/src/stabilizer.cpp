#include "orbitforge/stabilizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "orbitforge/errors.hpp"

namespace orbitforge {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

// ---------------------------------------------------------------------------
// PaddedVec

Rational PaddedVec::at(long i) const {
    if (i < 0 || i > n_) throw std::out_of_range("PaddedVec::at: index outside 0..n");
    auto it = window_.find(i);
    return it == window_.end() ? fill_ : it->second;
}

void PaddedVec::set(long i, const Rational& v) {
    if (i < 0 || i > n_) throw std::out_of_range("PaddedVec::set: index outside 0..n");
    if (v == fill_)
        window_.erase(i);
    else
        window_[i] = v;
    normalize();
}

void PaddedVec::normalize() {
    // A fully covered window leaves no index reading the fill; pin it to 0.
    if (static_cast<long>(window_.size()) != n_ + 1 || sgn(fill_) == 0) return;
    fill_ = 0;
    for (auto it = window_.begin(); it != window_.end();) {
        if (sgn(it->second) == 0)
            it = window_.erase(it);
        else
            ++it;
    }
}

PaddedVec PaddedVec::operator-() const {
    PaddedVec r(n_, -fill_);
    for (const auto& [i, v] : window_) r.window_[i] = -v;
    return r;
}

namespace {

// Merges y into x entrywise via op; restores canonical form afterwards.
template <typename Op>
void merge_into(PaddedVec& x, const PaddedVec& y, Op op) {
    if (x.top_index() != y.top_index())
        throw std::invalid_argument("PaddedVec: dimension mismatch");
    PaddedVec r(x.top_index(), op(x.fill(), y.fill()));
    auto ix = x.window().begin(), ex = x.window().end();
    auto iy = y.window().begin(), ey = y.window().end();
    while (ix != ex || iy != ey) {
        long i;
        Rational a = x.fill(), b = y.fill();
        if (iy == ey || (ix != ex && ix->first < iy->first)) {
            i = ix->first;
            a = ix->second;
            ++ix;
        } else if (ix == ex || iy->first < ix->first) {
            i = iy->first;
            b = iy->second;
            ++iy;
        } else {
            i = ix->first;
            a = ix->second;
            b = iy->second;
            ++ix;
            ++iy;
        }
        r.set(i, op(a, b));
    }
    x = std::move(r);
}

}  // namespace

PaddedVec& PaddedVec::operator+=(const PaddedVec& o) {
    merge_into(*this, o, [](const Rational& a, const Rational& b) { return Rational(a + b); });
    return *this;
}

PaddedVec& PaddedVec::operator-=(const PaddedVec& o) {
    merge_into(*this, o, [](const Rational& a, const Rational& b) { return Rational(a - b); });
    return *this;
}

PaddedVec& PaddedVec::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        window_.clear();
        fill_ = 0;
        return *this;
    }
    fill_ *= c;
    for (auto& [i, v] : window_) v *= c;
    return *this;
}

PaddedVec operator+(PaddedVec x, const PaddedVec& y) { return x += y; }
PaddedVec operator-(PaddedVec x, const PaddedVec& y) { return x -= y; }
PaddedVec operator*(PaddedVec x, const Rational& c) { return x *= c; }

std::vector<Rational> PaddedVec::to_dense() const {
    if (n_ > 4096) throw std::domain_error("PaddedVec::to_dense: vector too large to materialize");
    std::vector<Rational> out(static_cast<size_t>(n_ + 1), fill_);
    for (const auto& [i, v] : window_) out[static_cast<size_t>(i)] = v;
    return out;
}

Rational inner(const PaddedVec& x, const PaddedVec& y) {
    if (x.top_index() != y.top_index())
        throw std::invalid_argument("inner: dimension mismatch");
    Rational acc = 0;
    long covered = 0;
    auto ix = x.window().begin(), ex = x.window().end();
    auto iy = y.window().begin(), ey = y.window().end();
    while (ix != ex || iy != ey) {
        Rational a = x.fill(), b = y.fill();
        if (iy == ey || (ix != ex && ix->first < iy->first)) {
            a = ix->second;
            ++ix;
        } else if (ix == ex || iy->first < ix->first) {
            b = iy->second;
            ++iy;
        } else {
            a = ix->second;
            b = iy->second;
            ++ix;
            ++iy;
        }
        acc += a * b;
        ++covered;
    }
    acc += Rational(x.dim() - covered) * x.fill() * y.fill();
    return acc;
}

Rational norm2(const PaddedVec& x) { return inner(x, x); }

PaddedVec offsets_against_ones(const SparseVec& v, long n) {
    PaddedVec out(n, Rational(-1));
    for (const auto& [i, val] : v.entries()) {
        if (i > n) break;
        out.set(i, Rational(val.a() - 1));
    }
    return out;
}

// ---------------------------------------------------------------------------
// StabilizerIsometry

StabilizerIsometry StabilizerIsometry::identity(long n) {
    require(n >= 0, "StabilizerIsometry: level must be >= 0");
    StabilizerIsometry g;
    g.n_ = n;
    g.form_ = Form::Identity;
    return g;
}

StabilizerIsometry::StabilizerIsometry(long n, RatMat q) : n_(n), form_(Form::Dense) {
    require(n >= 0, "StabilizerIsometry: level must be >= 0");
    require(n <= 512, "StabilizerIsometry: dense form restricted to n <= 512");
    size_t d = static_cast<size_t>(n) + 1;
    require(q.size() == d, "StabilizerIsometry: matrix must be (n+1)x(n+1)");
    for (const auto& row : q) require(row.size() == d, "StabilizerIsometry: matrix must be square");
    // Exact orthogonality: columns orthonormal.
    for (size_t j = 0; j < d; ++j) {
        for (size_t k = j; k < d; ++k) {
            Rational dot = 0;
            for (size_t i = 0; i < d; ++i) dot += q[i][j] * q[i][k];
            if (dot != Rational(j == k ? 1 : 0))
                throw std::invalid_argument("StabilizerIsometry: matrix is not orthogonal");
        }
    }
    q_ = std::move(q);
}

StabilizerIsometry StabilizerIsometry::householder_at(long n, PaddedVec w) {
    require(n >= 0, "StabilizerIsometry: level must be >= 0");
    require(w.top_index() == n, "StabilizerIsometry: Householder vector has wrong dimension");
    require(!w.is_zero(), "StabilizerIsometry: Householder vector must be nonzero");
    StabilizerIsometry g;
    g.n_ = n;
    g.form_ = Form::Householder;
    g.ww_ = norm2(w);
    g.w_ = std::move(w);
    return g;
}

const PaddedVec& StabilizerIsometry::householder_vector() const {
    if (form_ != Form::Householder)
        throw std::logic_error("StabilizerIsometry: no Householder vector in this form");
    return w_;
}

RatMat StabilizerIsometry::to_dense() const {
    if (n_ > 512) throw std::domain_error("StabilizerIsometry::to_dense: level too large");
    size_t d = static_cast<size_t>(n_) + 1;
    if (form_ == Form::Dense) return q_;
    RatMat q(d, std::vector<Rational>(d, Rational(0)));
    for (size_t i = 0; i < d; ++i) q[i][i] = 1;
    if (form_ == Form::Householder) {
        std::vector<Rational> w = w_.to_dense();
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) q[i][j] -= Rational(2) * w[i] * w[j] / ww_;
    }
    return q;
}

PaddedVec StabilizerIsometry::apply(const PaddedVec& offsets) const {
    if (offsets.top_index() != n_)
        throw std::invalid_argument("StabilizerIsometry::apply: dimension mismatch");
    switch (form_) {
        case Form::Identity:
            return offsets;
        case Form::Householder: {
            Rational c = Rational(2) * inner(w_, offsets) / ww_;
            return offsets - w_ * c;
        }
        case Form::Dense: {
            std::vector<Rational> x = offsets.to_dense();
            size_t d = x.size();
            PaddedVec out(n_, Rational(0));
            for (size_t i = 0; i < d; ++i) {
                Rational acc = 0;
                for (size_t j = 0; j < d; ++j) acc += q_[i][j] * x[j];
                out.set(static_cast<long>(i), acc);
            }
            return out;
        }
    }
    throw std::logic_error("StabilizerIsometry::apply: unreachable");
}

SparseVec act_stab(const StabilizerIsometry& g, const SparseVec& v) {
    require(v.domain() == Domain::N, "act_stab: vector must be N-indexed");
    for (const auto& [i, val] : v.entries())
        require(val.is_rational(), "act_stab: vector must have rational coefficients");
    long n = g.level();
    PaddedVec r = g.apply(offsets_against_ones(v, n));
    SparseVec out(Domain::N);
    Rational rest = Rational(1) + r.fill();
    if (sgn(rest) != 0) {
        for (long j = 0; j <= n; ++j) out.set(j, QuadScalar(rest));
    }
    for (const auto& [j, val] : r.window()) out.set(j, QuadScalar(Rational(1 + val)));
    for (const auto& [i, val] : v.entries())
        if (i > n) out.set(i, val);
    return out;
}

StabilizerIsometry householder(const std::vector<Rational>& u0, const std::vector<Rational>& u1) {
    require(!u0.empty(), "householder: vectors must be nonempty");
    require(u0.size() == u1.size(), "householder: dimension mismatch");
    long n = static_cast<long>(u0.size()) - 1;
    Rational n0 = 0, n1 = 0;
    for (const auto& x : u0) n0 += x * x;
    for (const auto& x : u1) n1 += x * x;
    if (n0 != n1) throw std::domain_error("householder: ||u0||^2 != ||u1||^2");
    PaddedVec w(n, Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) w.set(static_cast<long>(i), Rational(u0[i] - u1[i]));
    if (w.is_zero()) return StabilizerIsometry::identity(n);
    return StabilizerIsometry::householder_at(n, std::move(w));
}

// ---------------------------------------------------------------------------
// approximate_pair

long default_n_max() {
    const char* env = std::getenv("ORBITFORGE_NMAX");
    if (env == nullptr || *env == '\0') return 1000000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 0)
        throw std::invalid_argument("ORBITFORGE_NMAX: expected a nonnegative integer");
    return v;
}

namespace {

// Rational point on the sphere ||w||^2 = A within eps of wz (A, B = ||wz||^2
// both positive, |sqrt(A) - sqrt(B)| <= eps/2 guaranteed by the caller, and
// w0 lies on the sphere).  Chords from a sphere point land on the sphere:
// for the base b in {+-w0} farther from the target and d the rational
// direction towards it, b - (2<b,d>/||d||^2) d is the second intersection.
PaddedVec sphere_point_near(const PaddedVec& w0, const PaddedVec& wz, const Rational& A,
                            const Rational& B, const Rational& eps) {
    Rational eps2 = eps * eps;
    for (int prec = 32; prec <= 16384; prec *= 2) {
        // s ~ sqrt(A/B): scale wz close to the sphere radius.
        Enclosure s = sqrt_enclosure(A / B, prec);
        Rational s_mid = (s.lo + s.hi) / 2;
        PaddedVec target = wz * s_mid;
        Rational d_plus = norm2(target - w0);
        Rational d_minus = norm2(target + w0);
        PaddedVec b = d_minus >= d_plus ? -w0 : w0;
        PaddedVec d = target - b;
        Rational dd = norm2(d);
        if (sgn(dd) == 0) continue;  // target collided with base: refine
        Rational t = Rational(-2) * inner(b, d) / dd;
        PaddedVec w = b + d * t;
        if (norm2(w) != A) throw std::logic_error("sphere_point_near: chord left the sphere");
        if (norm2(w - wz) <= eps2) return w;
    }
    throw ComputeLimitError("sphere_point_near: precision ceiling reached");
}

}  // namespace

ApproxCertificate approximate_pair(const SparseVec& x0, const SparseVec& z, const Rational& eps,
                                   long n_max) {
    require(x0.domain() == Domain::N && z.domain() == Domain::N,
            "approximate_pair: vectors must be N-indexed");
    for (const SparseVec* v : {&x0, &z})
        for (const auto& [i, val] : v->entries())
            require(val.is_rational(), "approximate_pair: vectors must have rational coefficients");
    require(sgn(eps) > 0, "approximate_pair: eps must be positive");
    require(n_max >= 0, "approximate_pair: n_max must be >= 0");

    // Squared distances to the flat: A(n) = Sx + (n+1) - cx once n >= K.
    Rational Sx = 0, Sz = 0;
    long cx = 0, cz = 0, K = 0;
    for (const auto& [i, val] : x0.entries()) {
        Rational o = val.a() - 1;
        Sx += o * o;
        ++cx;
        K = std::max(K, i);
    }
    for (const auto& [i, val] : z.entries()) {
        Rational o = val.a() - 1;
        Sz += o * o;
        ++cz;
        K = std::max(K, i);
    }
    auto A_at = [&](long n) { return Rational(Sx + Rational(n + 1 - cx)); };
    auto B_at = [&](long n) { return Rational(Sz + Rational(n + 1 - cz)); };

    Rational eps2 = eps * eps;
    Rational half = eps / 2;
    long n1 = K;  // smallest level whose flat clears both supports

    ApproxCertificate cert;
    cert.eps2 = eps2;

    PaddedVec w_prime;
    long n = n1;
    if (A_at(n1) == B_at(n1)) {
        // Equal radii at every level: the exchange reflection is exact.
        n = n1;
        w_prime = offsets_against_ones(z, n);
    } else if (sgn(B_at(n1)) == 0 && A_at(n1) <= eps2) {
        // z is the flat point itself and x0 is already within eps.
        n = n1;
        w_prime = offsets_against_ones(x0, n);
    } else if (sgn(A_at(n1)) == 0 && B_at(n1) <= eps2) {
        n = n1;
        w_prime = offsets_against_ones(x0, n);  // zero vector; identity works
    } else {
        // Smallest n >= n1 with |sqrt(A) - sqrt(B)| <= eps/2.  The gap
        // |A-B|/(sqrt A + sqrt B) has constant numerator here and growing
        // denominator, so the predicate is monotone: binary search applies.
        long lo = n1;
        if (lo > n_max || !sqrt_gap_leq(A_at(n_max), B_at(n_max), half))
            throw ComputeLimitError("approximate_pair: no level within n_max certifies eps");
        long hi = n_max;
        if (sqrt_gap_leq(A_at(lo), B_at(lo), half)) {
            hi = lo;
        } else {
            while (hi - lo > 1) {
                long mid = lo + (hi - lo) / 2;
                if (sqrt_gap_leq(A_at(mid), B_at(mid), half))
                    hi = mid;
                else
                    lo = mid;
            }
        }
        n = hi;
        PaddedVec w0 = offsets_against_ones(x0, n);
        PaddedVec wz = offsets_against_ones(z, n);
        if (sgn(A_at(n)) == 0) {
            w_prime = w0;  // both radii <= eps/2; identity certifies
        } else if (sgn(B_at(n)) == 0) {
            w_prime = w0;
        } else {
            w_prime = sphere_point_near(w0, wz, A_at(n), B_at(n), eps);
        }
    }

    PaddedVec w0 = offsets_against_ones(x0, n);
    PaddedVec wz = offsets_against_ones(z, n);
    if (norm2(w_prime) != A_at(n))
        throw std::logic_error("approximate_pair: candidate left the orbit sphere");
    PaddedVec wh = w0 - w_prime;
    cert.n = n;
    cert.g = wh.is_zero() ? StabilizerIsometry::identity(n)
                          : StabilizerIsometry::householder_at(n, std::move(wh));

    // Two independent routes to the certified distance must agree exactly.
    Rational achieved = norm2(w_prime - wz);
    Rational expanded = A_at(n) + B_at(n) - Rational(2) * inner(w_prime, wz);
    if (achieved != expanded)
        throw std::logic_error("approximate_pair: distance cross-check failed");
    if (achieved > eps2) throw std::logic_error("approximate_pair: certificate exceeds eps^2");
    cert.achieved_dist2 = achieved;
    return cert;
}

SparseVec fixed_point_witness(const std::vector<StabilizerIsometry>& gs) {
    require(!gs.empty(), "fixed_point_witness: need at least one isometry");
    long m = 0;
    for (const auto& g : gs) m = std::max(m, g.level());
    for (const auto& g : gs) {
        // All-ones has zero offsets at every level <= m, and isometries fix 0.
        PaddedVec zero(g.level(), Rational(0));
        if (!g.apply(zero).is_zero())
            throw std::logic_error("fixed_point_witness: isometry moves the flat point");
    }
    SparseVec w(Domain::N);
    for (long i = 0; i <= m; ++i) w.set(i, QuadScalar(Rational(1)));
    return w;
}

}  // namespace orbitforge

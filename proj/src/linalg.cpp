#include "orbitforge/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace orbitforge {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_rect(const QMat& m) {
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw std::invalid_argument("matrix is ragged");
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix basics

QMat identity_mat(std::size_t d) {
    QMat m(d, QVec(d, QuadScalar(0)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = QuadScalar(1);
    return m;
}

QMat zero_mat(std::size_t rows, std::size_t cols) { return QMat(rows, QVec(cols, QuadScalar(0))); }

std::size_t row_count(const QMat& m) { return m.size(); }
std::size_t col_count(const QMat& m) { return m.empty() ? 0 : m[0].size(); }

QMat transpose(const QMat& m) {
    check_rect(m);
    QMat t(col_count(m), QVec(row_count(m), QuadScalar(0)));
    for (std::size_t i = 0; i < row_count(m); ++i)
        for (std::size_t j = 0; j < col_count(m); ++j) t[j][i] = m[i][j];
    return t;
}

QMat mat_add(const QMat& x, const QMat& y) {
    require(row_count(x) == row_count(y) && col_count(x) == col_count(y),
            "mat_add: dimension mismatch");
    QMat r = x;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += y[i][j];
    return r;
}

QMat mat_sub(const QMat& x, const QMat& y) {
    require(row_count(x) == row_count(y) && col_count(x) == col_count(y),
            "mat_sub: dimension mismatch");
    QMat r = x;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= y[i][j];
    return r;
}

QMat mat_mul(const QMat& x, const QMat& y) {
    check_rect(x);
    check_rect(y);
    require(col_count(x) == row_count(y), "mat_mul: dimension mismatch");
    QMat r = zero_mat(row_count(x), col_count(y));
    for (std::size_t i = 0; i < row_count(x); ++i)
        for (std::size_t k = 0; k < col_count(x); ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < col_count(y); ++j) r[i][j] += x[i][k] * y[k][j];
        }
    return r;
}

QMat mat_scale(const QMat& x, const QuadScalar& c) {
    QMat r = x;
    for (auto& row : r)
        for (auto& v : row) v *= c;
    return r;
}

QVec mat_vec(const QMat& m, const QVec& v) {
    check_rect(m);
    require(col_count(m) == v.size(), "mat_vec: dimension mismatch");
    QVec r(row_count(m), QuadScalar(0));
    for (std::size_t i = 0; i < row_count(m); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

QuadScalar trace(const QMat& m) {
    require(row_count(m) == col_count(m), "trace: matrix must be square");
    QuadScalar t(0);
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

bool is_symmetric(const QMat& m) {
    if (row_count(m) != col_count(m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

QuadScalar dot(const QVec& x, const QVec& y) {
    require(x.size() == y.size(), "dot: dimension mismatch");
    QuadScalar r(0);
    for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
    return r;
}

QVec vec_add(const QVec& x, const QVec& y) {
    require(x.size() == y.size(), "vec_add: dimension mismatch");
    QVec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

QVec vec_sub(const QVec& x, const QVec& y) {
    require(x.size() == y.size(), "vec_sub: dimension mismatch");
    QVec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

QVec vec_scale(const QVec& x, const QuadScalar& c) {
    QVec r = x;
    for (auto& v : r) v *= c;
    return r;
}

bool is_zero_vec(const QVec& x) {
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

std::size_t rref(QMat& m, std::vector<std::size_t>* pivots) {
    check_rect(m);
    if (pivots) pivots->clear();
    std::size_t rows = row_count(m), cols = col_count(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        QuadScalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            QuadScalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

std::size_t rank(QMat m) { return rref(m); }

std::vector<QVec> kernel_basis(const QMat& m) {
    QMat red = m;
    std::vector<std::size_t> pivots;
    std::size_t rk = rref(red, &pivots);
    std::size_t cols = col_count(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec x(cols, QuadScalar(0));
        x[f] = QuadScalar(1);
        for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = -red[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    check_rect(a);
    require(row_count(a) == b.size(), "solve: dimension mismatch");
    std::size_t cols = col_count(a);
    QMat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    std::vector<std::size_t> pivots;
    std::size_t rk = rref(aug, &pivots);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    QVec x(cols, QuadScalar(0));
    for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

QMat inverse(const QMat& a) {
    check_rect(a);
    if (row_count(a) != col_count(a)) throw std::domain_error("inverse: matrix must be square");
    std::size_t d = a.size();
    QMat aug = a;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug[i].push_back(QuadScalar(i == j ? 1 : 0));
    }
    std::vector<std::size_t> pivots;
    std::size_t rk = rref(aug, &pivots);
    // singular input pushes pivots into the identity block
    if (rk != d || (d > 0 && pivots[d - 1] != d - 1))
        throw std::domain_error("inverse: matrix is singular");
    QMat inv(d, QVec(d, QuadScalar(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
    return inv;
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

void poly_trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly poly_scale(QPoly p, const QuadScalar& c) {
    for (auto& v : p) v *= c;
    poly_trim(p);
    return p;
}

QPoly poly_mul(const QPoly& x, const QPoly& y) {
    if (x.empty() || y.empty()) return {};
    QPoly r(x.size() + y.size() - 1, QuadScalar(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    poly_trim(r);
    return r;
}

// Remainder of f by g (g nonzero), classic long division over the field.
QPoly poly_rem(QPoly f, const QPoly& g) {
    if (g.empty()) throw std::invalid_argument("poly_rem: division by zero polynomial");
    QuadScalar lead_inv = g.back().inverse();
    while (f.size() >= g.size()) {
        QuadScalar q = f.back() * lead_inv;
        std::size_t off = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= q * g[i];
        f.pop_back();  // leading term cancelled exactly
        poly_trim(f);
        if (f.empty()) break;
    }
    return f;
}

// Exact quotient; throws std::logic_error when g does not divide f.
QPoly poly_divexact(QPoly f, const QPoly& g) {
    if (g.empty()) throw std::invalid_argument("poly_divexact: division by zero polynomial");
    if (f.empty()) return {};
    if (f.size() < g.size()) throw std::logic_error("poly_divexact: inexact division");
    QPoly q(f.size() - g.size() + 1, QuadScalar(0));
    QuadScalar lead_inv = g.back().inverse();
    while (!f.empty() && f.size() >= g.size()) {
        QuadScalar c = f.back() * lead_inv;
        std::size_t off = f.size() - g.size();
        q[off] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[off + i] -= c * g[i];
        poly_trim(f);
    }
    if (!f.empty()) throw std::logic_error("poly_divexact: inexact division");
    poly_trim(q);
    return q;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        QPoly r = poly_rem(a, b);
        // normalize to keep coefficient growth in check
        if (!r.empty()) r = poly_scale(r, r.back().inverse());
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = poly_scale(a, a.back().inverse());
    return a;
}

}  // namespace

QuadScalar poly_eval(const QPoly& p, const QuadScalar& x) {
    QuadScalar acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly poly_derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * QuadScalar(static_cast<long>(k)));
    poly_trim(d);
    return d;
}

QPoly charpoly(const QMat& a) {
    check_rect(a);
    require(row_count(a) == col_count(a), "charpoly: matrix must be square");
    std::size_t d = a.size();
    QPoly c(d + 1, QuadScalar(0));
    c[d] = QuadScalar(1);
    if (d == 0) return c;
    QMat m = zero_mat(d, d);
    for (std::size_t k = 1; k <= d; ++k) {
        m = mat_mul(a, m);
        for (std::size_t i = 0; i < d; ++i) m[i][i] += c[d - k + 1];
        // trace(a * m) without forming the product
        QuadScalar t(0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t += a[i][j] * m[j][i];
        c[d - k] = -t / QuadScalar(static_cast<long>(k));
    }
    return c;
}

QPoly squarefree_part(const QPoly& p) {
    QPoly q = p;
    poly_trim(q);
    require(!q.empty(), "squarefree_part: zero polynomial");
    if (q.size() == 1) return {QuadScalar(1)};
    QPoly g = poly_gcd(q, poly_derivative(q));
    QPoly sf = poly_divexact(q, g);
    return poly_scale(sf, sf.back().inverse());
}

// ---------------------------------------------------------------------------
// Sturm machinery

Rational abs_upper_bound(const QuadScalar& x) {
    // sqrt2 < 3/2, so |a + b sqrt2| <= |a| + (3/2)|b|
    return abs(x.a()) + Rational(3) / 2 * abs(x.b());
}

Rational gershgorin_bound(const QMat& a) {
    check_rect(a);
    Rational best = 0;
    for (const auto& row : a) {
        Rational s = 0;
        for (const auto& v : row) s += abs_upper_bound(v);
        best = std::max(best, s);
    }
    return best;
}

SturmChain::SturmChain(const QPoly& p) {
    QPoly q = squarefree_part(p);
    bound_ = 1;
    if (q.size() >= 2) {
        // q is monic: Cauchy bound 1 + max |coeff|
        for (std::size_t k = 0; k + 1 < q.size(); ++k)
            bound_ = std::max(bound_, Rational(1 + abs_upper_bound(q[k])));
    }
    chain_.push_back(q);
    if (q.size() >= 2) chain_.push_back(poly_derivative(q));
    while (chain_.back().size() >= 1 && chain_.size() >= 2) {
        const QPoly& g = chain_.back();
        if (g.size() <= 1) break;  // constant: chain complete
        QPoly r = poly_rem(chain_[chain_.size() - 2], g);
        if (r.empty()) break;  // squarefree input: only at constant tail
        for (auto& v : r) v = -v;
        // positive rescale keeps every sign pattern intact
        QuadScalar lead = r.back();
        QuadScalar scale = lead.sign() > 0 ? lead.inverse() : (-lead).inverse();
        chain_.push_back(poly_scale(std::move(r), scale));
    }
}

int SturmChain::variations_at(const QuadScalar& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = poly_eval(p, x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmChain::variations_at_pos_inf() const {
    int changes = 0, prev = 0;
    for (const auto& p : chain_) {
        if (p.empty()) continue;
        int s = p.back().sign();
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmChain::variations_at_neg_inf() const {
    int changes = 0, prev = 0;
    for (const auto& p : chain_) {
        if (p.empty()) continue;
        int s = p.back().sign();
        if ((p.size() - 1) % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
    if (lo > hi) throw std::invalid_argument("SturmChain::count_in: empty interval");
    return variations_at(QuadScalar(lo)) - variations_at(QuadScalar(hi));
}

int SturmChain::count_in(const QuadScalar& lo, const QuadScalar& hi) const {
    if (hi < lo) throw std::invalid_argument("SturmChain::count_in: empty interval");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

namespace {

enum class Extreme { Min, Max };

Enclosure eigen_enclosure(const QMat& sym, const Rational& tol, Extreme which) {
    if (!is_symmetric(sym)) throw std::invalid_argument("eigen enclosure: matrix not symmetric");
    if (sym.empty()) throw std::invalid_argument("eigen enclosure: empty matrix");
    if (sgn(tol) <= 0) throw std::invalid_argument("eigen enclosure: tol must be positive");
    SturmChain chain(charpoly(sym));
    Rational lo = -chain.root_bound() - 1;
    Rational hi = chain.root_bound();
    // invariant: the sought eigenvalue lies in (lo, hi]
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        bool upper_occupied = chain.count_in(mid, hi) >= 1;
        if (which == Extreme::Max) {
            if (upper_occupied)
                lo = mid;
            else
                hi = mid;
        } else {
            if (chain.count_in(lo, mid) >= 1)
                hi = mid;
            else
                lo = mid;
        }
    }
    return Enclosure{lo, hi};
}

}  // namespace

Enclosure eigen_max_enclosure(const QMat& sym, const Rational& tol) {
    return eigen_enclosure(sym, tol, Extreme::Max);
}

Enclosure eigen_min_enclosure(const QMat& sym, const Rational& tol) {
    return eigen_enclosure(sym, tol, Extreme::Min);
}

// ---------------------------------------------------------------------------
// Roots in the field

namespace {

// Divisors of |n| (n nonzero); empty when the search would be too costly.
std::vector<Integer> divisors_of(const Integer& n) {
    Integer a = abs(n);
    std::vector<Integer> divs;
    Integer root = sqrt(a);
    if (root > 2000000) return divs;  // candidate budget exceeded
    for (Integer d = 1; d <= root; ++d) {
        if (a % d == 0) {
            divs.push_back(d);
            Integer q = a / d;
            if (q != d) divs.push_back(q);
        }
    }
    return divs;
}

// Rational roots of an integer-coefficient polynomial (trailing coeff != 0).
std::vector<Rational> rational_roots_integer(const std::vector<Integer>& c) {
    std::vector<Rational> roots;
    if (c.size() < 2) return roots;
    std::vector<Integer> nums = divisors_of(c.front());
    std::vector<Integer> dens = divisors_of(c.back());
    std::set<Rational> seen;
    for (const Integer& u : nums) {
        for (const Integer& v : dens) {
            for (int s : {1, -1}) {
                Rational cand = make_rational(s * u, v);
                if (!seen.insert(cand).second) continue;
                Rational acc = 0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * cand + Rational(*it);
                if (sgn(acc) == 0) roots.push_back(cand);
            }
        }
    }
    return roots;
}

bool rational_sqrt(const Rational& x, Rational* out) {
    if (sgn(x) < 0) return false;
    Integer num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    *out = make_rational(sqrt(num), sqrt(den));
    return true;
}

}  // namespace

std::vector<QuadScalar> field_roots(const QPoly& p) {
    QPoly q = p;
    poly_trim(q);
    require(!q.empty(), "field_roots: zero polynomial");

    std::vector<QuadScalar> roots;
    auto try_root = [&](const QuadScalar& cand) {
        if (!poly_eval(q, cand).is_zero()) return;
        for (const auto& r : roots)
            if (r == cand) return;
        roots.push_back(cand);
    };

    // companion with rational coefficients: p * (conjugate-coefficient p)
    QPoly pbar = q;
    for (auto& v : pbar) v = v.conj();
    QPoly n = poly_mul(q, pbar);
    for (const auto& v : n)
        if (!v.is_rational()) throw std::logic_error("field_roots: companion not rational");

    // strip x^k: zero is a candidate root
    std::size_t shift = 0;
    while (shift < n.size() && n[shift].is_zero()) ++shift;
    try_root(QuadScalar(0));
    std::vector<Rational> nc(n.size() - shift);
    for (std::size_t i = 0; i < nc.size(); ++i) nc[i] = n[shift + i].a();

    // common denominator: integer coefficients for the candidate search
    Integer lcm = 1;
    for (const auto& v : nc) lcm = ::lcm(lcm, v.get_den());
    std::vector<Integer> ic(nc.size());
    for (std::size_t i = 0; i < nc.size(); ++i) {
        Rational scaled = nc[i] * Rational(lcm);
        ic[i] = scaled.get_num();  // exact: denominator divides lcm
    }

    // rational roots of the companion, verified in p itself
    for (const Rational& r : rational_roots_integer(ic)) try_root(QuadScalar(r));

    // r*sqrt2 roots: substituting x = r*sqrt2 splits the companion into even
    // and odd parts, N(r sqrt2) = E(2r^2) + r sqrt2 O(2r^2), which must both
    // vanish; so 2r^2 is a rational root of E shared with O (or O = 0).
    std::vector<Integer> even, odd;
    for (std::size_t i = 0; i < ic.size(); ++i)
        (i % 2 == 0 ? even : odd).push_back(ic[i]);
    // strip to keep trailing coefficients nonzero for the candidate search
    std::size_t estrip = 0;
    while (estrip < even.size() && even[estrip] == 0) ++estrip;
    std::vector<Integer> estripped(even.begin() + static_cast<long>(estrip), even.end());
    if (!estripped.empty()) {
        for (const Rational& s : rational_roots_integer(estripped)) {
            if (sgn(s) <= 0) continue;
            Rational odd_val = 0;
            for (auto it = odd.rbegin(); it != odd.rend(); ++it) odd_val = odd_val * s + Rational(*it);
            if (sgn(odd_val) != 0) continue;
            Rational r;
            if (!rational_sqrt(s / 2, &r)) continue;
            try_root(QuadScalar(Rational(0), r));
            try_root(QuadScalar(Rational(0), -r));
        }
    }

    std::sort(roots.begin(), roots.end(),
              [](const QuadScalar& x, const QuadScalar& y) { return cmp(x, y) < 0; });
    return roots;
}

}  // namespace orbitforge

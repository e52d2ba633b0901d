#include "orbitforge/sparse_vec.hpp"

#include <stdexcept>

namespace orbitforge {

void SparseVec::check_index(long i) const {
    if (domain_ == Domain::N && i < 0)
        throw std::invalid_argument("SparseVec: negative index in N-domain vector");
}

SparseVec SparseVec::from_entries(Domain d,
                                  const std::vector<std::pair<long, QuadScalar>>& entries) {
    SparseVec v(d);
    for (const auto& [i, val] : entries) v.set(i, v.at(i) + val);
    return v;
}

std::optional<long> SparseVec::min_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.begin()->first;
}

std::optional<long> SparseVec::max_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.rbegin()->first;
}

QuadScalar SparseVec::at(long i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? QuadScalar() : it->second;
}

void SparseVec::set(long i, const QuadScalar& v) {
    check_index(i);
    if (v.is_zero())
        entries_.erase(i);
    else
        entries_[i] = v;
}

bool SparseVec::is_rational() const {
    for (const auto& [i, v] : entries_)
        if (!v.is_rational()) return false;
    return true;
}

bool SparseVec::has_integer_components() const {
    for (const auto& [i, v] : entries_)
        if (!v.has_integer_components()) return false;
    return true;
}

SparseVec SparseVec::operator-() const {
    SparseVec r(domain_);
    for (const auto& [i, v] : entries_) r.entries_.emplace(i, -v);
    return r;
}

namespace {

void require_same_domain(const SparseVec& x, const SparseVec& y) {
    if (x.domain() != y.domain())
        throw std::domain_error("SparseVec: domain mismatch");
}

}  // namespace

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    require_same_domain(*this, o);
    for (const auto& [i, v] : o.entries_) set(i, at(i) + v);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
    require_same_domain(*this, o);
    for (const auto& [i, v] : o.entries_) set(i, at(i) - v);
    return *this;
}

SparseVec& SparseVec::operator*=(const QuadScalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [i, v] : entries_) v *= c;
    return *this;
}

QuadScalar inner(const SparseVec& x, const SparseVec& y) {
    require_same_domain(x, y);
    // Walk the smaller support.
    const SparseVec& small = x.support_size() <= y.support_size() ? x : y;
    const SparseVec& big = x.support_size() <= y.support_size() ? y : x;
    QuadScalar acc;
    for (const auto& [i, v] : small.entries()) {
        QuadScalar w = big.at(i);
        if (!w.is_zero()) acc += v * w;
    }
    return acc;
}

QuadScalar norm2(const SparseVec& x) {
    QuadScalar acc;
    for (const auto& [i, v] : x.entries()) acc += v * v;
    return acc;
}

QuadScalar dist2(const SparseVec& x, const SparseVec& y) { return norm2(x - y); }

SparseVec shift(const SparseVec& v, long s) {
    if (v.domain() != Domain::Z)
        throw std::domain_error("shift: requires a Z-indexed vector");
    SparseVec r(Domain::Z);
    for (const auto& [i, val] : v.entries()) r.set(i + s, val);
    return r;
}

SparseVec project_An(const SparseVec& v, long n) {
    if (v.domain() != Domain::N) throw std::domain_error("project_An: requires N-indexed vector");
    if (n < 0) throw std::invalid_argument("project_An: n must be >= 0");
    SparseVec r = v;
    const QuadScalar one(Rational(1));
    for (long j = 0; j <= n; ++j) r.set(j, one);
    return r;
}

QuadScalar dist2_to_An(const SparseVec& v, long n) {
    if (v.domain() != Domain::N)
        throw std::domain_error("dist2_to_An: requires N-indexed vector");
    if (n < 0) throw std::invalid_argument("dist2_to_An: n must be >= 0");
    const QuadScalar one(Rational(1));
    // Closed form over the support: off-support coordinates j <= n contribute 1.
    QuadScalar direct;
    long in_window = 0;
    QuadScalar sum, sum_sq;  // expansion ingredients, same walk
    for (const auto& [j, val] : v.entries()) {
        if (j > n) break;
        ++in_window;
        QuadScalar d = val - one;
        direct += d * d;
        sum += val;
        sum_sq += val * val;
    }
    direct += QuadScalar(Rational(n + 1 - in_window));
    // Expansion n+1 - 2*sum + sum_sq must agree exactly.
    QuadScalar expanded = QuadScalar(Rational(n + 1)) - QuadScalar(Rational(2)) * sum + sum_sq;
    if (direct != expanded) throw std::logic_error("dist2_to_An: formula mismatch");
    return direct;
}

}  // namespace orbitforge

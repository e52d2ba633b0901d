#include "orbitforge/wreath.hpp"

#include <stdexcept>

namespace orbitforge {

namespace {

void validate_lattice_values(Lattice lattice, const SparseVec& f) {
    if (f.domain() != Domain::Z)
        throw std::domain_error("WreathElement: f must be Z-indexed");
    for (const auto& [i, v] : f.entries()) {
        if (!v.has_integer_components())
            throw std::domain_error("WreathElement: coefficients must lie in Z[sqrt2]");
        if (lattice == Lattice::Int && !v.is_rational())
            throw std::domain_error("WreathElement: Int lattice forbids sqrt2 parts");
    }
}

void require_same_lattice(const WreathElement& x, const WreathElement& y) {
    if (x.lattice() != y.lattice())
        throw std::domain_error("WreathElement: lattice variant mismatch");
}

}  // namespace

WreathElement::WreathElement(Lattice lattice, SparseVec f, long s)
    : lattice_(lattice), f_(std::move(f)), s_(s) {
    validate_lattice_values(lattice_, f_);
}

WreathElement compose(const WreathElement& x, const WreathElement& y) {
    require_same_lattice(x, y);
    return WreathElement(x.lattice(), x.f() + shift(y.f(), x.s()), x.s() + y.s());
}

WreathElement invert(const WreathElement& g) {
    return WreathElement(g.lattice(), -shift(g.f(), -g.s()), -g.s());
}

SparseVec act(const WreathElement& g, const SparseVec& v) {
    if (v.domain() != Domain::Z) throw std::domain_error("act: vector must be Z-indexed");
    return g.f() + shift(v, g.s());
}

SparseVec cocycle(const WreathElement& g) { return g.f(); }

WreathElement evaluate_word(const Word& word, Lattice lattice) {
    WreathElement acc = WreathElement::identity(lattice);
    for (const Letter& l : word.letters()) {
        WreathElement step;
        switch (l.gen) {
            case 0:  // t^k = (0, k)
                step = WreathElement(lattice, SparseVec(Domain::Z), l.exp);
                break;
            case 1: {  // a^k = (k * delta_0, 0)
                SparseVec f(Domain::Z);
                f.set(0, QuadScalar(Rational(l.exp)));
                step = WreathElement(lattice, f, 0);
                break;
            }
            case 2: {  // b^k = (k*sqrt2 * delta_0, 0)
                if (lattice != Lattice::Quad)
                    throw std::domain_error("evaluate_word: b requires the Quad lattice");
                SparseVec f(Domain::Z);
                f.set(0, QuadScalar(Rational(0), Rational(l.exp)));
                step = WreathElement(lattice, f, 0);
                break;
            }
            default:
                throw std::invalid_argument("evaluate_word: generator outside {t, a, b}");
        }
        acc = compose(acc, step);
    }
    return acc;
}

WreathElement evaluate_word(const std::string& word) {
    Word w = Word::parse("tab", word);
    bool uses_b = false;
    for (const Letter& l : w.letters())
        if (l.gen == 2) uses_b = true;
    return evaluate_word(w, uses_b ? Lattice::Quad : Lattice::Int);
}

OrbitCertificate approximate_orbit(const SparseVec& target, const Rational& eps) {
    if (target.domain() != Domain::Z)
        throw std::domain_error("approximate_orbit: target must be Z-indexed");
    if (!target.is_rational())
        throw std::domain_error("approximate_orbit: target must have rational coefficients");
    if (sgn(eps) <= 0) throw std::invalid_argument("approximate_orbit: eps must be positive");

    // ceil(sqrt(N)) as the rational budget divisor: N * (eps/s)^2 <= eps^2.
    long n = static_cast<long>(target.support_size());
    long s = 0;
    while (s * s < n) ++s;
    if (s == 0) s = 1;
    Rational budget = eps / s;

    SparseVec f(Domain::Z);
    for (const auto& [i, v] : target.entries()) f.set(i, approximate_real(v.a(), budget));
    WreathElement g(Lattice::Quad, f, 0);

    QuadScalar achieved = dist2(cocycle(g), target);
    Rational eps2 = eps * eps;
    if ((achieved - QuadScalar(eps2)).sign() > 0)
        throw std::logic_error("approximate_orbit: certificate violated");
    return OrbitCertificate{g, achieved, eps2};
}

}  // namespace orbitforge

#include "orbitforge/quad_scalar.hpp"

#include <cctype>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "orbitforge/errors.hpp"

namespace orbitforge {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Integer floor_rational(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer round_half_up(const Rational& q) {
    Rational shifted = q + Rational(1, 2);
    return floor_rational(shifted);
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Decimal or scientific literal -> exact rational.  "12.34e-5" etc.
Rational parse_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    long exp10 = 0;
    std::size_t epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string es = s.substr(epos + 1);
        s.erase(epos);
        if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
            if (es[0] == '-') {
                if (!all_digits(es.substr(1))) throw std::invalid_argument("rational: bad exponent");
                exp10 = -std::stol(es.substr(1));
            } else {
                if (!all_digits(es.substr(1))) throw std::invalid_argument("rational: bad exponent");
                exp10 = std::stol(es.substr(1));
            }
        } else {
            if (!all_digits(es)) throw std::invalid_argument("rational: bad exponent");
            exp10 = std::stol(es);
        }
    }
    std::string intpart = s, fracpart;
    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        intpart = s.substr(0, dot);
        fracpart = s.substr(dot + 1);
    }
    if (intpart.empty() && fracpart.empty()) throw std::invalid_argument("rational: empty literal");
    if (!intpart.empty() && !all_digits(intpart)) throw std::invalid_argument("rational: bad digits");
    if (!fracpart.empty() && !all_digits(fracpart)) throw std::invalid_argument("rational: bad digits");
    Integer mant(intpart.empty() ? std::string("0") : intpart);
    for (char c : fracpart) {
        mant *= 10;
        mant += c - '0';
    }
    exp10 -= static_cast<long>(fracpart.size());
    Integer num = mant, den = 1;
    if (exp10 >= 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10));
        num *= p;
    } else {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-exp10));
    }
    if (neg) num = -num;
    return make_rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("rational: empty input");
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return parse_decimal(s);
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw std::invalid_argument("rational: malformed fraction");
    try {
        Integer num(ns), den(ds);
        if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rational: malformed fraction '" + text + "'");
    }
}

bool sqrt_gap_leq(const Rational& a, const Rational& b, const Rational& c) {
    if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0)
        throw std::domain_error("sqrt_gap_leq: negative input");
    // |sqrt(a)-sqrt(b)| <= c  <=>  a + b - c^2 <= 2*sqrt(ab).
    Rational lhs = a + b - c * c;
    if (sgn(lhs) <= 0) return true;
    return lhs * lhs <= 4 * (a * b);
}

Enclosure sqrt_enclosure(const Rational& x, unsigned prec) {
    if (sgn(x) < 0) throw std::domain_error("sqrt_enclosure: negative input");
    if (sgn(x) == 0) return Enclosure{Rational(0), Rational(0)};
    const Integer& u = x.get_num();
    const Integer& v = x.get_den();
    Integer scaled = u * v;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * prec);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer den = v;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), prec);
    Rational lo = make_rational(root, den);
    if (root * root == scaled) return Enclosure{lo, lo};
    Rational hi = make_rational(root + 1, den);
    return Enclosure{lo, hi};
}

bool QuadScalar::has_integer_components() const {
    return a_.get_den() == 1 && b_.get_den() == 1;
}

int QuadScalar::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Mixed signs: a + b*sqrt2 has the sign of a exactly when a^2 > 2b^2.
    Rational lhs = a_ * a_, rhs = 2 * (b_ * b_);
    int t = cmp(lhs, rhs);
    return sa > 0 ? t : -t;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    Rational na = a_ * o.a_ + 2 * (b_ * o.b_);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadScalar QuadScalar::inverse() const {
    // 1/(a + b*sqrt2) = (a - b*sqrt2)/(a^2 - 2b^2); the norm vanishes only at 0.
    Rational norm = a_ * a_ - 2 * (b_ * b_);
    if (sgn(norm) == 0) throw std::domain_error("QuadScalar: division by zero");
    return QuadScalar(a_ / norm, -b_ / norm);
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
    *this *= o.inverse();
    return *this;
}

QuadScalar QuadScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadScalar base = *this, acc(Rational(1));
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1UL;
    }
    return acc;
}

Enclosure QuadScalar::enclosure(unsigned prec) const {
    if (sgn(b_) == 0) return Enclosure{a_, a_};
    Enclosure s2 = sqrt_enclosure(Rational(2), prec);
    Rational p = a_ + b_ * s2.lo;
    Rational q = a_ + b_ * s2.hi;
    if (sgn(b_) > 0) return Enclosure{p, q};
    return Enclosure{q, p};
}

double QuadScalar::to_float() const {
    if (is_zero()) return 0.0;
    static const Rational kDblMax(DBL_MAX);  // exact binary value
    for (unsigned prec = 64; prec <= (1u << 22); prec *= 2) {
        Enclosure e = enclosure(prec);
        Rational w = e.width();
        Rational mid = (e.lo + e.hi) / 2;
        if (abs(mid) - w > kDblMax) throw std::domain_error("to_float: magnitude overflows double");
        double d = mid.get_d();  // truncation error < 1 ulp
        if (!std::isfinite(d)) throw std::domain_error("to_float: magnitude overflows double");
        double ad = std::fabs(d);
        double ulp = ad == 0.0 ? DBL_TRUE_MIN
                               : std::nextafter(ad, std::numeric_limits<double>::infinity()) - ad;
        Rational ulp_q(ulp);  // exact
        // |true - d| <= w/2 + 1 ulp <= 2 ulp once w <= 2 ulp.
        if (w <= 2 * ulp_q) return d;
    }
    throw ComputeLimitError("to_float: precision ceiling reached");
}

Integer QuadScalar::floor() const {
    if (sgn(b_) == 0) return floor_rational(a_);
    for (unsigned prec = 64; prec <= (1u << 22); prec *= 2) {
        Enclosure e = enclosure(prec);
        Integer fl = floor_rational(e.lo);
        Integer fh = floor_rational(e.hi);
        if (fl == fh) return fl;
    }
    throw ComputeLimitError("floor: precision ceiling reached");
}

Integer QuadScalar::round_half_up() const {
    QuadScalar shifted = *this + QuadScalar(Rational(1, 2));
    return shifted.floor();
}

std::string QuadScalar::to_string() const {
    if (sgn(b_) == 0) return rational_to_string(a_);
    Rational mag = abs(b_);
    std::string bterm = mag == 1 ? "sqrt2" : rational_to_string(mag) + "*sqrt2";
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + bterm;
    return rational_to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + bterm;
}

namespace {

// Scans one rational literal out of s at pos: digits with optional '.', 'e'
// exponent (sign included), or '/' fraction.  pos advances past the literal.
Rational scan_rational(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    auto digit = [&](std::size_t i) {
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    };
    while (digit(pos)) ++pos;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (digit(pos)) ++pos;
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        std::size_t e = pos + 1;
        if (e < s.size() && (s[e] == '+' || s[e] == '-')) ++e;
        if (digit(e)) {
            pos = e;
            while (digit(pos)) ++pos;
        }
    }
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        if (!digit(pos)) throw std::invalid_argument("QuadScalar: malformed fraction");
        while (digit(pos)) ++pos;
    }
    if (pos == start) throw std::invalid_argument("QuadScalar: expected number");
    return parse_rational(s.substr(start, pos - start));
}

}  // namespace

QuadScalar QuadScalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("QuadScalar: empty input");
    Rational a(0), b(0);
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("QuadScalar: expected '+' or '-'");
        }
        if (pos >= s.size()) throw std::invalid_argument("QuadScalar: dangling sign");
        Rational coeff(1);
        bool have_coeff = false;
        if (s.compare(pos, 5, "sqrt2") != 0) {
            coeff = scan_rational(s, pos);
            have_coeff = true;
        }
        bool is_sqrt = false;
        if (pos < s.size() && s[pos] == '*') {
            if (s.compare(pos + 1, 5, "sqrt2") != 0)
                throw std::invalid_argument("QuadScalar: expected sqrt2 after '*'");
            pos += 6;
            is_sqrt = true;
        } else if (s.compare(pos, 5, "sqrt2") == 0) {
            pos += 5;
            is_sqrt = true;
        }
        if (!have_coeff && !is_sqrt) throw std::invalid_argument("QuadScalar: malformed term");
        if (sign < 0) coeff = -coeff;
        if (is_sqrt)
            b += coeff;
        else
            a += coeff;
        first = false;
    }
    return QuadScalar(a, b);
}

SmallUnit small_unit(const Rational& eps) {
    if (sgn(eps) <= 0) throw std::invalid_argument("small_unit: eps must be positive");
    const QuadScalar step(Rational(-1), Rational(1));  // sqrt2 - 1
    QuadScalar cur = step;
    long k = 1;
    const QuadScalar bound((Rational(eps)));
    while ((cur - bound).sign() > 0) {
        cur *= step;
        ++k;
    }
    return SmallUnit{k, cur};
}

QuadScalar approximate_real(const Rational& t, const Rational& eps) {
    SmallUnit su = small_unit(eps);
    QuadScalar ratio = QuadScalar(t) / su.u;
    Integer m = ratio.round_half_up();
    return su.u * QuadScalar(Rational(m));
}

}  // namespace orbitforge

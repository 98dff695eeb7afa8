#include "qbrst/qfield.hpp"

#include <algorithm>
#include <cctype>

namespace qbrst {

namespace {

using Dense = std::vector<Int>;  // c[i] = coefficient of q^i

Dense to_dense(const LPoly& p, int shift) {
    Dense d(p.high() - shift + 1);
    for (auto& [e, c] : p.terms()) d[e - shift] = c;
    return d;
}

LPoly from_dense(const Dense& d, int shift) {
    std::vector<LPoly::Term> t;
    for (size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) t.emplace_back(int(i) + shift, d[i]);
    return LPoly::from_terms(std::move(t));
}

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Int dense_content(const Dense& d) {
    Int g = 0;
    for (auto& c : d) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

void make_primitive(Dense& d) {
    Int g = dense_content(d);
    if (g.is_zero() || g.is_one()) return;
    for (auto& c : d) c = divexact(c, g);
}

// pseudo-remainder of a by b (deg b >= 0, b nonzero)
Dense prem(Dense a, const Dense& b) {
    const Int& lb = b.back();
    size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Int la = a.back();
        size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
        make_primitive(a);
    }
    return a;
}

}

LPoly LPoly::monomial(int e, Int c) {
    LPoly p;
    if (!c.is_zero()) p.t_.emplace_back(e, std::move(c));
    return p;
}

LPoly LPoly::from_terms(std::vector<Term> t) {
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LPoly p;
    for (auto& x : t) {
        if (!p.t_.empty() && p.t_.back().first == x.first) p.t_.back().second += x.second;
        else p.t_.push_back(std::move(x));
        if (p.t_.back().second.is_zero()) p.t_.pop_back();
    }
    return p;
}

Int LPoly::content() const {
    Int g = 0;
    for (auto& [e, c] : t_) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

LPoly LPoly::operator-() const {
    LPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

static LPoly merge(const LPoly& a, const LPoly& b, bool sub) {
    std::vector<LPoly::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto i = a.terms().begin(), j = b.terms().begin();
    while (i != a.terms().end() || j != b.terms().end()) {
        if (j == b.terms().end() || (i != a.terms().end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.terms().end() || j->first < i->first) {
            out.emplace_back(j->first, sub ? -j->second : j->second);
            ++j;
        } else {
            Int c = sub ? i->second - j->second : i->second + j->second;
            if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
            ++i, ++j;
        }
    }
    return LPoly::from_terms(std::move(out));
}

LPoly operator+(const LPoly& a, const LPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return merge(a, b, false);
}

LPoly operator-(const LPoly& a, const LPoly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return merge(a, b, true);
}

LPoly operator*(const LPoly& a, const LPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms().size() == 1) {
        auto& [e, c] = a.terms()[0];
        return b.shifted(e).scaled(c);
    }
    if (b.terms().size() == 1) {
        auto& [e, c] = b.terms()[0];
        return a.shifted(e).scaled(c);
    }
    int lo = a.low() + b.low();
    Dense acc(a.high() + b.high() - lo + 1);
    for (auto& [ea, ca] : a.terms())
        for (auto& [eb, cb] : b.terms()) acc[ea + eb - lo] += ca * cb;
    return from_dense(acc, lo);
}

LPoly LPoly::shifted(int k) const {
    if (k == 0) return *this;
    LPoly r = *this;
    for (auto& [e, c] : r.t_) e += k;
    return r;
}

LPoly LPoly::scaled(const Int& c) const {
    if (c.is_zero()) return {};
    if (c.is_one()) return *this;
    LPoly r = *this;
    for (auto& [e, x] : r.t_) x *= c;
    return r;
}

LPoly LPoly::divexact(const Int& c) const {
    if (c.is_one()) return *this;
    LPoly r = *this;
    for (auto& [e, x] : r.t_) x = qbrst::divexact(x, c);
    return r;
}

bool operator==(const LPoly& a, const LPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
    return true;
}

Rational LPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto& [e, c] : t_) {
        Rational p = 1;
        if (e != 0 && x == 0) throw PoleError("negative power at q = 0");
        for (int i = 0; i < std::abs(e); ++i) p *= x;
        if (e < 0) p = 1 / p;
        r += Rational(c.to_mpz()) * p;
    }
    return r;
}

std::string LPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [e, c] : t_) {
        std::string cs = c.str();
        if (!s.empty() && c.sign() > 0) s += "+";
        if (e == 0) {
            s += cs;
            continue;
        }
        if (c.is_one()) {
        } else if (c == Int(-1)) {
            s += "-";
        } else {
            s += cs + "*";
        }
        s += e == 1 ? "q" : "q^" + std::to_string(e);
    }
    return s;
}

LPoly poly_gcd(const LPoly& a, const LPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return poly_gcd(b, LPoly(Int(0)) + b);
    Dense x = to_dense(a, a.low()), y = b.is_zero() ? Dense{} : to_dense(b, b.low());
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (y.size() > 1) {
        Dense r = prem(x, y);
        x = std::move(y);
        y = std::move(r);
        if (y.empty()) break;
    }
    if (!y.empty()) return LPoly(Int(1));  // constant remainder: coprime
    make_primitive(x);
    if (x[0].sign() < 0)
        for (auto& c : x) c = -c;
    return from_dense(x, 0);
}

LPoly poly_divexact(const LPoly& a, const LPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    int shift = a.low() - b.low();
    Dense x = to_dense(a, a.low()), y = to_dense(b, b.low());
    if (x.size() < y.size()) throw std::domain_error("poly_divexact: not divisible");
    Dense quo(x.size() - y.size() + 1);
    const Int& lb = y.back();
    for (size_t k = quo.size(); k-- > 0;) {
        const Int& top = x[k + y.size() - 1];
        if (top.is_zero()) continue;
        if (!rem(top, lb).is_zero()) throw std::domain_error("poly_divexact: not divisible");
        Int c = divexact(top, lb);
        for (size_t i = 0; i < y.size(); ++i) x[k + i] -= c * y[i];
        quo[k] = std::move(c);
    }
    for (auto& c : x)
        if (!c.is_zero()) throw std::domain_error("poly_divexact: not divisible");
    return from_dense(quo, shift);
}

Scalar::Scalar(LPoly n, LPoly d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

void Scalar::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = LPoly(Int(1));
        return;
    }
    if (den_.is_one()) return;
    int k = den_.low();
    if (k != 0) {
        den_ = den_.shifted(-k);
        num_ = num_.shifted(-k);
    }
    if (den_.high() > 0) {
        LPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    Int c = gcd(num_.content(), den_.content());
    if (den_.low_coeff().sign() < 0) c = -c;
    if (!c.is_one()) {
        num_ = num_.divexact(c);
        den_ = den_.divexact(c);
    }
}

Scalar Scalar::rational(const Rational& r) {
    return Scalar(LPoly(Int(mpz_class(r.get_num()))), LPoly(Int(mpz_class(r.get_den()))));
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_);
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    if (b.den_.is_one()) return Scalar(a.num_ + b.num_ * a.den_, a.den_);
    if (a.den_.is_one()) return Scalar(a.num_ * b.den_ + b.num_, b.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Scalar();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

std::optional<Scalar> Scalar::try_div(const Scalar& b) const {
    if (b.is_zero()) return std::nullopt;
    return *this / b;
}

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r = 1, b = *this;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

Rational Scalar::eval_at(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) throw PoleError("pole at q = " + q0.get_str() + " of " + str());
    return num_.eval(q0) / d;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("scalar parse error at " + std::to_string(i) + " in \"" + s + "\": " + why);
    }
    bool at(char c) const { return i < s.size() && s[i] == c; }
    void expect(char c) {
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++i;
    }
    Int integer() {
        size_t j = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (j == i) fail("expected digits");
        return Int::parse(s.substr(j, i - j));
    }
    int exponent() {
        bool neg = false;
        if (at('-')) neg = true, ++i;
        else if (at('+')) ++i;
        Int e = integer();
        if (!e.small() || e.small_value() > 1000000) fail("exponent too large");
        return int(neg ? -e.small_value() : e.small_value());
    }
    LPoly sum() {
        std::vector<LPoly::Term> t;
        bool first = true;
        while (i < s.size() && !at(')') && !at('/')) {
            bool neg = false;
            if (at('+') || at('-')) neg = at('-'), ++i;
            else if (!first) fail("expected sign");
            first = false;
            Int c = 1;
            int e = 0;
            bool have_c = false;
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                c = integer();
                have_c = true;
                if (at('*')) ++i;
                else goto done;
            }
            if (at('q')) {
                ++i;
                e = 1;
                if (at('^')) ++i, e = exponent();
            } else if (have_c) {
                fail("expected q after '*'");
            } else {
                fail("expected term");
            }
        done:
            t.emplace_back(e, neg ? -c : c);
        }
        if (first) fail("empty sum");
        return LPoly::from_terms(std::move(t));
    }
    LPoly group() {
        if (at('(')) {
            ++i;
            LPoly p = sum();
            expect(')');
            return p;
        }
        return sum();
    }
};

}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    Parser p{s};
    LPoly n = p.group();
    LPoly d(Int(1));
    if (p.at('/')) {
        ++p.i;
        d = p.group();
    }
    if (p.i != s.size()) p.fail("trailing input");
    if (d.is_zero()) throw DivisionByZero();
    return Scalar(std::move(n), std::move(d));
}

}

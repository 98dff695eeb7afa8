#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include <gmpxx.h>

#include "qbrst/int.hpp"

namespace qbrst {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& m) : std::domain_error(m) {}
};
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& m) : std::invalid_argument(m) {}
};

// Sparse Laurent polynomial with integer coefficients, terms sorted by exponent.
class LPoly {
public:
    using Term = std::pair<int, Int>;

    LPoly() = default;
    LPoly(Int c) { if (!c.is_zero()) t_.emplace_back(0, std::move(c)); }
    static LPoly monomial(int e, Int c = 1);
    static LPoly from_terms(std::vector<Term> t);  // any order, duplicates merged

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second.is_one(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    int low() const { return t_.front().first; }
    int high() const { return t_.back().first; }
    const Int& low_coeff() const { return t_.front().second; }
    const Int& high_coeff() const { return t_.back().second; }
    Int content() const;

    LPoly operator-() const;
    friend LPoly operator+(const LPoly& a, const LPoly& b);
    friend LPoly operator-(const LPoly& a, const LPoly& b);
    friend LPoly operator*(const LPoly& a, const LPoly& b);
    LPoly shifted(int k) const;
    LPoly scaled(const Int& c) const;
    LPoly divexact(const Int& c) const;
    friend bool operator==(const LPoly& a, const LPoly& b);

    Rational eval(const Rational& x) const;
    std::string str() const;

private:
    std::vector<Term> t_;
};

// gcd of two polynomials (Laurent inputs are treated up to powers of q); primitive, positive lowest coeff.
LPoly poly_gcd(const LPoly& a, const LPoly& b);
// exact quotient a / b; throws if b does not divide a.
LPoly poly_divexact(const LPoly& a, const LPoly& b);

// Element of Q(q): integer Laurent numerator over an integer polynomial denominator with
// nonzero constant term and positive lowest coefficient; numerator and denominator have no
// common factor and joint content 1.
class Scalar {
public:
    Scalar() : den_(Int(1)) {}
    Scalar(int c) : num_(Int(c)), den_(Int(1)) {}
    Scalar(Int c) : num_(std::move(c)), den_(Int(1)) {}
    Scalar(LPoly n) : num_(std::move(n)), den_(Int(1)) {}
    Scalar(LPoly n, LPoly d);  // canonicalizes; throws DivisionByZero on d == 0
    static Scalar rational(const Rational& r);

    static Scalar q(int k = 1) { return Scalar(LPoly::monomial(k)); }
    static Scalar lambda() { return Scalar(LPoly::from_terms({{1, 1}, {-1, -1}})); }

    const LPoly& num() const { return num_; }
    const LPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    Scalar inverse() const;
    std::optional<Scalar> try_div(const Scalar& b) const;
    Scalar pow(int k) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Rational eval_at(const Rational& q0) const;  // throws PoleError
    std::string str() const;
    static Scalar parse(const std::string& s);  // throws ParseError

private:
    struct Raw {};
    Scalar(LPoly n, LPoly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
    void canonicalize();
    LPoly num_, den_;
};

inline Scalar lam() { return Scalar::lambda(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <gmpxx.h>

namespace qbrst {

// Integer with an int64 fast path; spills into GMP on overflow.
class Int {
public:
    Int() = default;
    Int(int64_t v) : v_(v) {}
    Int(int v) : v_(v) {}
    explicit Int(const mpz_class& z) { set(z); }
    Int(const Int& o) : v_(o.v_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Int(Int&&) noexcept = default;
    Int& operator=(const Int& o) {
        if (this != &o) {
            v_ = o.v_;
            big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Int& operator=(Int&&) noexcept = default;

    bool small() const { return !big_; }
    int64_t small_value() const { return v_; }
    mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(v_)); }

    int sign() const { return big_ ? sgn(*big_) : (v_ > 0) - (v_ < 0); }
    bool is_zero() const { return !big_ && v_ == 0; }
    bool is_one() const { return !big_ && v_ == 1; }

    Int operator-() const;
    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    Int& operator+=(const Int& b) { return *this = *this + b; }
    Int& operator-=(const Int& b) { return *this = *this - b; }
    Int& operator*=(const Int& b) { return *this = *this * b; }

    // exact division, b | a assumed
    friend Int divexact(const Int& a, const Int& b);
    // floor-free remainder with the sign of a (C semantics)
    friend Int rem(const Int& a, const Int& b);
    friend Int gcd(const Int& a, const Int& b);
    friend Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

    friend bool operator==(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend int cmp(const Int& a, const Int& b);
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }

    std::string str() const { return big_ ? big_->get_str() : std::to_string(v_); }
    static Int parse(const std::string& s);

private:
    void set(const mpz_class& z);
    int64_t v_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Int divexact(const Int& a, const Int& b);
Int rem(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

}

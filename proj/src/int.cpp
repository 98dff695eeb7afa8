#include "qbrst/int.hpp"

#include <stdexcept>

namespace qbrst {

void Int::set(const mpz_class& z) {
    if (z.fits_slong_p()) {
        v_ = z.get_si();
        big_.reset();
    } else {
        v_ = 0;
        big_ = std::make_unique<mpz_class>(z);
    }
}

Int Int::operator-() const {
    if (!big_ && v_ != INT64_MIN) return Int(-v_);
    return Int(mpz_class(-to_mpz()));
}

Int operator+(const Int& a, const Int& b) {
    int64_t r;
    if (a.small() && b.small() && !__builtin_add_overflow(a.v_, b.v_, &r)) return Int(r);
    return Int(mpz_class(a.to_mpz() + b.to_mpz()));
}

Int operator-(const Int& a, const Int& b) {
    int64_t r;
    if (a.small() && b.small() && !__builtin_sub_overflow(a.v_, b.v_, &r)) return Int(r);
    return Int(mpz_class(a.to_mpz() - b.to_mpz()));
}

Int operator*(const Int& a, const Int& b) {
    int64_t r;
    if (a.small() && b.small() && !__builtin_mul_overflow(a.v_, b.v_, &r)) return Int(r);
    return Int(mpz_class(a.to_mpz() * b.to_mpz()));
}

Int divexact(const Int& a, const Int& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (a.small() && b.small() && !(a.v_ == INT64_MIN && b.v_ == -1)) return Int(a.v_ / b.v_);
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(r);
}

Int rem(const Int& a, const Int& b) {
    if (b.is_zero()) throw std::domain_error("integer division by zero");
    if (a.small() && b.small() && !(a.v_ == INT64_MIN && b.v_ == -1)) return Int(a.v_ % b.v_);
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(r);
}

Int gcd(const Int& a, const Int& b) {
    if (a.small() && b.small() && a.v_ != INT64_MIN && b.v_ != INT64_MIN) {
        int64_t x = a.v_ < 0 ? -a.v_ : a.v_, y = b.v_ < 0 ? -b.v_ : b.v_;
        while (y) {
            int64_t t = x % y;
            x = y;
            y = t;
        }
        return Int(x);
    }
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Int(r);
}

bool operator==(const Int& a, const Int& b) {
    if (a.small() && b.small()) return a.v_ == b.v_;
    if (a.small() != b.small()) return false;  // normalized: big never fits
    return *a.big_ == *b.big_;
}

int cmp(const Int& a, const Int& b) {
    if (a.small() && b.small()) return (a.v_ > b.v_) - (a.v_ < b.v_);
    int c = ::cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
}

Int Int::parse(const std::string& s) {
    mpz_class z;
    if (s.empty() || z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw std::invalid_argument("bad integer: " + s);
    return Int(z);
}

}

#ifndef KRQ_RATIONAL_HPP
#define KRQ_RATIONAL_HPP

#include "krq/checked.hpp"
#include "krq/errors.hpp"

#include <numeric>

namespace krq {

// Exact rational over checked 64-bit integers. All denominators in this
// library stay tiny (divisors of det(C) or of the symmetrizers), so no big
// integers are needed; overflow still faults rather than wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    long long to_integer() const {
        if (den_ != 1)
            fail(ErrorCode::non_integral_p, "rational value is not an integer");
        return num_;
    }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_sub(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0)
            fail(ErrorCode::arithmetic_overflow, "rational division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational operator-() const { return Rational(checked_neg(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    // cross-multiplication is safe: denominators are positive
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }

private:
    void normalize() {
        if (den_ == 0)
            fail(ErrorCode::arithmetic_overflow, "rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_;
    long long den_;
};

} // namespace krq

#endif

#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "equilab/numeric.hpp"

namespace equilab {

// Exact rational scalar on 64-bit words, always normalized (den > 0,
// gcd(num, den) = 1). Overflow throws rather than wraps.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Int n, Int d) : num_(n), den_(d) { normalize(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_cast(Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_cast(Int128(a.num_) * b.den_ - Int128(b.num_) * a.den_),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw precondition_error("Rational: division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return Int128(a.num_) * b.den_ < Int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Parses "n" or "n/d".
    static Rational parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    void normalize() {
        if (den_ == 0) throw precondition_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Int num_, den_;
};

inline Rational abs(const Rational& r) {
    return r.num() < 0 ? -r : r;
}

}  // namespace equilab

namespace Eigen {

template <>
struct NumTraits<equilab::Rational> : GenericNumTraits<equilab::Rational> {
    typedef equilab::Rational Real;
    typedef equilab::Rational NonInteger;
    typedef equilab::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 10,
        MulCost = 8,
    };
    static inline Real epsilon() { return equilab::Rational(0); }
    static inline Real dummy_precision() { return equilab::Rational(0); }
    static inline int digits10() { return 18; }
};

}  // namespace Eigen

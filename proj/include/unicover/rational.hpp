#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "unicover/error.hpp"

namespace unicover {

using Int = std::int64_t;
// Scratch width for intermediate products; results are narrowed back to Int.
using Wide = __int128;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) {
    if (a == std::numeric_limits<Int>::min()) throw OverflowError("integer overflow in negation");
    return -a;
}

inline Int narrow(Wide v) {
    if (v > static_cast<Wide>(std::numeric_limits<Int>::max()) ||
        v < static_cast<Wide>(std::numeric_limits<Int>::min()))
        throw OverflowError("value does not fit in 64 bits");
    return static_cast<Int>(v);
}

}  // namespace checked

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int gcd(Int a, Int b) { return checked::narrow(wide_gcd(a, b)); }

// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Exact rational in lowest terms with positive denominator.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(Int n) : num_(n) {}  // NOLINT: integers are rationals
    Rational(Int n, Int d) { *this = make(n, d); }

    static Rational make(Wide n, Wide d) {
        if (d == 0) throw PreconditionError("division_by_zero", "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Wide g = wide_gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = checked::narrow(n);
        r.den_ = checked::narrow(d);
        return r;
    }

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    Int floor() const { return floor_div(num_, den_); }
    Int ceil() const { return ceil_div(num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(checked::add(a.num_, b.num_));
        return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(checked::sub(a.num_, b.num_));
        return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1) return Rational(checked::mul(a.num_, b.num_));
        return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return make(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = checked::neg(num_);
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Wide l = Wide(a.num_) * b.den_;
        Wide r = Wide(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Int num_ = 0;
    Int den_ = 1;
};

inline std::string to_string(const Rational& r) {
    if (r.is_integer()) return std::to_string(r.num());
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

}  // namespace unicover

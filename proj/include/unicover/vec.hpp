#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

#include "unicover/rational.hpp"

namespace unicover {

namespace detail {
inline Int add(Int a, Int b) { return checked::add(a, b); }
inline Int sub(Int a, Int b) { return checked::sub(a, b); }
inline Int mul(Int a, Int b) { return checked::mul(a, b); }
inline Rational add(const Rational& a, const Rational& b) { return a + b; }
inline Rational sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational mul(const Rational& a, const Rational& b) { return a * b; }
}  // namespace detail

template <class T>
struct Vec2 {
    T x{}, y{};

    T& operator[](std::size_t i) { return i == 0 ? x : y; }
    const T& operator[](std::size_t i) const { return i == 0 ? x : y; }

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {detail::add(a.x, b.x), detail::add(a.y, b.y)}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {detail::sub(a.x, b.x), detail::sub(a.y, b.y)}; }
    friend Vec2 operator*(const T& k, const Vec2& a) { return {detail::mul(k, a.x), detail::mul(k, a.y)}; }
    Vec2 operator-() const { return Vec2{} - *this; }

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

template <class T>
struct Vec3 {
    T x{}, y{}, z{};

    T& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
    const T& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

    friend Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {detail::add(a.x, b.x), detail::add(a.y, b.y), detail::add(a.z, b.z)};
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {detail::sub(a.x, b.x), detail::sub(a.y, b.y), detail::sub(a.z, b.z)};
    }
    friend Vec3 operator*(const T& k, const Vec3& a) {
        return {detail::mul(k, a.x), detail::mul(k, a.y), detail::mul(k, a.z)};
    }
    Vec3 operator-() const { return Vec3{} - *this; }

    friend bool operator==(const Vec3&, const Vec3&) = default;
    friend auto operator<=>(const Vec3&, const Vec3&) = default;
};

using IntPoint3 = Vec3<Int>;
using IntVec3 = Vec3<Int>;
using RatPoint3 = Vec3<Rational>;
using IntPoint2 = Vec2<Int>;
using IntVec2 = Vec2<Int>;
using RatPoint2 = Vec2<Rational>;

inline RatPoint3 to_rat(const IntPoint3& p) { return {p.x, p.y, p.z}; }
inline RatPoint2 to_rat(const IntPoint2& p) { return {p.x, p.y}; }

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return detail::add(detail::add(detail::mul(a.x, b.x), detail::mul(a.y, b.y)), detail::mul(a.z, b.z));
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    using detail::mul;
    using detail::sub;
    return {sub(mul(a.y, b.z), mul(a.z, b.y)), sub(mul(a.z, b.x), mul(a.x, b.z)), sub(mul(a.x, b.y), mul(a.y, b.x))};
}

template <class T>
T det2(const Vec2<T>& a, const Vec2<T>& b) {
    return detail::sub(detail::mul(a.x, b.y), detail::mul(a.y, b.x));
}

// Orientation of c relative to the directed line a->b: >0 left, <0 right.
template <class T>
T orient2(const Vec2<T>& a, const Vec2<T>& b, const Vec2<T>& c) {
    return det2(b - a, c - a);
}

/// Linear functional x -> a*x1 + b*x2 + c*x3 with integer coefficients.
struct Functional3 {
    Int a = 0, b = 0, c = 0;

    IntVec3 coeffs() const { return {a, b, c}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    Int operator()(const IntPoint3& p) const { return dot(coeffs(), p); }
    Rational operator()(const RatPoint3& p) const { return dot(to_rat(coeffs()), p); }

    friend bool operator==(const Functional3&, const Functional3&) = default;
    friend auto operator<=>(const Functional3&, const Functional3&) = default;
};

struct Functional2 {
    Int a = 0, b = 0;

    IntVec2 coeffs() const { return {a, b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    Int operator()(const IntPoint2& p) const { return checked::add(checked::mul(a, p.x), checked::mul(b, p.y)); }
    Rational operator()(const RatPoint2& p) const { return Rational(a) * p.x + Rational(b) * p.y; }

    friend bool operator==(const Functional2&, const Functional2&) = default;
    friend auto operator<=>(const Functional2&, const Functional2&) = default;
};

inline Functional3 functional(const IntVec3& v) { return {v.x, v.y, v.z}; }
inline Functional2 functional(const IntVec2& v) { return {v.x, v.y}; }

struct PointHash {
    std::size_t operator()(const IntPoint3& p) const noexcept {
        std::size_t h = std::hash<Int>{}(p.x);
        h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<Int>{}(p.y);
        h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<Int>{}(p.z);
        return h;
    }
    std::size_t operator()(const IntPoint2& p) const noexcept {
        std::size_t h = std::hash<Int>{}(p.x);
        return h * 0x9E3779B97F4A7C15ULL ^ std::hash<Int>{}(p.y);
    }
};

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec3<T>& p) {
    return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec2<T>& p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

template <class T>
std::string to_string(const Vec3<T>& p) {
    using unicover::to_string;
    using std::to_string;
    return "(" + to_string(p.x) + "," + to_string(p.y) + "," + to_string(p.z) + ")";
}

template <class T>
std::string to_string(const Vec2<T>& p) {
    using unicover::to_string;
    using std::to_string;
    return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

}  // namespace unicover

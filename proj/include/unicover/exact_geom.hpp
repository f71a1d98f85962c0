#pragma once

// Exact predicates and lattice-point enumeration shared by every module.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "unicover/error.hpp"
#include "unicover/rational.hpp"
#include "unicover/vec.hpp"

namespace unicover {

// Determinant of the 3x3 matrix with columns u, v, w.
template <class T>
T det3(const Vec3<T>& u, const Vec3<T>& v, const Vec3<T>& w) {
    return dot(u, cross(v, w));
}

// Sign of det(b-a, c-a, d-a).
template <class T>
int orient3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const Vec3<T>& d) {
    T v = det3(b - a, c - a, d - a);
    return (v > T{0}) - (v < T{0});
}

inline IntVec3 primitive(const IntVec3& v) {
    Int g = gcd(gcd(v.x, v.y), v.z);
    if (g == 0) throw PreconditionError("zero_vector", "primitive() of the zero vector");
    return {v.x / g, v.y / g, v.z / g};
}

inline IntVec2 primitive(const IntVec2& v) {
    Int g = gcd(v.x, v.y);
    if (g == 0) throw PreconditionError("zero_vector", "primitive() of the zero vector");
    return {v.x / g, v.y / g};
}

inline bool is_primitive(const IntVec3& v) { return gcd(gcd(v.x, v.y), v.z) == 1; }
inline bool is_primitive(const IntVec2& v) { return gcd(v.x, v.y) == 1; }

enum class Membership { Closed, Open };

// f(x) <= bound
struct Halfspace3 {
    Functional3 f;
    Rational bound;
};

struct Halfspace2 {
    Functional2 f;
    Rational bound;
};

namespace detail {

inline std::optional<RatPoint3> intersect_planes(const Halfspace3& h0, const Halfspace3& h1, const Halfspace3& h2) {
    const IntVec3 n0 = h0.f.coeffs(), n1 = h1.f.coeffs(), n2 = h2.f.coeffs();
    // Rows n0, n1, n2; Cramer on the transposed system.
    const IntVec3 c0{n0.x, n1.x, n2.x}, c1{n0.y, n1.y, n2.y}, c2{n0.z, n1.z, n2.z};
    const Int d = det3(c0, c1, c2);
    if (d == 0) return std::nullopt;
    const RatPoint3 rhs{h0.bound, h1.bound, h2.bound};
    const Rational D(d);
    return RatPoint3{det3(rhs, to_rat(c1), to_rat(c2)) / D, det3(to_rat(c0), rhs, to_rat(c2)) / D,
                     det3(to_rat(c0), to_rat(c1), rhs) / D};
}

inline bool satisfies(std::span<const Halfspace3> hs, const RatPoint3& p) {
    return std::all_of(hs.begin(), hs.end(), [&](const Halfspace3& h) { return h.f(p) <= h.bound; });
}

inline bool satisfies(std::span<const Halfspace2> hs, const RatPoint2& p) {
    return std::all_of(hs.begin(), hs.end(), [&](const Halfspace2& h) { return h.f(p) <= h.bound; });
}

}  // namespace detail

// The recession cone {d : f(d) <= 0 for all f} is trivial.
inline bool is_bounded(std::span<const Halfspace3> hs) {
    std::vector<IntVec3> normals;
    for (const auto& h : hs) normals.push_back(h.f.coeffs());
    auto in_cone = [&](const IntVec3& d) {
        return std::all_of(normals.begin(), normals.end(), [&](const IntVec3& n) { return dot(n, d) <= 0; });
    };
    bool full_rank = false;
    for (std::size_t i = 0; i < normals.size() && !full_rank; ++i)
        for (std::size_t j = i + 1; j < normals.size() && !full_rank; ++j)
            for (std::size_t k = j + 1; k < normals.size() && !full_rank; ++k)
                full_rank = det3(normals[i], normals[j], normals[k]) != 0;
    if (!full_rank) return false;
    // A pointed non-trivial cone has an extreme ray cut out by two constraints.
    for (std::size_t i = 0; i < normals.size(); ++i)
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            IntVec3 d = cross(normals[i], normals[j]);
            if (d == IntVec3{}) continue;
            if (in_cone(d) || in_cone(-d)) return false;
        }
    return true;
}

inline bool is_bounded(std::span<const Halfspace2> hs) {
    std::vector<IntVec2> normals;
    for (const auto& h : hs) normals.push_back(h.f.coeffs());
    bool full_rank = false;
    for (std::size_t i = 0; i < normals.size() && !full_rank; ++i)
        for (std::size_t j = i + 1; j < normals.size() && !full_rank; ++j)
            full_rank = det2(normals[i], normals[j]) != 0;
    if (!full_rank) return false;
    auto in_cone = [&](const IntVec2& d) {
        return std::all_of(normals.begin(), normals.end(), [&](const IntVec2& m) { return functional(m)(d) <= 0; });
    };
    for (const auto& n : normals) {
        const IntVec2 d{-n.y, n.x};
        if (in_cone(d) || in_cone(-d)) return false;
    }
    return true;
}

// Vertices of a bounded H-polytope, sorted and de-duplicated.
inline std::vector<RatPoint3> halfspace_vertices(std::span<const Halfspace3> hs) {
    std::vector<RatPoint3> out;
    const std::size_t m = hs.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                auto p = detail::intersect_planes(hs[i], hs[j], hs[k]);
                if (p && detail::satisfies(hs, *p)) out.push_back(*p);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<RatPoint2> halfspace_vertices(std::span<const Halfspace2> hs) {
    std::vector<RatPoint2> out;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const Int d = det2(hs[i].f.coeffs(), hs[j].f.coeffs());
            if (d == 0) continue;
            const Rational D(d);
            RatPoint2 p{(hs[i].bound * Rational(hs[j].f.b) - hs[j].bound * Rational(hs[i].f.b)) / D,
                        (Rational(hs[i].f.a) * hs[j].bound - Rational(hs[j].f.a) * hs[i].bound) / D};
            if (detail::satisfies(hs, p)) out.push_back(p);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All integer points of the closed region cut out by `hs`, in lexicographic order.
/// Throws PreconditionError("unbounded") if the region is not bounded.
inline std::vector<IntPoint3> lattice_points(std::span<const Halfspace3> hs) {
    if (!is_bounded(hs)) throw PreconditionError("unbounded", "lattice_points: region is unbounded");
    const auto verts = halfspace_vertices(hs);
    std::vector<IntPoint3> out;
    if (verts.empty()) return out;
    IntPoint3 lo{verts[0].x.floor(), verts[0].y.floor(), verts[0].z.floor()};
    IntPoint3 hi{verts[0].x.ceil(), verts[0].y.ceil(), verts[0].z.ceil()};
    for (const auto& v : verts) {
        for (std::size_t i = 0; i < 3; ++i) {
            lo[i] = std::min(lo[i], v[i].floor());
            hi[i] = std::max(hi[i], v[i].ceil());
        }
    }
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y)
            for (Int z = lo.z; z <= hi.z; ++z) {
                const IntPoint3 p{x, y, z};
                if (std::all_of(hs.begin(), hs.end(), [&](const Halfspace3& h) { return Rational(h.f(p)) <= h.bound; }))
                    out.push_back(p);
            }
    return out;
}

inline std::vector<IntPoint2> lattice_points(std::span<const Halfspace2> hs) {
    if (!is_bounded(hs)) throw PreconditionError("unbounded", "lattice_points: region is unbounded");
    const auto verts = halfspace_vertices(hs);
    std::vector<IntPoint2> out;
    if (verts.empty()) return out;
    IntPoint2 lo{verts[0].x.floor(), verts[0].y.floor()}, hi{verts[0].x.ceil(), verts[0].y.ceil()};
    for (const auto& v : verts) {
        lo.x = std::min(lo.x, v.x.floor());
        lo.y = std::min(lo.y, v.y.floor());
        hi.x = std::max(hi.x, v.x.ceil());
        hi.y = std::max(hi.y, v.y.ceil());
    }
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y) {
            const IntPoint2 p{x, y};
            if (std::all_of(hs.begin(), hs.end(), [&](const Halfspace2& h) { return Rational(h.f(p)) <= h.bound; }))
                out.push_back(p);
        }
    return out;
}

// Barycentric membership of p in conv(s[0..3]).
template <class T>
bool point_in_simplex(const RatPoint3& p, const std::array<Vec3<T>, 4>& s, Membership mode = Membership::Closed) {
    std::array<RatPoint3, 4> v;
    for (std::size_t i = 0; i < 4; ++i) {
        if constexpr (std::is_same_v<T, Rational>)
            v[i] = s[i];
        else
            v[i] = to_rat(s[i]);
    }
    const Rational d = det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]);
    if (d == Rational(0)) throw PreconditionError("degenerate_simplex", "point_in_simplex: degenerate simplex");
    const int sd = d.sign();
    for (std::size_t i = 0; i < 4; ++i) {
        auto w = v;
        w[i] = p;
        const int s_i = det3(w[1] - w[0], w[2] - w[0], w[3] - w[0]).sign() * sd;
        if (s_i < 0) return false;
        if (s_i == 0 && mode == Membership::Open) return false;
    }
    return true;
}

template <class T>
bool point_in_simplex(const IntPoint3& p, const std::array<Vec3<T>, 4>& s, Membership mode = Membership::Closed) {
    return point_in_simplex(to_rat(p), s, mode);
}

namespace detail {

inline int sgn(const Rational& r) { return r.sign(); }

inline bool on_segment2(const RatPoint2& a, const RatPoint2& b, const RatPoint2& p) {
    return orient2(a, b, p) == Rational(0) && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool segments_intersect2(const RatPoint2& a, const RatPoint2& b, const RatPoint2& c, const RatPoint2& d) {
    const int o1 = sgn(orient2(a, b, c)), o2 = sgn(orient2(a, b, d));
    const int o3 = sgn(orient2(c, d, a)), o4 = sgn(orient2(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment2(a, b, c) || on_segment2(a, b, d) || on_segment2(c, d, a) || on_segment2(c, d, b);
}

inline bool point_in_triangle2(const RatPoint2& p, const RatPoint2& a, const RatPoint2& b, const RatPoint2& c) {
    const int s = sgn(orient2(a, b, c));
    const int s0 = sgn(orient2(a, b, p)) * s, s1 = sgn(orient2(b, c, p)) * s, s2 = sgn(orient2(c, a, p)) * s;
    return s0 >= 0 && s1 >= 0 && s2 >= 0;
}

// Drop the coordinate along which `normal` is largest; injective on planes with that normal.
inline RatPoint2 project(const RatPoint3& p, std::size_t drop) {
    if (drop == 0) return {p.y, p.z};
    if (drop == 1) return {p.x, p.z};
    return {p.x, p.y};
}

}  // namespace detail

/// Closed segment [a,b] against closed triangle (t0,t1,t2), exactly.
inline bool segment_triangle_intersect(const RatPoint3& a, const RatPoint3& b, const RatPoint3& t0, const RatPoint3& t1,
                                       const RatPoint3& t2) {
    const RatPoint3 n = cross(t1 - t0, t2 - t0);
    if (n == RatPoint3{})
        throw PreconditionError("degenerate_triangle", "segment_triangle_intersect: degenerate triangle");
    const Rational sa = dot(n, a - t0), sb = dot(n, b - t0);
    if (sa.sign() * sb.sign() > 0) return false;

    std::size_t drop = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (n[i].sign() != 0 && (n[drop].sign() == 0)) drop = i;
    const RatPoint2 p0 = detail::project(t0, drop), p1 = detail::project(t1, drop), p2 = detail::project(t2, drop);

    if (sa.sign() == 0 && sb.sign() == 0) {
        const RatPoint2 a2 = detail::project(a, drop), b2 = detail::project(b, drop);
        if (detail::point_in_triangle2(a2, p0, p1, p2) || detail::point_in_triangle2(b2, p0, p1, p2)) return true;
        return detail::segments_intersect2(a2, b2, p0, p1) || detail::segments_intersect2(a2, b2, p1, p2) ||
               detail::segments_intersect2(a2, b2, p2, p0);
    }
    // Unique crossing point of the segment's line with the plane.
    const Rational t = sa / (sa - sb);
    const RatPoint3 x = a + RatPoint3{t * (b.x - a.x), t * (b.y - a.y), t * (b.z - a.z)};
    return detail::point_in_triangle2(detail::project(x, drop), p0, p1, p2);
}

}  // namespace unicover

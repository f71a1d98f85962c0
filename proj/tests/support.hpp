#pragma once

// Reference predicates for the tests. They share no code with the library
// beyond the point types: everything is recomputed with boost rationals and
// brute force.

#include <algorithm>
#include <array>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unicover/vec.hpp"

namespace oracle {

using unicover::Int;
using unicover::IntPoint2;
using unicover::IntPoint3;
using unicover::RatPoint3;
using Q = boost::multiprecision::cpp_rational;
using P3 = std::array<Q, 3>;

inline Q ratio(Int n, Int d) { return Q(n) / Q(d); }
inline Q q(const unicover::Rational& r) { return ratio(r.num(), r.den()); }
inline P3 p3(const IntPoint3& p) { return {Q(p.x), Q(p.y), Q(p.z)}; }
inline P3 p3(const RatPoint3& p) { return {q(p.x), q(p.y), q(p.z)}; }

inline Q det(const P3& o, const P3& a, const P3& b, const P3& c) {
    const Q ux = a[0] - o[0], uy = a[1] - o[1], uz = a[2] - o[2];
    const Q vx = b[0] - o[0], vy = b[1] - o[1], vz = b[2] - o[2];
    const Q wx = c[0] - o[0], wy = c[1] - o[1], wz = c[2] - o[2];
    return ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) + uz * (vx * wy - vy * wx);
}

inline int sign(const Q& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Closed point-in-tetrahedron by orientation signs.
inline bool in_tetra(const P3& p, const std::array<P3, 4>& v) {
    const int s = sign(det(v[0], v[1], v[2], v[3]));
    if (s == 0) return false;
    for (std::size_t i = 0; i < 4; ++i) {
        auto w = v;
        w[i] = p;
        if (sign(det(w[0], w[1], w[2], w[3])) * s < 0) return false;
    }
    return true;
}

inline bool in_tetra(const RatPoint3& p, const std::array<IntPoint3, 4>& v) {
    return in_tetra(p3(p), {p3(v[0]), p3(v[1]), p3(v[2]), p3(v[3])});
}

inline bool in_tetra(const IntPoint3& p, const std::array<IntPoint3, 4>& v) {
    return in_tetra(p3(p), {p3(v[0]), p3(v[1]), p3(v[2]), p3(v[3])});
}

inline Int abs_det(const std::array<IntPoint3, 4>& v) {
    const Q d = det(p3(v[0]), p3(v[1]), p3(v[2]), p3(v[3]));
    return static_cast<Int>(d < 0 ? Q(-d) : d);
}

// Membership in the convex hull of a full-dimensional point set, by
// Caratheodory: p lies in some tetrahedron spanned by the points.
inline bool in_hull(const P3& p, const std::vector<IntPoint3>& pts) {
    const std::size_t n = pts.size();
    std::vector<P3> ps;
    for (const auto& x : pts) ps.push_back(p3(x));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (in_tetra(p, {ps[a], ps[b], ps[c], ps[d]})) return true;
    return false;
}

inline bool in_hull(const IntPoint3& p, const std::vector<IntPoint3>& pts) { return in_hull(p3(p), pts); }
inline bool in_hull(const RatPoint3& p, const std::vector<IntPoint3>& pts) { return in_hull(p3(p), pts); }

inline std::vector<IntPoint3> lattice_points(const std::vector<IntPoint3>& pts) {
    IntPoint3 lo = pts[0], hi = pts[0];
    for (const auto& v : pts)
        for (std::size_t i = 0; i < 3; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    std::vector<IntPoint3> out;
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y)
            for (Int z = lo.z; z <= hi.z; ++z)
                if (in_hull(IntPoint3{x, y, z}, pts)) out.push_back({x, y, z});
    return out;
}

inline std::vector<IntPoint3> lattice_points(const std::array<IntPoint3, 4>& v) {
    return lattice_points(std::vector<IntPoint3>(v.begin(), v.end()));
}

inline RatPoint3 centroid(const std::array<IntPoint3, 4>& v) {
    const IntPoint3 s = v[0] + v[1] + v[2] + v[3];
    return {unicover::Rational(s.x, 4), unicover::Rational(s.y, 4), unicover::Rational(s.z, 4)};
}

// Parallelepiped base + E lambda, 0 <= lambda <= 1, solved by Cramer's rule.
inline bool in_parallelepiped(const P3& p, const IntPoint3& base, const std::array<unicover::IntVec3, 3>& e) {
    const P3 o{0, 0, 0};
    const P3 a = p3(e[0]), b = p3(e[1]), c = p3(e[2]);
    const P3 r{p[0] - base.x, p[1] - base.y, p[2] - base.z};
    const Q d = det(o, a, b, c);
    for (const Q& l : {det(o, r, b, c) / d, det(o, a, r, c) / d, det(o, a, b, r) / d})
        if (l < 0 || l > 1) return false;
    return true;
}

// Vertices of conv(pts) in the plane: points not in any triangle or on any
// segment spanned by the others.
inline std::vector<IntPoint2> hull_vertices2(std::vector<IntPoint2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const IntPoint2& o, const IntPoint2& a, const IntPoint2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    auto on_segment = [&](const IntPoint2& p, const IntPoint2& a, const IntPoint2& b) {
        return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    };
    std::vector<IntPoint2> out;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = false;
        for (std::size_t a = 0; a < n && !inside; ++a)
            for (std::size_t b = a + 1; b < n && !inside; ++b) {
                if (a == i || b == i) continue;
                if (on_segment(pts[i], pts[a], pts[b])) inside = true;
                for (std::size_t c = b + 1; c < n && !inside; ++c) {
                    if (c == i) continue;
                    const Int s1 = cross(pts[a], pts[b], pts[i]), s2 = cross(pts[b], pts[c], pts[i]),
                              s3 = cross(pts[c], pts[a], pts[i]);
                    if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0))
                        if (cross(pts[a], pts[b], pts[c]) != 0) inside = true;
                }
            }
        if (!inside) out.push_back(pts[i]);
    }
    return out;
}

inline std::vector<IntPoint2> minkowski_vertices(std::span<const IntPoint2> p, std::span<const IntPoint2> q) {
    std::vector<IntPoint2> sums;
    for (const auto& a : p)
        for (const auto& b : q) sums.push_back(a + b);
    return hull_vertices2(sums);
}

}  // namespace oracle

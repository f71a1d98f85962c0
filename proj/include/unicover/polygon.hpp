#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "unicover/error.hpp"
#include "unicover/exact_geom.hpp"
#include "unicover/vec.hpp"

namespace unicover {

// A convex polygon in the plane, vertices counterclockwise starting at the
// lexicographically smallest one. A single point and a segment (two
// vertices) are valid degenerate polygons.
template <class T>
class BasicPolygon2 {
public:
    using Point = Vec2<T>;

    BasicPolygon2() = default;

    // Convex hull of arbitrary points (at least one).
    static BasicPolygon2 hull(std::vector<Point> pts) {
        if (pts.empty()) throw PreconditionError("empty_polygon", "polygon needs at least one point");
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        BasicPolygon2 out;
        if (pts.size() <= 2) {
            out.vertices_ = pts;
            return out;
        }
        std::vector<Point> h(2 * pts.size());
        std::size_t k = 0;
        for (const auto& p : pts) {
            while (k >= 2 && orient2(h[k - 2], h[k - 1], p) <= T{0}) --k;
            h[k++] = p;
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            const auto& p = pts[i];
            while (k >= t && orient2(h[k - 2], h[k - 1], p) <= T{0}) --k;
            h[k++] = p;
        }
        h.resize(k - 1);
        out.vertices_ = std::move(h);
        return out;
    }

    // Vertices already counterclockwise and in strictly convex position.
    static BasicPolygon2 from_ccw(std::vector<Point> v) {
        BasicPolygon2 p = hull(v);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (p.vertices_.size() != v.size())
            throw PreconditionError("not_convex", "polygon vertices are not in convex position");
        return p;
    }

    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    int dim() const noexcept { return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1; }

    // Edge vectors in counterclockwise order; a segment contributes b-a and a-b.
    std::vector<Point> edges() const {
        std::vector<Point> e;
        if (vertices_.size() < 2) return e;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            e.push_back(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
        return e;
    }

    bool contains(const Point& p) const {
        switch (dim()) {
            case 0:
                return p == vertices_[0];
            case 1:
                return detail::on_segment2(to_rat_(vertices_[0]), to_rat_(vertices_[1]), to_rat_(p));
            default:
                for (std::size_t i = 0; i < vertices_.size(); ++i)
                    if (orient2(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < T{0}) return false;
                return true;
        }
    }

    // Twice the euclidean area (= normalized area).
    T twice_area() const {
        T a{0};
        for (std::size_t i = 0; i + 2 < vertices_.size(); ++i)
            a = a + orient2(vertices_[0], vertices_[i + 1], vertices_[i + 2]);
        return a;
    }

    friend bool operator==(const BasicPolygon2&, const BasicPolygon2&) = default;

private:
    static RatPoint2 to_rat_(const Point& p) {
        if constexpr (std::is_same_v<T, Rational>)
            return p;
        else
            return to_rat(p);
    }

    std::vector<Point> vertices_;
};

using Polygon2 = BasicPolygon2<Int>;
using RatPolygon2 = BasicPolygon2<Rational>;

inline Polygon2 translate(const Polygon2& p, const IntVec2& t) {
    std::vector<IntPoint2> v;
    for (const auto& x : p.vertices()) v.push_back(x + t);
    return Polygon2::hull(v);
}

inline Polygon2 dilate(const Polygon2& p, Int k) {
    if (k <= 0) throw PreconditionError("bad_dilation", "dilation factor must be positive");
    std::vector<IntPoint2> v;
    for (const auto& x : p.vertices()) v.push_back(k * x);
    return Polygon2::hull(v);
}

inline std::vector<IntPoint2> lattice_points(const Polygon2& p) {
    const auto& v = p.vertices();
    IntPoint2 lo = v[0], hi = v[0];
    for (const auto& x : v) {
        lo.x = std::min(lo.x, x.x);
        lo.y = std::min(lo.y, x.y);
        hi.x = std::max(hi.x, x.x);
        hi.y = std::max(hi.y, x.y);
    }
    std::vector<IntPoint2> out;
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y)
            if (p.contains({x, y})) out.push_back({x, y});
    return out;
}

inline Int width(const Polygon2& p, const Functional2& f) {
    if (f.is_zero()) throw PreconditionError("zero_functional", "width with respect to the zero functional");
    Int lo = f(p.vertices()[0]), hi = lo;
    for (const auto& v : p.vertices()) {
        lo = std::min(lo, f(v));
        hi = std::max(hi, f(v));
    }
    return hi - lo;
}

/// Primitive outer edge normals, i.e. the rays of the normal fan.
/// Segments give both normals orthogonal to them; points give none.
inline std::set<IntVec2> outer_normals(const Polygon2& p) {
    std::set<IntVec2> out;
    for (const auto& e : p.edges()) out.insert(primitive(IntVec2{e.y, -e.x}));
    return out;
}

/// True iff the normal fan of q refines the one of p (p is a weak Minkowski summand of q).
inline bool normal_fan_refines(const Polygon2& q, const Polygon2& p) {
    const auto nq = outer_normals(q);
    for (const auto& n : outer_normals(p))
        if (!nq.contains(n)) return false;
    return true;
}

namespace detail {

// Angular order of directions, starting at +x and turning counterclockwise.
inline bool angle_less(const IntVec2& a, const IntVec2& b) {
    auto half = [](const IntVec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return det2(a, b) > 0;
}

inline IntPoint2 bottom_left(const Polygon2& p) {
    return *std::min_element(p.vertices().begin(), p.vertices().end(), [](const IntPoint2& a, const IntPoint2& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
}

}  // namespace detail

// Minkowski sum by merging the two edge sequences in angular order.
inline Polygon2 minkowski_sum2(const Polygon2& p, const Polygon2& q) {
    std::vector<IntVec2> edges = p.edges();
    for (const auto& e : q.edges()) edges.push_back(e);
    std::stable_sort(edges.begin(), edges.end(), detail::angle_less);

    std::vector<IntVec2> merged;
    for (const auto& e : edges) {
        if (!merged.empty() && det2(merged.back(), e) == 0 && !detail::angle_less(merged.back(), e) &&
            !detail::angle_less(e, merged.back()))
            merged.back() = merged.back() + e;
        else
            merged.push_back(e);
    }
    std::vector<IntPoint2> verts{detail::bottom_left(p) + detail::bottom_left(q)};
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) verts.push_back(verts.back() + merged[i]);
    return Polygon2::from_ccw(verts);
}

// Every vertex has primitive edge directions forming a lattice basis.
inline bool is_smooth(const Polygon2& p) {
    if (p.dim() != 2) throw PreconditionError("not_full_dimensional", "is_smooth needs a 2-dimensional polygon");
    const auto& v = p.vertices();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const IntVec2 a = primitive(v[(i + 1) % n] - v[i]);
        const IntVec2 b = primitive(v[(i + n - 1) % n] - v[i]);
        const Int d = det2(a, b);
        if (d != 1 && d != -1) return false;
    }
    return true;
}

}  // namespace unicover

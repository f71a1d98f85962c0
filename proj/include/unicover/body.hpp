#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "unicover/error.hpp"
#include "unicover/exact_geom.hpp"
#include "unicover/polygon.hpp"
#include "unicover/vec.hpp"

namespace unicover {

// normal . x <= bound, with a primitive outer normal.
struct Facet {
    Functional3 normal;
    Int bound = 0;
    std::vector<std::size_t> vertices;  // indices into Body3::vertices(), sorted
};

/// A full-dimensional lattice polytope in R^3 carrying both descriptions:
/// its vertices (lexicographically sorted) and its irredundant facet
/// inequalities, plus the edge graph.
class Body3 {
public:
    /// Convex hull of `points` (repetitions and non-vertices allowed).
    /// Throws PreconditionError("not_full_dimensional") for flat input.
    static Body3 hull(std::span<const IntPoint3> points) {
        std::vector<IntPoint3> pts(points.begin(), points.end());
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

        // Facet candidates from every non-collinear triple.
        std::map<Functional3, Int> facets;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    IntVec3 nv = cross(pts[j] - pts[i], pts[k] - pts[i]);
                    if (nv == IntVec3{}) continue;
                    nv = primitive(nv);
                    const Int b = dot(nv, pts[i]);
                    if (auto it = facets.find(functional(nv)); it != facets.end() && it->second == b) continue;
                    if (auto it = facets.find(functional(-nv)); it != facets.end() && it->second == -b) continue;
                    bool below = true, above = true;
                    for (const auto& p : pts) {
                        const Int v = dot(nv, p);
                        below = below && v <= b;
                        above = above && v >= b;
                        if (!below && !above) break;
                    }
                    if (below && above) continue;  // everything coplanar so far
                    if (below) facets.emplace(functional(nv), b);
                    if (above) facets.emplace(functional(-nv), -b);
                }
        if (facets.size() < 4) throw PreconditionError("not_full_dimensional", "points do not span R^3");

        Body3 body;
        for (const auto& p : pts) {
            std::vector<IntVec3> tight;
            for (const auto& [f, b] : facets)
                if (f(p) == b) tight.push_back(f.coeffs());
            if (rank_(tight) == 3) body.vertices_.push_back(p);
        }
        for (const auto& [f, b] : facets) {
            Facet fc{f, b, {}};
            for (std::size_t i = 0; i < body.vertices_.size(); ++i)
                if (f(body.vertices_[i]) == b) fc.vertices.push_back(i);
            body.facets_.push_back(std::move(fc));
        }
        body.build_edges_();
        body.validate_();
        return body;
    }

    const std::vector<IntPoint3>& vertices() const noexcept { return vertices_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

    bool contains(const IntPoint3& p) const {
        return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.normal(p) <= f.bound; });
    }
    bool contains(const RatPoint3& p) const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const Facet& f) { return f.normal(p) <= Rational(f.bound); });
    }

    std::vector<Halfspace3> halfspaces() const {
        std::vector<Halfspace3> hs;
        for (const auto& f : facets_) hs.push_back({f.normal, Rational(f.bound)});
        return hs;
    }

    std::vector<IntPoint3> lattice_points() const {
        IntPoint3 lo = vertices_[0], hi = vertices_[0];
        for (const auto& v : vertices_)
            for (std::size_t i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
        std::vector<IntPoint3> out;
        for (Int x = lo.x; x <= hi.x; ++x)
            for (Int y = lo.y; y <= hi.y; ++y)
                for (Int z = lo.z; z <= hi.z; ++z)
                    if (contains(IntPoint3{x, y, z})) out.push_back({x, y, z});
        return out;
    }

    // Vertex indices of a facet in cyclic order.
    std::vector<std::size_t> facet_cycle(std::size_t facet) const {
        const Facet& f = facets_[facet];
        const IntVec3 nv = f.normal.coeffs();
        std::size_t drop = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (nv[i] != 0) drop = i;
        std::vector<IntPoint2> proj;
        std::map<IntPoint2, std::size_t> back;
        for (auto idx : f.vertices) {
            const auto& v = vertices_[idx];
            IntPoint2 p = drop == 0 ? IntPoint2{v.y, v.z} : (drop == 1 ? IntPoint2{v.x, v.z} : IntPoint2{v.x, v.y});
            proj.push_back(p);
            back[p] = idx;
        }
        std::vector<std::size_t> cyc;
        const Polygon2 hull = Polygon2::hull(proj);
        for (const auto& p : hull.vertices()) cyc.push_back(back.at(p));
        return cyc;
    }

    /// Normalized volume (6 x euclidean), by the divergence formula over
    /// triangulated facets.
    Int normalized_volume() const {
        Int total = 0;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            auto cyc = facet_cycle(f);
            const IntVec3 nv = facets_[f].normal.coeffs();
            for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
                const auto& a = vertices_[cyc[0]];
                const auto& b = vertices_[cyc[i]];
                const auto& c = vertices_[cyc[i + 1]];
                Int d = det3(a, b, c);
                // orient each triangle outward
                if (dot(cross(b - a, c - a), nv) < 0) d = -d;
                total = checked::add(total, d);
            }
        }
        return total;
    }

private:
    static int rank_(const std::vector<IntVec3>& vs) {
        if (vs.empty()) return 0;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                for (std::size_t k = j + 1; k < vs.size(); ++k)
                    if (det3(vs[i], vs[j], vs[k]) != 0) return 3;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (cross(vs[i], vs[j]) != IntVec3{}) return 2;
        for (const auto& v : vs)
            if (v != IntVec3{}) return 1;
        return 0;
    }

    void build_edges_() {
        std::vector<std::vector<std::size_t>> inc(vertices_.size());
        for (std::size_t f = 0; f < facets_.size(); ++f)
            for (auto v : facets_[f].vertices) inc[v].push_back(f);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
                std::vector<std::size_t> common;
                std::set_intersection(inc[i].begin(), inc[i].end(), inc[j].begin(), inc[j].end(),
                                      std::back_inserter(common));
                if (common.size() >= 2) edges_.emplace_back(i, j);
            }
    }

    void validate_() const {
        for (const auto& f : facets_) {
            for (const auto& v : vertices_)
                if (f.normal(v) > f.bound) throw GuaranteeViolation("BadHull", "vertex violates a facet", "");
            std::vector<IntVec3> diffs;
            for (auto i : f.vertices) diffs.push_back(vertices_[i] - vertices_[f.vertices[0]]);
            if (f.vertices.size() < 3 || rank_(diffs) != 2)
                throw GuaranteeViolation("BadHull", "facet not spanned by its vertices", "");
        }
    }

    std::vector<IntPoint3> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

inline Int width(const Body3& body, const Functional3& f) {
    if (f.is_zero()) throw PreconditionError("zero_functional", "width with respect to the zero functional");
    Int lo = f(body.vertices()[0]), hi = lo;
    for (const auto& v : body.vertices()) {
        lo = std::min(lo, f(v));
        hi = std::max(hi, f(v));
    }
    return hi - lo;
}

inline Body3 dilate(const Body3& body, Int k) {
    if (k <= 0) throw PreconditionError("bad_dilation", "dilation factor must be positive");
    std::vector<IntPoint3> v;
    for (const auto& p : body.vertices()) v.push_back(k * p);
    return Body3::hull(v);
}

// Every vertex has exactly three edges, with primitive directions of determinant +-1.
inline bool is_smooth(const Body3& body) {
    const auto& vs = body.vertices();
    std::vector<std::vector<IntVec3>> dirs(vs.size());
    for (const auto& [i, j] : body.edges()) {
        dirs[i].push_back(primitive(vs[j] - vs[i]));
        dirs[j].push_back(primitive(vs[i] - vs[j]));
    }
    for (const auto& d : dirs) {
        if (d.size() != 3) return false;
        const Int det = det3(d[0], d[1], d[2]);
        if (det != 1 && det != -1) return false;
    }
    return true;
}

struct Slice {
    RatPolygon2 polygon;
    bool is_lattice = false;

    Polygon2 lattice_polygon() const {
        if (!is_lattice) throw PreconditionError("slice_not_lattice", "slice has non-integral vertices");
        std::vector<IntPoint2> v;
        for (const auto& p : polygon.vertices()) v.push_back({p.x.num(), p.y.num()});
        return Polygon2::hull(v);
    }

    // First non-integral vertex, if any.
    std::optional<RatPoint2> offending_vertex() const {
        for (const auto& p : polygon.vertices())
            if (!p.x.is_integer() || !p.y.is_integer()) return p;
        return std::nullopt;
    }
};

/// Intersection of the body with the plane z = h.
inline Slice slice_z(const Body3& body, Int h) {
    const auto& vs = body.vertices();
    std::vector<RatPoint2> pts;
    for (const auto& v : vs)
        if (v.z == h) pts.push_back({v.x, v.y});
    for (const auto& [i, j] : body.edges()) {
        const auto& a = vs[i];
        const auto& b = vs[j];
        if ((a.z < h && b.z > h) || (a.z > h && b.z < h)) {
            const Rational t(h - a.z, b.z - a.z);
            pts.push_back({Rational(a.x) + t * Rational(b.x - a.x), Rational(a.y) + t * Rational(b.y - a.y)});
        }
    }
    if (pts.empty()) throw PreconditionError("empty_slice", "plane z = " + std::to_string(h) + " misses the body");
    Slice s{RatPolygon2::hull(pts), true};
    s.is_lattice = !s.offending_vertex().has_value();
    return s;
}

/// Integer points of conv(points), for convex hulls of any dimension 0..3.
inline std::vector<IntPoint3> hull_lattice_points(std::span<const IntPoint3> points) {
    std::vector<IntPoint3> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {};
    if (pts.size() == 1) return pts;

    // Affine dimension and a normal for the planar case.
    std::optional<IntVec3> dir;
    std::optional<IntVec3> normal;
    bool full = false;
    for (std::size_t i = 1; i < pts.size() && !full; ++i) {
        const IntVec3 d = pts[i] - pts[0];
        if (!dir) {
            dir = d;
            continue;
        }
        const IntVec3 c = cross(*dir, d);
        if (c == IntVec3{}) continue;
        if (!normal) {
            normal = c;
            continue;
        }
        if (dot(*normal, d) != 0) full = true;
    }
    if (full) return Body3::hull(pts).lattice_points();

    std::vector<IntPoint3> out;
    if (!normal) {
        // A segment from the lexicographic minimum to the maximum.
        const IntPoint3 a = pts.front(), b = pts.back();
        const IntVec3 d = b - a;
        const Int g = gcd(gcd(d.x, d.y), d.z);
        const IntVec3 step{d.x / g, d.y / g, d.z / g};
        for (Int i = 0; i <= g; ++i) out.push_back(a + i * step);
        return out;
    }
    const IntVec3 nv = primitive(*normal);
    std::size_t drop = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (nv[i] != 0) drop = i;
    auto proj = [&](const IntPoint3& v) {
        return drop == 0 ? IntPoint2{v.y, v.z} : (drop == 1 ? IntPoint2{v.x, v.z} : IntPoint2{v.x, v.y});
    };
    std::vector<IntPoint2> p2;
    for (const auto& p : pts) p2.push_back(proj(p));
    const Polygon2 poly = Polygon2::hull(p2);
    const Int b = dot(nv, pts[0]);
    IntPoint3 lo = pts[0], hi = pts[0];
    for (const auto& v : pts)
        for (std::size_t i = 0; i < 3; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y)
            for (Int z = lo.z; z <= hi.z; ++z) {
                const IntPoint3 p{x, y, z};
                if (dot(nv, p) == b && poly.contains(proj(p))) out.push_back(p);
            }
    return out;
}

/// base + [0,1]-combinations of three independent integer edges.
class Parallelepiped {
public:
    Parallelepiped(IntPoint3 base, std::array<IntVec3, 3> edges) : base_(base), edges_(edges) {
        if (det3(edges_[0], edges_[1], edges_[2]) == 0)
            throw PreconditionError("degenerate_parallelepiped", "parallelepiped edges are linearly dependent");
    }

    const IntPoint3& base() const noexcept { return base_; }
    const std::array<IntVec3, 3>& edges() const noexcept { return edges_; }
    Int det() const { return det3(edges_[0], edges_[1], edges_[2]); }

    std::vector<IntPoint3> vertices() const {
        std::vector<IntPoint3> v;
        for (int m = 0; m < 8; ++m) {
            IntPoint3 p = base_;
            for (int i = 0; i < 3; ++i)
                if (m & (1 << i)) p = p + edges_[i];
            v.push_back(p);
        }
        return v;
    }

    Body3 body() const {
        auto v = vertices();
        return Body3::hull(v);
    }

private:
    IntPoint3 base_;
    std::array<IntVec3, 3> edges_;
};

}  // namespace unicover

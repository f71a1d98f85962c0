#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <vector>

#include "unicover/error.hpp"
#include "unicover/exact_geom.hpp"
#include "unicover/vec.hpp"

namespace unicover {

/// Lattice tetrahedron. Vertices are stored sorted, with the last two
/// swapped when needed so that det(v1-v0, v2-v0, v3-v0) > 0. Two simplices
/// compare by their sorted vertex lists.
class Simplex3 {
public:
    explicit Simplex3(std::array<IntPoint3, 4> v) : sorted_(v) {
        std::sort(sorted_.begin(), sorted_.end());
        v_ = sorted_;
        det_ = det3(v_[1] - v_[0], v_[2] - v_[0], v_[3] - v_[0]);
        if (det_ == 0) throw PreconditionError("degenerate_simplex", "degenerate tetrahedron " + describe_(sorted_));
        if (det_ < 0) {
            std::swap(v_[2], v_[3]);
            det_ = -det_;
        }
    }

    const std::array<IntPoint3, 4>& vertices() const noexcept { return v_; }
    const std::array<IntPoint3, 4>& sorted_vertices() const noexcept { return sorted_; }
    const IntPoint3& operator[](std::size_t i) const { return v_[i]; }

    Int normalized_volume() const noexcept { return det_; }

    bool has_vertex(const IntPoint3& p) const { return std::find(v_.begin(), v_.end(), p) != v_.end(); }

    // lambda_i * volume; all >= 0 iff p in the closed simplex.
    std::array<Int, 4> barycentric_numerators(const IntPoint3& p) const {
        std::array<Int, 4> out{};
        for (std::size_t i = 0; i < 4; ++i) {
            auto w = v_;
            w[i] = p;
            out[i] = det3(w[1] - w[0], w[2] - w[0], w[3] - w[0]);
        }
        return out;
    }

    bool contains(const IntPoint3& p, Membership mode = Membership::Closed) const {
        for (Int l : barycentric_numerators(p))
            if (l < 0 || (l == 0 && mode == Membership::Open)) return false;
        return true;
    }

    bool contains(const RatPoint3& p, Membership mode = Membership::Closed) const {
        return point_in_simplex(p, v_, mode);
    }

    std::vector<IntPoint3> lattice_points() const {
        IntPoint3 lo = v_[0], hi = v_[0];
        for (const auto& v : v_)
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

    // Outer facet inequalities; entry i is the facet opposite vertex i.
    std::array<Halfspace3, 4> halfspaces() const {
        std::array<Halfspace3, 4> hs;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& a = v_[(i + 1) % 4];
            const auto& b = v_[(i + 2) % 4];
            const auto& c = v_[(i + 3) % 4];
            IntVec3 n = primitive(cross(b - a, c - a));
            if (dot(n, v_[i]) > dot(n, a)) n = -n;
            hs[i] = {functional(n), Rational(dot(n, a))};
        }
        return hs;
    }

    template <class F>
    Simplex3 mapped(F&& f) const {
        return Simplex3({f(v_[0]), f(v_[1]), f(v_[2]), f(v_[3])});
    }

    std::string to_string() const { return describe_(sorted_); }

    friend bool operator==(const Simplex3& a, const Simplex3& b) { return a.sorted_ == b.sorted_; }
    friend std::strong_ordering operator<=>(const Simplex3& a, const Simplex3& b) { return a.sorted_ <=> b.sorted_; }

private:
    static std::string describe_(const std::array<IntPoint3, 4>& v) {
        std::string s = "conv(";
        for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + unicover::to_string(v[i]);
        return s + ")";
    }

    std::array<IntPoint3, 4> sorted_;
    std::array<IntPoint3, 4> v_;
    Int det_ = 0;
};

/// Tetrahedron with rational vertices (corner tetrahedra have half-integral apexes).
class RatSimplex3 {
public:
    explicit RatSimplex3(std::array<RatPoint3, 4> v) : v_(v) {
        if (det3(v_[1] - v_[0], v_[2] - v_[0], v_[3] - v_[0]) == Rational(0))
            throw PreconditionError("degenerate_simplex", "degenerate rational tetrahedron");
    }

    const std::array<RatPoint3, 4>& vertices() const noexcept { return v_; }

    // 6 x euclidean volume
    Rational normalized_volume() const {
        Rational d = det3(v_[1] - v_[0], v_[2] - v_[0], v_[3] - v_[0]);
        return d.sign() < 0 ? -d : d;
    }

    bool contains(const RatPoint3& p, Membership mode = Membership::Closed) const {
        return point_in_simplex(p, v_, mode);
    }
    bool contains(const IntPoint3& p, Membership mode = Membership::Closed) const { return contains(to_rat(p), mode); }

    std::array<Halfspace3, 4> halfspaces() const {
        std::array<Halfspace3, 4> hs;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& a = v_[(i + 1) % 4];
            const auto& b = v_[(i + 2) % 4];
            const auto& c = v_[(i + 3) % 4];
            const RatPoint3 nr = cross(b - a, c - a);
            Int l = 1;
            for (std::size_t k = 0; k < 3; ++k) l = checked::mul(l / gcd(l, nr[k].den()), nr[k].den());
            IntVec3 n{(nr.x * Rational(l)).num(), (nr.y * Rational(l)).num(), (nr.z * Rational(l)).num()};
            n = primitive(n);
            const Functional3 f = functional(n);
            if (f(v_[i]) > f(a)) {
                hs[i] = {functional(-n), -f(a)};
            } else {
                hs[i] = {f, f(a)};
            }
        }
        return hs;
    }

    std::vector<IntPoint3> lattice_points() const {
        const auto hs = halfspaces();
        return unicover::lattice_points(std::span<const Halfspace3>(hs));
    }

private:
    std::array<RatPoint3, 4> v_;
};

inline Int normalized_volume(const Simplex3& s) { return s.normalized_volume(); }

// Only the four vertices are lattice points.
inline bool is_empty(const Simplex3& s) { return s.lattice_points().size() == 4; }

inline bool is_unimodular(const Simplex3& s) { return s.normalized_volume() == 1; }

}  // namespace unicover

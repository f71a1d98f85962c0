#pragma once

// Unimodular covers of Cayley sums Cay(P, Q) = conv(P x {0} u Q x {1}) when
// P is a weak Minkowski summand of Q, and of lattice prismatoids sliced
// into such Cayley slabs.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unicover/body.hpp"
#include "unicover/cover.hpp"
#include "unicover/error.hpp"
#include "unicover/exact_geom.hpp"
#include "unicover/polygon.hpp"
#include "unicover/simplex.hpp"
#include "unicover/triangulate.hpp"

namespace unicover {

struct CayleySpec {
    Polygon2 P;
    Polygon2 Q;
};

inline IntPoint3 lift(const IntPoint2& p, Int h) { return {p.x, p.y, h}; }

inline Body3 cayley_embed(const CayleySpec& spec) {
    std::vector<IntPoint3> pts;
    for (const auto& v : spec.P.vertices()) pts.push_back(lift(v, 0));
    for (const auto& v : spec.Q.vertices()) pts.push_back(lift(v, 1));
    return Body3::hull(pts);
}

/// Vertex counts at height 0 and at height 1.
struct CayleyType {
    int lower = 0;
    int upper = 0;
    friend bool operator==(const CayleyType&, const CayleyType&) = default;
};

inline std::string to_string(const CayleyType& t) {
    return "(" + std::to_string(t.lower) + "," + std::to_string(t.upper) + ")";
}

inline CayleyType classify_type(const Simplex3& t) {
    CayleyType out;
    for (const auto& v : t.vertices()) {
        if (v.z == 0)
            ++out.lower;
        else if (v.z == 1)
            ++out.upper;
        else
            throw PreconditionError("bad_height", "vertex " + to_string(v) + " is not at height 0 or 1");
    }
    return out;
}

/// Segments p (height 0) and q (height 1) of a (2,2) tetrahedron, with the
/// primitive functionals constant on each. Endpoints are ordered so that
/// f_q(p1) < f_q(p2) and f_p(q1) < f_p(q2).
struct StripFrame {
    IntPoint2 p1, p2, q1, q2;
    Functional2 f_p, f_q;
    Int w = 0;

    static StripFrame make(IntPoint2 p1, IntPoint2 p2, IntPoint2 q1, IntPoint2 q2) {
        const IntVec2 pv = p2 - p1, qv = q2 - q1;
        if (pv == IntVec2{} || qv == IntVec2{}) throw PreconditionError("degenerate_segment", "strip frame: empty segment");
        if (det2(pv, qv) == 0) throw PreconditionError("parallel_segments", "strip frame: p and q are parallel");
        StripFrame f;
        f.f_p = functional(primitive(IntVec2{-pv.y, pv.x}));
        f.f_q = functional(primitive(IntVec2{-qv.y, qv.x}));
        if (f.f_q(p1) > f.f_q(p2)) std::swap(p1, p2);
        if (f.f_p(q1) > f.f_p(q2)) std::swap(q1, q2);
        f.p1 = p1;
        f.p2 = p2;
        f.q1 = q1;
        f.q2 = q2;
        const Int d = det2(pv, qv);
        f.w = d < 0 ? -d : d;
        return f;
    }

    static StripFrame of(const Simplex3& t) {
        std::vector<IntPoint2> lo, hi;
        for (const auto& v : t.vertices()) (v.z == 0 ? lo : hi).push_back({v.x, v.y});
        if (lo.size() != 2 || hi.size() != 2)
            throw PreconditionError("not_type_22", "strip frame needs a (2,2) tetrahedron, got " + t.to_string());
        return make(lo[0], lo[1], hi[0], hi[1]);
    }
};

enum class StripSide { P, Q };

inline const char* to_string(StripSide s) { return s == StripSide::P ? "P-strip" : "Q-strip"; }

struct StripWitness {
    StripSide side = StripSide::P;
    IntPoint2 u;
};

class NoStripWitness : public GuaranteeViolation {
public:
    NoStripWitness(std::vector<IntPoint2> p_strip, std::vector<IntPoint2> q_strip, const std::string& diag)
        : GuaranteeViolation("NoStripWitness", "neither open strip contains a lattice point", diag),
          p_strip_(std::move(p_strip)),
          q_strip_(std::move(q_strip)) {}
    // Lattice points of P (resp. Q) that were tested.
    const std::vector<IntPoint2>& p_enumeration() const noexcept { return p_strip_; }
    const std::vector<IntPoint2>& q_enumeration() const noexcept { return q_strip_; }

private:
    std::vector<IntPoint2> p_strip_, q_strip_;
};

/// Looks for a lattice point of P strictly between the lines through p1 and
/// p2 parallel to q, then for one of Q strictly between the lines through
/// q1 and q2 parallel to p. `p_points` and `q_points` are the lattice points
/// of P and Q in lexicographic order.
inline StripWitness strip_witness(const StripFrame& frame, const std::vector<IntPoint2>& p_points,
                                  const std::vector<IntPoint2>& q_points) {
    if (frame.w < 2)
        throw PreconditionError("unimodular_parallelogram", "strip search needs a non-unimodular parallelogram p + q");
    const Int lo_p = frame.f_q(frame.p1), hi_p = frame.f_q(frame.p2);
    for (const auto& u : p_points) {
        const Int v = frame.f_q(u);
        if (lo_p < v && v < hi_p) return {StripSide::P, u};
    }
    const Int lo_q = frame.f_p(frame.q1), hi_q = frame.f_p(frame.q2);
    for (const auto& u : q_points) {
        const Int v = frame.f_p(u);
        if (lo_q < v && v < hi_q) return {StripSide::Q, u};
    }
    std::string diag = "p=[" + to_string(frame.p1) + "," + to_string(frame.p2) + "] q=[" + to_string(frame.q1) + "," +
                       to_string(frame.q2) + "] w=" + std::to_string(frame.w) + "; P points:";
    for (const auto& u : p_points) diag += " " + to_string(u);
    diag += "; Q points:";
    for (const auto& u : q_points) diag += " " + to_string(u);
    throw NoStripWitness(p_points, q_points, diag);
}

inline StripWitness strip_witness(const StripFrame& frame, const Polygon2& P, const Polygon2& Q) {
    if (!P.contains(frame.p1) || !P.contains(frame.p2) || !Q.contains(frame.q1) || !Q.contains(frame.q2))
        throw PreconditionError("segment_outside", "strip search: p must lie in P and q in Q");
    return strip_witness(frame, lattice_points(P), lattice_points(Q));
}

/// Replaces an empty (2,2) tetrahedron Cay(p, q) by three tetrahedra whose
/// union contains it. For a P-strip witness u with t = conv(u, p1, p2) the
/// pieces are Cay([p1,u], q), Cay([p2,u], q) and Cay(t, {q_i}), where
/// [u, q_i] crosses conv(p1, p2, q_j); the Q-strip case is symmetric. The first two volumes add up to vol(T).
inline std::array<Simplex3, 3> split_22(const Simplex3& t, const StripWitness& wit) {
    const StripFrame f = StripFrame::of(t);
    const bool on_p = wit.side == StripSide::P;
    // Segment s = [s1, s2] at height hs gets cut at u; r = [r1, r2] at height hr stays.
    const IntPoint2 s1 = on_p ? f.p1 : f.q1, s2 = on_p ? f.p2 : f.q2;
    const IntPoint2 r1 = on_p ? f.q1 : f.p1, r2 = on_p ? f.q2 : f.p2;
    const Int hs = on_p ? 0 : 1, hr = 1 - hs;
    const IntPoint3 U = lift(wit.u, hs), S1 = lift(s1, hs), S2 = lift(s2, hs), R1 = lift(r1, hr), R2 = lift(r2, hr);

    auto nondegenerate = [](const std::array<IntPoint3, 4>& v) {
        return det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]) != 0;
    };
    const std::array<IntPoint3, 4> left{S1, U, R1, R2}, right{S2, U, R1, R2};
    if (!nondegenerate(left) || !nondegenerate(right))
        throw PreconditionError("witness_not_in_open_strip", "split point lies on a strip boundary");

    // [U, R_i] crosses conv(S1, S2, R_j) for exactly one ordering {i, j}. The
    // five points then form a circuit whose three-piece triangulation is
    // {left, right, conv(U, S1, S2, R_i)}.
    const bool cross2 = segment_triangle_intersect(to_rat(U), to_rat(R2), to_rat(S1), to_rat(S2), to_rat(R1));
    const bool cross1 = segment_triangle_intersect(to_rat(U), to_rat(R1), to_rat(S1), to_rat(S2), to_rat(R2));
    if (cross1 == cross2)
        throw GuaranteeViolation("AmbiguousFlip", cross1 ? "both flip candidates pass" : "no flip candidate passes",
                                 t.to_string() + " u=" + to_string(wit.u));
    const IntPoint3 Ri = cross1 ? R1 : R2;

    std::array<Simplex3, 3> out{Simplex3(left), Simplex3(right), Simplex3({U, S1, S2, Ri})};
    if (out[0].normalized_volume() + out[1].normalized_volume() != t.normalized_volume())
        throw GuaranteeViolation("SplitVolume", "split volumes do not add up", t.to_string() + " u=" + to_string(wit.u));
    return out;
}

struct SplitRecord {
    Simplex3 tetrahedron;
    StripWitness witness;
    std::array<Simplex3, 3> pieces;
};

struct CayleyOptions {
    // Skip the fan refinement check (a missing witness may then surface as NoStripWitness).
    bool force = false;
    std::function<void(const SplitRecord&)> on_split;
};

namespace detail {

class CayleyCoverer {
public:
    CayleyCoverer(const CayleySpec& spec, const CayleyOptions& opts, Cover& out)
        : opts_(opts), out_(out), p_points_(lattice_points(spec.P)), q_points_(lattice_points(spec.Q)) {}

    void process(const Simplex3& t, int depth, const std::string& path) {
        if (!visited_.insert(t).second) return;
        if (is_unimodular(t)) {
            out_.add(t, path, depth);
            return;
        }
        const CayleyType type = classify_type(t);
        if (type != CayleyType{2, 2})
            throw GuaranteeViolation("NonUnimodularEmptyTriangle",
                                     "empty tetrahedron of type " + to_string(type) + " is not unimodular", t.to_string());
        const StripWitness wit = strip_witness(StripFrame::of(t), p_points_, q_points_);
        const auto pieces = split_22(t, wit);
        if (opts_.on_split) opts_.on_split({t, wit, pieces});
        for (std::size_t i = 0; i < 3; ++i) {
            const auto sub = refine_to_empty(pieces[i]);
            for (std::size_t k = 0; k < sub.size(); ++k) {
                if (!is_unimodular(sub[k]) && sub[k].normalized_volume() >= t.normalized_volume())
                    throw GuaranteeViolation("VolumeNotDecreasing", "split piece is not smaller",
                                             t.to_string() + " -> " + sub[k].to_string());
                process(sub[k], depth + 1, path + "/" + (wit.side == StripSide::P ? "P" : "Q") +
                                               std::to_string(i) + "." + std::to_string(k));
            }
        }
    }

private:
    const CayleyOptions& opts_;
    Cover& out_;
    std::vector<IntPoint2> p_points_, q_points_;
    std::set<Simplex3> visited_;
};

}  // namespace detail

inline Cover cover_cayley(const CayleySpec& spec, const CayleyOptions& opts = {}) {
    if (!opts.force && !normal_fan_refines(spec.Q, spec.P))
        throw PreconditionError("fan_not_refining", "the normal fan of Q does not refine the normal fan of P");
    const Body3 body = cayley_embed(spec);
    Cover out("cayley");
    detail::CayleyCoverer coverer(spec, opts, out);
    const auto pieces = empty_triangulation(body);
    for (std::size_t i = 0; i < pieces.size(); ++i) coverer.process(pieces[i], 0, "piece" + std::to_string(i));
    return out;
}

struct PrismatoidSpec {
    Polygon2 Q1;
    Polygon2 Q2;
    Int k = 1;
};

class SliceNotLattice : public PreconditionError {
public:
    SliceNotLattice(Int height, RatPoint2 vertex)
        : PreconditionError("slice_not_lattice", "slice at height " + std::to_string(height) +
                                                     " has the non-integral vertex " + to_string(vertex)),
          height_(height),
          vertex_(vertex) {}
    Int height() const noexcept { return height_; }
    const RatPoint2& vertex() const noexcept { return vertex_; }

private:
    Int height_;
    RatPoint2 vertex_;
};

inline Body3 prismatoid_body(const PrismatoidSpec& spec) {
    if (spec.k < 1) throw PreconditionError("bad_height", "prismatoid height must be at least 1");
    std::vector<IntPoint3> pts;
    for (const auto& v : spec.Q1.vertices()) pts.push_back(lift(v, 0));
    for (const auto& v : spec.Q2.vertices()) pts.push_back(lift(v, spec.k));
    return Body3::hull(pts);
}

/// Lattice polygons P x {i} for i = 0..k.
inline std::vector<Polygon2> prismatoid_slices(const PrismatoidSpec& spec) {
    const Body3 body = prismatoid_body(spec);
    // Height 1 is the hypothesis; the other levels follow from it.
    if (spec.k >= 2) {
        const Slice s = slice_z(body, 1);
        if (!s.is_lattice) throw SliceNotLattice(1, *s.offending_vertex());
    }
    std::vector<Polygon2> out;
    for (Int h = 0; h <= spec.k; ++h) {
        const Slice s = slice_z(body, h);
        if (!s.is_lattice) throw SliceNotLattice(h, *s.offending_vertex());
        out.push_back(s.lattice_polygon());
    }
    return out;
}

inline Cover cover_prismatoid(const PrismatoidSpec& spec, const CayleyOptions& opts = {}) {
    const auto slices = prismatoid_slices(spec);
    Cover out("prismatoid");
    for (Int i = 1; i <= spec.k; ++i) {
        const Polygon2& lower = slices[i - 1];
        const Polygon2& upper = slices[i];
        const std::string prefix = "slab" + std::to_string(i) + "/";
        if (normal_fan_refines(upper, lower)) {
            const Cover c = cover_cayley({lower, upper}, opts);
            out.merge(c, [&](const Simplex3& s) { return s.mapped([&](IntPoint3 v) { return IntPoint3{v.x, v.y, v.z + i - 1}; }); },
                      prefix);
        } else if (normal_fan_refines(lower, upper)) {
            const Cover c = cover_cayley({upper, lower}, opts);
            out.merge(c, [&](const Simplex3& s) { return s.mapped([&](IntPoint3 v) { return IntPoint3{v.x, v.y, i - v.z}; }); },
                      prefix);
        } else if (spec.k == 1) {
            throw PreconditionError("fan_not_refining", "neither base of the Cayley sum is a weak summand of the other");
        } else {
            throw GuaranteeViolation("NoSlabOrientation", "neither slice of a slab refines the other",
                                     "slab " + std::to_string(i));
        }
    }
    return out;
}

/// Splits a body with all vertices at heights 0 and 1 into its two bases.
inline std::pair<Polygon2, Polygon2> cayley_bases(const Body3& body) {
    std::vector<IntPoint2> lo, hi;
    for (const auto& v : body.vertices()) {
        if (v.z == 0)
            lo.push_back({v.x, v.y});
        else if (v.z == 1)
            hi.push_back({v.x, v.y});
        else
            throw PreconditionError("not_cayley_position", "vertex " + to_string(v) + " is not at height 0 or 1");
    }
    if (lo.empty() || hi.empty()) throw PreconditionError("not_cayley_position", "body misses one of the two levels");
    return {Polygon2::hull(lo), Polygon2::hull(hi)};
}

/// Cover of kP for a width-one body P given in Cayley position.
inline Cover cover_width1_dilation(const Body3& body, Int k, const CayleyOptions& opts = {}) {
    if (k < 2) throw PreconditionError("bad_factor", "dilation factor must be at least 2");
    const auto [q1, q2] = cayley_bases(body);
    Cover c = cover_prismatoid({dilate(q1, k), dilate(q2, k), k}, opts);
    c.set_target(std::to_string(k) + "-fold dilation");
    return c;
}

}  // namespace unicover

#pragma once

// Unimodular covers of lattice parallelepipeds via circumscribed
// parallelepipeds and corner tetrahedra.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "unicover/body.hpp"
#include "unicover/cover.hpp"
#include "unicover/error.hpp"
#include "unicover/simplex.hpp"
#include "unicover/triangulate.hpp"

namespace unicover {

/// The parallelepiped C(T) through p1..p4 and q_i = (p1+p2+p3+p4)/2 - p_i.
struct Circumscribed {
    std::array<IntPoint3, 4> p;
    std::array<RatPoint3, 4> q;

    // Common value of p_i + q_i.
    RatPoint3 center_sum() const { return to_rat(p[0]) + q[0]; }

    std::array<RatPoint3, 8> vertices() const {
        return {to_rat(p[0]), to_rat(p[1]), to_rat(p[2]), to_rat(p[3]), q[0], q[1], q[2], q[3]};
    }
};

class NoCornerInside : public GuaranteeViolation {
public:
    NoCornerInside(std::array<bool, 4> verdicts, const std::string& diag)
        : GuaranteeViolation("NoCornerInside", "no apex q_i of the circumscribed parallelepiped lies in the container",
                             diag),
          verdicts_(verdicts) {}
    const std::array<bool, 4>& verdicts() const noexcept { return verdicts_; }

private:
    std::array<bool, 4> verdicts_;
};

class NoWitness : public GuaranteeViolation {
public:
    NoWitness(std::vector<IntPoint3> enumeration, const std::string& diag)
        : GuaranteeViolation("NoWitness", "corner tetrahedron has no lattice point besides the p_i", diag),
          enumeration_(std::move(enumeration)) {}
    const std::vector<IntPoint3>& enumeration() const noexcept { return enumeration_; }

private:
    std::vector<IntPoint3> enumeration_;
};

inline Circumscribed circumscribe(const std::array<IntPoint3, 4>& p) {
    const Int vol = det3(p[1] - p[0], p[2] - p[0], p[3] - p[0]);
    if (vol == 0) throw PreconditionError("degenerate_simplex", "circumscribe: degenerate tetrahedron");
    Circumscribed c{p, {}};
    const IntPoint3 sum = p[0] + p[1] + p[2] + p[3];
    for (std::size_t i = 0; i < 4; ++i) {
        const IntVec3 twice = sum - 2 * p[i];
        c.q[i] = {Rational(twice.x, 2), Rational(twice.y, 2), Rational(twice.z, 2)};
    }
    // C(T) has edges q_j - p_1 (j != 1) at p_1 and three times the volume of T.
    const Rational para = det3(c.q[1] - to_rat(p[0]), c.q[2] - to_rat(p[0]), c.q[3] - to_rat(p[0]));
    const Rational expect = Rational(vol) / Rational(2);
    if (para != expect && para != -expect)
        throw GuaranteeViolation("BadCircumscribed", "parallelepiped volume is not 3 vol(T)", "");
    return c;
}

inline Circumscribed circumscribe(const Simplex3& t) { return circumscribe(t.vertices()); }

/// Corner tetrahedron T_i = conv(q_i, p_j : j != i); indices are 0-based.
inline RatSimplex3 corner(const Circumscribed& c, std::size_t i) {
    if (i > 3) throw PreconditionError("bad_index", "corner index out of range");
    std::array<RatPoint3, 4> v;
    for (std::size_t j = 0; j < 4; ++j) v[j] = j == i ? c.q[i] : to_rat(c.p[j]);
    return RatSimplex3(v);
}

/// Smallest i with q_i inside the container; then T_i lies in it by convexity.
inline std::size_t select_corner(const Circumscribed& c, const Body3& container) {
    std::array<bool, 4> verdicts{};
    for (std::size_t i = 0; i < 4; ++i) verdicts[i] = container.contains(c.q[i]);
    for (std::size_t i = 0; i < 4; ++i)
        if (verdicts[i]) return i;
    std::string diag;
    for (std::size_t i = 0; i < 4; ++i) diag += "q" + std::to_string(i + 1) + "=" + to_string(c.q[i]) + " outside; ";
    throw NoCornerInside(verdicts, diag);
}

/// Lexicographically smallest lattice point of the closed corner T_i other than the p_j.
inline IntPoint3 corner_witness(const Circumscribed& c, std::size_t i) {
    if (std::abs(det3(c.p[1] - c.p[0], c.p[2] - c.p[0], c.p[3] - c.p[0])) == 1)
        throw PreconditionError("unimodular", "corner_witness: tetrahedron is unimodular");
    const auto pts = corner(c, i).lattice_points();
    for (const auto& x : pts)
        if (std::find(c.p.begin(), c.p.end(), x) == c.p.end()) return x;
    std::string diag = "corner " + std::to_string(i + 1) + " lattice points:";
    for (const auto& x : pts) diag += " " + to_string(x);
    throw NoWitness(pts, diag);
}

namespace detail {

class ParallelepipedCoverer {
public:
    explicit ParallelepipedCoverer(const Body3& container, Cover& out) : container_(container), out_(out) {}

    void process(const Simplex3& t, int depth, const std::string& path) {
        if (!visited_.insert(t).second) return;
        if (is_unimodular(t)) {
            out_.add(t, path, depth);
            return;
        }
        const Circumscribed c = circumscribe(t);
        const std::size_t m = select_corner(c, container_);
        const IntPoint3 u = corner_witness(c, m);
        if (!container_.contains(u))
            throw GuaranteeViolation("WitnessOutside", "corner witness outside the container", to_string(u));
        for (std::size_t j = 0; j < 4; ++j) {
            if (j == m) continue;
            auto v = t.vertices();
            v[j] = u;
            if (det3(v[1] - v[0], v[2] - v[0], v[3] - v[0]) == 0) continue;
            const auto pieces = refine_to_empty(Simplex3(v));
            for (std::size_t k = 0; k < pieces.size(); ++k) {
                if (pieces[k].normalized_volume() >= t.normalized_volume())
                    throw GuaranteeViolation("VolumeNotDecreasing", "recursion did not decrease the volume",
                                             t.to_string() + " -> " + pieces[k].to_string());
                process(pieces[k], depth + 1,
                        path + "/c" + std::to_string(m + 1) + "S" + std::to_string(j + 1) + "." + std::to_string(k));
            }
        }
    }

private:
    const Body3& container_;
    Cover& out_;
    std::set<Simplex3> visited_;
};

}  // namespace detail

/// Unimodular cover of an empty tetrahedron by simplices inside `container`
/// (a parallelepiped, for which a usable corner always exists).
inline Cover cover_empty_in(const Simplex3& t, const Body3& container) {
    for (const auto& v : t.vertices())
        if (!container.contains(v))
            throw PreconditionError("not_contained", "tetrahedron is not inside the container");
    if (!is_empty(t)) throw PreconditionError("not_empty", "cover_empty_in needs an empty tetrahedron");
    Cover out("tetrahedron " + t.to_string());
    detail::ParallelepipedCoverer(container, out).process(t, 0, "T");
    return out;
}

inline Cover cover_parallelepiped(const Parallelepiped& p) {
    const Body3 body = p.body();
    Cover out("parallelepiped");
    detail::ParallelepipedCoverer coverer(body, out);
    const auto pieces = empty_triangulation(body);
    for (std::size_t i = 0; i < pieces.size(); ++i) coverer.process(pieces[i], 0, "piece" + std::to_string(i));
    return out;
}

}  // namespace unicover

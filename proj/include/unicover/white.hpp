#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unicover/error.hpp"
#include "unicover/exact_geom.hpp"
#include "unicover/simplex.hpp"

namespace unicover {

struct IntMatrix3 {
    std::array<std::array<Int, 3>, 3> m{};

    static IntMatrix3 identity() { return {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }

    static IntMatrix3 from_columns(const IntVec3& c0, const IntVec3& c1, const IntVec3& c2) {
        IntMatrix3 r;
        for (std::size_t i = 0; i < 3; ++i) {
            r.m[i][0] = c0[i];
            r.m[i][1] = c1[i];
            r.m[i][2] = c2[i];
        }
        return r;
    }

    IntVec3 row(std::size_t i) const { return {m[i][0], m[i][1], m[i][2]}; }
    IntVec3 column(std::size_t j) const { return {m[0][j], m[1][j], m[2][j]}; }

    Int det() const { return det3(column(0), column(1), column(2)); }

    IntVec3 operator*(const IntVec3& v) const { return {dot(row(0), v), dot(row(1), v), dot(row(2), v)}; }

    friend IntMatrix3 operator*(const IntMatrix3& a, const IntMatrix3& b) {
        IntMatrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = dot(a.row(i), b.column(j));
        return r;
    }

    IntMatrix3 adjugate() const {
        IntMatrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                r.m[i][j] = checked::sub(checked::mul(m[r0][c0], m[r1][c1]), checked::mul(m[r0][c1], m[r1][c0]));
            }
        return r;
    }

    friend bool operator==(const IntMatrix3&, const IntMatrix3&) = default;
};

/// x -> matrix * x + translation, with det(matrix) = +-1.
struct UnimodularAffineMap {
    IntMatrix3 matrix = IntMatrix3::identity();
    IntVec3 translation{};

    UnimodularAffineMap() = default;
    UnimodularAffineMap(IntMatrix3 m, IntVec3 t) : matrix(m), translation(t) {
        const Int d = matrix.det();
        if (d != 1 && d != -1) throw PreconditionError("not_unimodular", "affine map matrix has det " + std::to_string(d));
    }

    IntPoint3 operator()(const IntPoint3& p) const { return matrix * p + translation; }

    // (this o other)(x) = this(other(x))
    UnimodularAffineMap compose(const UnimodularAffineMap& other) const {
        return {matrix * other.matrix, matrix * other.translation + translation};
    }

    UnimodularAffineMap inverse() const {
        IntMatrix3 inv = matrix.adjugate();
        if (matrix.det() == -1)
            for (auto& r : inv.m)
                for (auto& x : r) x = -x;
        return {inv, -(inv * translation)};
    }
};

struct WhiteForm {
    Int a = 1;
    Int b = 1;

    friend bool operator==(const WhiteForm&, const WhiteForm&) = default;
    friend auto operator<=>(const WhiteForm&, const WhiteForm&) = default;
};

inline void validate(const WhiteForm& w) {
    const bool ok = (w.b == 1 && w.a == 1) || (w.b >= 2 && w.a >= 1 && w.a <= w.b - 1 && gcd(w.a, w.b) == 1);
    if (!ok)
        throw PreconditionError("invalid_white_form",
                                "invalid White form (a,b) = (" + std::to_string(w.a) + "," + std::to_string(w.b) + ")");
}

// Labelled vertices p1..p4 = (0,0,0), (1,0,0), (0,0,1), (a,b,1).
inline std::array<IntPoint3, 4> white_vertices(const WhiteForm& w) {
    validate(w);
    return {IntPoint3{0, 0, 0}, IntPoint3{1, 0, 0}, IntPoint3{0, 0, 1}, IntPoint3{w.a, w.b, 1}};
}

inline Simplex3 white_tetrahedron(const WhiteForm& w) { return Simplex3(white_vertices(w)); }
inline Simplex3 white_tetrahedron(Int a, Int b) { return white_tetrahedron(WhiteForm{a, b}); }

inline std::vector<WhiteForm> enumerate_white_forms(Int b_max) {
    if (b_max < 1) throw PreconditionError("invalid_bound", "enumerate_white_forms needs b_max >= 1");
    std::vector<WhiteForm> out{{1, 1}};
    for (Int b = 2; b <= b_max; ++b)
        for (Int a = 1; a < b; ++a)
            if (gcd(a, b) == 1) out.push_back({a, b});
    return out;
}

struct NormalForm {
    WhiteForm form;
    UnimodularAffineMap map;  // map(T) = white_tetrahedron(form) as vertex sets
    // Members of the candidate orbit {+-a^(+-1) mod b} for which no certificate exists.
    std::vector<Int> orbit_anomalies;
};

namespace detail {

// (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::array<Int, 3> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

// Two vectors spanning {x : f(x) = 0} over Z, for primitive f.
inline std::array<IntVec3, 2> kernel_basis(const IntVec3& f) {
    std::array<Int, 3> r{f.x, f.y, f.z};
    IntMatrix3 u = IntMatrix3::identity();
    auto nonzero = [&] { return (r[0] != 0) + (r[1] != 0) + (r[2] != 0); };
    while (nonzero() > 1) {
        std::size_t piv = 3;
        for (std::size_t i = 0; i < 3; ++i)
            if (r[i] != 0 && (piv == 3 || std::abs(r[i]) < std::abs(r[piv]))) piv = i;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == piv || r[j] == 0) continue;
            const Int q = r[j] / r[piv];
            r[j] -= q * r[piv];
            for (std::size_t row = 0; row < 3; ++row) u.m[row][j] -= q * u.m[row][piv];
        }
    }
    std::array<IntVec3, 2> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < 3; ++j)
        if (r[j] == 0) out[k++] = u.column(j);
    return out;
}

inline bool same_vertex_set(std::array<IntPoint3, 4> a, std::array<IntPoint3, 4> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Affine unimodular map with phi(src[i]) = dst[perm[i]] for some permutation, if any.
inline std::optional<UnimodularAffineMap> certify(const std::array<IntPoint3, 4>& src, const std::array<IntPoint3, 4>& dst) {
    const IntMatrix3 target = IntMatrix3::from_columns(dst[1] - dst[0], dst[2] - dst[0], dst[3] - dst[0]);
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    do {
        const IntMatrix3 es = IntMatrix3::from_columns(src[perm[1]] - src[perm[0]], src[perm[2]] - src[perm[0]],
                                                       src[perm[3]] - src[perm[0]]);
        const Int d = es.det();
        if (d == 0) throw PreconditionError("degenerate_simplex", "certify: degenerate tetrahedron");
        IntMatrix3 m = target * es.adjugate();
        bool integral = true;
        for (auto& row : m.m)
            for (auto& x : row) {
                if (x % d != 0) integral = false;
                x /= d;
            }
        if (!integral) continue;
        const Int md = m.det();
        if (md != 1 && md != -1) continue;
        UnimodularAffineMap phi(m, dst[0] - m * src[perm[0]]);
        std::array<IntPoint3, 4> img;
        for (std::size_t i = 0; i < 4; ++i) img[i] = phi(src[i]);
        if (same_vertex_set(img, dst)) return phi;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

inline Int mod_inverse(Int a, Int b) {
    auto [g, x, y] = ext_gcd(a, b);
    (void)y;
    if (g != 1) throw PreconditionError("not_invertible", "no modular inverse");
    return ((x % b) + b) % b;
}

}  // namespace detail

/// Canonical White form of an empty tetrahedron together with a certifying
/// unimodular affine map.
///
/// A width-one direction is searched among the three functionals vanishing
/// on a pair of opposite edges; it yields a first form (a0, b). The result
/// is the smallest member of {a0, b-a0, a0^-1, b-a0^-1} (mod b) for which an
/// explicit certificate can be constructed.
inline NormalForm white_normal_form(const Simplex3& t) {
    if (!is_empty(t)) throw PreconditionError("not_empty", "white_normal_form needs an empty tetrahedron");
    const auto& v = t.vertices();
    const Int b = t.normalized_volume();

    static constexpr std::array<std::array<std::size_t, 4>, 3> pairs{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    std::optional<Int> a0;
    for (const auto& pr : pairs) {
        const IntVec3 c = cross(v[pr[1]] - v[pr[0]], v[pr[3]] - v[pr[2]]);
        IntVec3 f = primitive(c);
        const Int gap = dot(f, v[pr[2]]) - dot(f, v[pr[0]]);
        if (gap != 1 && gap != -1) continue;
        if (gap == -1) f = -f;
        const IntPoint3 A = v[pr[0]], B = v[pr[1]], C = v[pr[2]], D = v[pr[3]];
        const IntVec3 e = B - A, g = C - A;

        // Complete e to a basis (e, h) of ker f; then (e, h, g) is a basis of Z^3.
        const auto kb = detail::kernel_basis(f);
        Int alpha = 0, beta = 0;
        for (std::size_t r0 = 0; r0 < 3; ++r0) {
            const std::size_t r1 = (r0 + 1) % 3;
            const Int m = kb[0][r0] * kb[1][r1] - kb[0][r1] * kb[1][r0];
            if (m == 0) continue;
            alpha = (e[r0] * kb[1][r1] - e[r1] * kb[1][r0]) / m;
            beta = (kb[0][r0] * e[r1] - kb[0][r1] * e[r0]) / m;
            break;
        }
        const auto [gg, x, y] = detail::ext_gcd(alpha, beta);
        if (gg != 1) continue;  // e not primitive; cannot happen for empty T
        const IntVec3 h = (-y) * kb[0] + x * kb[1];
        const IntMatrix3 basis = IntMatrix3::from_columns(e, h, g);
        IntMatrix3 m = basis.adjugate();
        if (basis.det() == -1)
            for (auto& row : m.m)
                for (auto& z : row) z = -z;
        IntVec3 img = m * (D - A);
        if (img.z != 1) continue;
        Int ai = img.x, bi = img.y;
        if (bi < 0) bi = -bi;
        a0 = (bi == 1) ? 1 : ((ai % bi) + bi) % bi;
        break;
    }
    if (!a0)
        throw GuaranteeViolation("NoWidthOneDirection", "no opposite-edge pair gives lattice width one", t.to_string());

    std::set<Int> orbit{*a0};
    if (b >= 2) {
        const Int inv = detail::mod_inverse(*a0, b);
        orbit = {*a0, b - *a0, inv, (b - inv) % b};
    }
    NormalForm out;
    bool found = false;
    for (Int cand : orbit) {
        auto cert = detail::certify(v, white_vertices({cand, b}));
        if (!cert) {
            out.orbit_anomalies.push_back(cand);
            continue;
        }
        if (!found) {
            out.form = {cand, b};
            out.map = *cert;
            found = true;
        }
    }
    if (!found)
        throw GuaranteeViolation("NoCertificate", "no certifying map for the width-one form", t.to_string());
    return out;
}

}  // namespace unicover

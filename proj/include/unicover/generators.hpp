#pragma once

// Instance generators. All randomness comes from std::mt19937_64 with a
// plain modulo reduction, so streams are identical on every platform.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unicover/body.hpp"
#include "unicover/cover_cayley.hpp"
#include "unicover/error.hpp"
#include "unicover/polygon.hpp"
#include "unicover/white.hpp"

namespace unicover {

using Rng = std::mt19937_64;

inline Int uniform_int(Rng& rng, Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(rng() % span);
}

/// The non-IDP octahedron and triangular prism whose only lattice points
/// are their six vertices and the origin.
inline std::vector<IntPoint3> example26(const std::string& which) {
    if (which == "octahedron") return {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}};
    if (which == "prism") return {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    throw PreconditionError("unknown_example", "expected 'octahedron' or 'prism', got '" + which + "'");
}

/// Edge vectors with entries in [-max_coord, max_coord] and nonzero
/// determinant; the base point is drawn from the same range.
inline Parallelepiped random_parallelepiped(Rng& rng, Int max_coord = 5) {
    if (max_coord < 1) throw PreconditionError("bad_max_coord", "max_coord must be positive");
    auto draw = [&] { return IntVec3{uniform_int(rng, -max_coord, max_coord), uniform_int(rng, -max_coord, max_coord),
                                     uniform_int(rng, -max_coord, max_coord)}; };
    const IntPoint3 base = draw();
    std::array<IntVec3, 3> e;
    do {
        for (auto& v : e) v = draw();
    } while (det3(e[0], e[1], e[2]) == 0);
    return Parallelepiped(base, e);
}

/// Random lattice polygon Q with coordinates in [0, 6] and a weak Minkowski
/// summand P built from its edges with nonnegative integer weights.
inline CayleySpec random_weak_summand_pair(Rng& rng) {
    Polygon2 q;
    do {
        const Int n = uniform_int(rng, 3, 7);
        std::vector<IntPoint2> pts;
        for (Int i = 0; i < n; ++i) pts.push_back({uniform_int(rng, 0, 6), uniform_int(rng, 0, 6)});
        q = Polygon2::hull(pts);
    } while (q.dim() != 2);

    const auto edges = q.edges();
    std::vector<Int> weight(edges.size(), 1);
    bool closed = false;
    for (int attempt = 0; attempt < 64 && !closed; ++attempt) {
        IntVec2 sum{};
        for (std::size_t i = 0; i < edges.size(); ++i) {
            weight[i] = uniform_int(rng, 0, 2);
            sum = sum + weight[i] * edges[i];
        }
        closed = sum == IntVec2{};
    }
    if (!closed) {
        const Int w = uniform_int(rng, 0, 2);
        std::fill(weight.begin(), weight.end(), w);
    }
    std::vector<IntPoint2> pv{{uniform_int(rng, 0, 2), uniform_int(rng, 0, 2)}};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) pv.push_back(pv.back() + weight[i] * edges[i]);
    return {Polygon2::hull(pv), q};
}

/// Product of random elementary row operations and a signed permutation,
/// with entries bounded by `max_entry`, plus a translation in [-5, 5]^3.
inline UnimodularAffineMap random_unimodular_map(Rng& rng, Int max_entry = 6) {
    for (;;) {
        IntMatrix3 m = IntMatrix3::identity();
        const Int steps = uniform_int(rng, 1, 6);
        bool ok = true;
        for (Int s = 0; s < steps && ok; ++s) {
            const auto i = static_cast<std::size_t>(uniform_int(rng, 0, 2));
            auto j = static_cast<std::size_t>(uniform_int(rng, 0, 1));
            if (j >= i) ++j;
            const Int c = uniform_int(rng, -2, 2);
            for (std::size_t k = 0; k < 3; ++k) {
                m.m[i][k] += c * m.m[j][k];
                if (m.m[i][k] > max_entry || m.m[i][k] < -max_entry) ok = false;
            }
        }
        if (!ok) continue;
        std::array<std::size_t, 3> perm{0, 1, 2};
        for (std::size_t i = 2; i > 0; --i)
            std::swap(perm[i], perm[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Int>(i)))]);
        IntMatrix3 p{};
        for (std::size_t i = 0; i < 3; ++i) p.m[i][perm[i]] = uniform_int(rng, 0, 1) ? 1 : -1;
        const IntVec3 t{uniform_int(rng, -5, 5), uniform_int(rng, -5, 5), uniform_int(rng, -5, 5)};
        return UnimodularAffineMap(p * m, t);
    }
}

}  // namespace unicover

#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "unicover/body.hpp"
#include "unicover/error.hpp"
#include "unicover/simplex.hpp"

namespace unicover {

/// Cone from the lexicographically smallest vertex over fan-triangulated
/// facets that do not contain it. Uses only vertices of `body`.
inline std::vector<Simplex3> fan_triangulation(const Body3& body) {
    const auto& vs = body.vertices();
    const std::size_t apex = 0;
    std::vector<Simplex3> out;
    for (std::size_t f = 0; f < body.facets().size(); ++f) {
        const auto& fv = body.facets()[f].vertices;
        if (std::find(fv.begin(), fv.end(), apex) != fv.end()) continue;
        const auto cyc = body.facet_cycle(f);
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
            out.emplace_back(std::array<IntPoint3, 4>{vs[apex], vs[cyc[0]], vs[cyc[i]], vs[cyc[i + 1]]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Subdivides a lattice tetrahedron into empty ones by repeatedly coning
/// from the lexicographically smallest non-vertex lattice point over the
/// facets whose planes miss it.
inline std::vector<Simplex3> refine_to_empty(const Simplex3& s) {
    struct Item {
        Simplex3 simplex;
        std::size_t parent_extra;  // non-vertex lattice points of the parent
    };
    std::vector<Item> work{{s, std::numeric_limits<std::size_t>::max()}};
    std::vector<Simplex3> out;
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        std::vector<IntPoint3> extra;
        for (const auto& p : item.simplex.lattice_points())
            if (!item.simplex.has_vertex(p)) extra.push_back(p);
        if (extra.size() >= item.parent_extra)
            throw GuaranteeViolation("RefineStalled", "refinement did not reduce the lattice point count",
                                     item.simplex.to_string());
        if (extra.empty()) {
            out.push_back(item.simplex);
            continue;
        }
        const IntPoint3 z = extra.front();
        const auto lambda = item.simplex.barycentric_numerators(z);
        for (std::size_t i = 0; i < 4; ++i) {
            if (lambda[i] == 0) continue;
            auto v = item.simplex.vertices();
            v[i] = z;
            work.push_back({Simplex3(v), extra.size()});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Simplex3> empty_triangulation(const Body3& body) {
    std::vector<Simplex3> out;
    for (const auto& s : fan_triangulation(body)) {
        auto pieces = refine_to_empty(s);
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace unicover

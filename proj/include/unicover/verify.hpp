#pragma once

// Checking that a set of lattice tetrahedra is a unimodular cover of a body.
//
// Exact mode peels convex cells: starting from the body, each cell is cut by
// the facet planes of the next simplex meeting it; the part inside is
// discarded and the outside parts continue with the remaining simplices.
// A full-dimensional cell that survives every simplex is uncovered.
// Cell vertices are kept in homogeneous integer coordinates.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unicover/body.hpp"
#include "unicover/error.hpp"
#include "unicover/rational.hpp"
#include "unicover/simplex.hpp"

namespace unicover {

struct VerifyMode {
    enum class Kind { Exact, Grid };
    Kind kind = Kind::Exact;
    Int resolution = 4;  // grid only

    static VerifyMode exact() { return {Kind::Exact, 0}; }
    static VerifyMode grid(Int m = 4) { return {Kind::Grid, m}; }
    std::string to_string() const { return kind == Kind::Exact ? "exact" : "grid:" + std::to_string(resolution); }
};

enum class Coverage { Covered, Uncovered, BudgetExceeded };

inline const char* to_string(Coverage c) {
    switch (c) {
        case Coverage::Covered: return "covered";
        case Coverage::Uncovered: return "uncovered";
        case Coverage::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

struct VerifyReport {
    std::size_t n_simplices = 0;
    bool all_unimodular = true;
    std::optional<std::size_t> first_non_unimodular;
    bool all_contained = true;
    std::optional<std::size_t> first_outside;
    Coverage coverage = Coverage::Covered;
    std::optional<RatPoint3> witness;
    VerifyMode mode;
    std::size_t cells_processed = 0;
    std::size_t grid_points_checked = 0;
    // Set when the exact run hit its budget and a grid pass was run instead.
    std::optional<Coverage> fallback_grid;
    // Total normalized volume of discarded cells plus uncovered leaves (exact mode, on request).
    std::optional<boost::multiprecision::cpp_rational> peeled_volume;

    bool ok() const { return all_unimodular && all_contained && coverage == Coverage::Covered; }
};

/// Cell budget for exact mode: UNICOVER_CELL_BUDGET if set, else one million.
inline std::size_t default_cell_budget() {
    if (const char* env = std::getenv("UNICOVER_CELL_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

struct VerifyOptions {
    VerifyMode mode = VerifyMode::exact();
    std::size_t cell_budget = default_cell_budget();
    bool grid_fallback = true;
    bool check_conservation = false;
};

namespace detail {

namespace wide {

inline Wide mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in cell clipping");
    return r;
}

inline Wide add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in cell clipping");
    return r;
}

inline Wide floor_div(Wide a, Wide b) {
    Wide q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace wide

// (x, y, z) / w with w > 0, in lowest terms.
struct HPoint {
    Wide x = 0, y = 0, z = 0, w = 1;

    void reduce() {
        Wide g = wide_gcd(wide_gcd(x, y), wide_gcd(z, w));
        if (g > 1) {
            x /= g;
            y /= g;
            z /= g;
            w /= g;
        }
    }
    Wide coord(std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline HPoint hpoint(const IntPoint3& p) { return {p.x, p.y, p.z, 1}; }

// a.x + b.y + c.z <= d
struct Plane {
    Int a = 0, b = 0, c = 0, d = 0;

    Wide eval(const HPoint& p) const {
        Wide s = wide::mul(a, p.x);
        s = wide::add(s, wide::mul(b, p.y));
        s = wide::add(s, wide::mul(c, p.z));
        return wide::add(s, -wide::mul(d, p.w));
    }
    Int eval(const IntPoint3& p) const {
        return checked::narrow(static_cast<Wide>(a) * p.x + static_cast<Wide>(b) * p.y + static_cast<Wide>(c) * p.z -
                               static_cast<Wide>(d));
    }
    Plane flipped() const { return {-a, -b, -c, -d}; }
    friend bool operator==(const Plane&, const Plane&) = default;
};

inline Plane plane(const Functional3& f, Int bound) { return {f.a, f.b, f.c, bound}; }

inline Plane plane(const Halfspace3& h) {
    if (!h.bound.is_integer()) throw PreconditionError("non_integral_bound", "facet bound is not an integer");
    return plane(h.f, h.bound.num());
}

struct Cell {
    std::vector<HPoint> v;
    std::vector<Plane> planes;
};

struct Box {
    Int lo[3], hi[3];
};

inline Box box_of(const Simplex3& s) {
    Box b{};
    for (std::size_t i = 0; i < 3; ++i) {
        b.lo[i] = b.hi[i] = s[0][i];
        for (std::size_t k = 1; k < 4; ++k) {
            b.lo[i] = std::min(b.lo[i], s[k][i]);
            b.hi[i] = std::max(b.hi[i], s[k][i]);
        }
    }
    return b;
}

// Integer box containing the cell.
inline Box box_of(const Cell& c) {
    Box b{};
    for (std::size_t i = 0; i < 3; ++i) {
        Wide lo = wide::floor_div(c.v[0].coord(i), c.v[0].w), hi = -wide::floor_div(-c.v[0].coord(i), c.v[0].w);
        for (const auto& p : c.v) {
            lo = std::min(lo, wide::floor_div(p.coord(i), p.w));
            hi = std::max(hi, -wide::floor_div(-p.coord(i), p.w));
        }
        b.lo[i] = checked::narrow(lo);
        b.hi[i] = checked::narrow(hi);
    }
    return b;
}

// Interiors cannot meet when the boxes touch at most on a face.
inline bool boxes_separate(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < 3; ++i)
        if (a.hi[i] <= b.lo[i] || b.hi[i] <= a.lo[i]) return true;
    return false;
}

// Drops planes that are not facets (tight at fewer than 3 vertices) and duplicates.
inline void prune(Cell& c) {
    std::vector<Plane> kept;
    for (const auto& h : c.planes) {
        if (std::find(kept.begin(), kept.end(), h) != kept.end()) continue;
        int tight = 0;
        for (const auto& p : c.v)
            if (h.eval(p) == 0 && ++tight >= 3) break;
        if (tight >= 3) kept.push_back(h);
    }
    c.planes = std::move(kept);
}

// Splits a full-dimensional cell by h into the parts h <= 0 and h >= 0.
// A part is empty when it is not full-dimensional.
inline std::pair<std::optional<Cell>, std::optional<Cell>> clip(const Cell& c, const Plane& h) {
    const std::size_t n = c.v.size();
    std::vector<Wide> s(n);
    bool neg = false, pos = false;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = h.eval(c.v[i]);
        neg |= s[i] < 0;
        pos |= s[i] > 0;
    }
    if (!pos) return {c, std::nullopt};
    if (!neg) return {std::nullopt, c};

    Cell in, out;
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i] <= 0) in.v.push_back(c.v[i]);
        if (s[i] >= 0) out.v.push_back(c.v[i]);
    }
    // Each edge crossing h contributes one new vertex to both parts.
    const std::size_t m = c.planes.size();
    std::vector<char> zero(m * n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) zero[k * n + i] = c.planes[k].eval(c.v[i]) == 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i] >= 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (s[j] <= 0) continue;
            int shared = 0;
            for (std::size_t k = 0; k < m && shared < 2; ++k) shared += zero[k * n + i] && zero[k * n + j];
            if (shared < 2) continue;
            const HPoint& A = c.v[i];
            const HPoint& B = c.v[j];
            const Wide sa = s[i], sb = s[j];
            HPoint x{wide::add(wide::mul(sb, A.x), -wide::mul(sa, B.x)),
                     wide::add(wide::mul(sb, A.y), -wide::mul(sa, B.y)),
                     wide::add(wide::mul(sb, A.z), -wide::mul(sa, B.z)),
                     wide::add(wide::mul(sb, A.w), -wide::mul(sa, B.w))};
            x.reduce();
            in.v.push_back(x);
            out.v.push_back(x);
        }
    }
    in.planes = c.planes;
    in.planes.push_back(h);
    out.planes = c.planes;
    out.planes.push_back(h.flipped());
    prune(in);
    prune(out);
    return {std::move(in), std::move(out)};
}

inline RatPoint3 average(const std::vector<HPoint>& pts) {
    Wide l = 1;
    for (const auto& p : pts) l = wide::mul(l / wide_gcd(l, p.w), p.w);
    Wide sx = 0, sy = 0, sz = 0;
    for (const auto& p : pts) {
        const Wide f = l / p.w;
        sx = wide::add(sx, wide::mul(f, p.x));
        sy = wide::add(sy, wide::mul(f, p.y));
        sz = wide::add(sz, wide::mul(f, p.z));
    }
    const Wide d = wide::mul(l, static_cast<Wide>(pts.size()));
    return {Rational::make(sx, d), Rational::make(sy, d), Rational::make(sz, d)};
}

inline RatPoint3 to_rat(const HPoint& p) {
    return {Rational::make(p.x, p.w), Rational::make(p.y, p.w), Rational::make(p.z, p.w)};
}

using BigRational = boost::multiprecision::cpp_rational;

inline std::array<BigRational, 3> big(const HPoint& p) {
    auto c = [&](Wide v) {
        return BigRational(boost::multiprecision::cpp_int(v), boost::multiprecision::cpp_int(p.w));
    };
    return {c(p.x), c(p.y), c(p.z)};
}

inline BigRational big_det3(const std::array<BigRational, 3>& u, const std::array<BigRational, 3>& v,
                            const std::array<BigRational, 3>& w) {
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
}

// Normalized volume of a cell: every facet is fanned from one of its
// extreme vertices and coned from the first vertex of the cell.
inline BigRational cell_volume(const Cell& c) {
    using P = std::array<BigRational, 3>;
    auto sub = [](const P& a, const P& b) { return P{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
    const P apex = big(c.v[0]);
    BigRational total = 0;
    for (const auto& h : c.planes) {
        std::vector<P> face;
        for (const auto& p : c.v)
            if (h.eval(p) == 0) face.push_back(big(p));
        if (face.size() < 3) continue;
        const P n{BigRational(h.a), BigRational(h.b), BigRational(h.c)};
        // Order by angle around face[0] after moving it to an extreme position.
        std::iter_swap(face.begin(), std::min_element(face.begin(), face.end()));
        const P o = face[0];
        std::sort(face.begin() + 1, face.end(), [&](const P& a, const P& b) {
            return big_det3(sub(a, o), sub(b, o), n) > 0;
        });
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            const BigRational d = big_det3(sub(face[0], apex), sub(face[i], apex), sub(face[i + 1], apex));
            total += d < 0 ? BigRational(-d) : d;
        }
    }
    return total;
}

}  // namespace detail

namespace detail {

inline void check_pieces(const Body3& target, const std::vector<Simplex3>& cover, VerifyReport& r) {
    r.n_simplices = cover.size();
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (r.all_unimodular && !is_unimodular(cover[i])) {
            r.all_unimodular = false;
            r.first_non_unimodular = i;
        }
        if (r.all_contained)
            for (const auto& v : cover[i].vertices())
                if (!target.contains(v)) {
                    r.all_contained = false;
                    r.first_outside = i;
                    break;
                }
    }
}

inline void confirm_witness(const Body3& target, const std::vector<Simplex3>& cover, const RatPoint3& w) {
    if (!target.contains(w))
        throw GuaranteeViolation("BadWitness", "uncovered witness lies outside the target", to_string(w));
    for (const auto& s : cover)
        if (s.contains(w))
            throw GuaranteeViolation("BadWitness", "uncovered witness lies in " + s.to_string(), to_string(w));
}

inline Coverage grid_coverage(const Body3& target, const std::vector<Simplex3>& cover, Int m, VerifyReport& r) {
    if (m < 1) throw PreconditionError("bad_resolution", "grid resolution must be positive");
    std::vector<Plane> body;
    for (const auto& f : target.facets()) body.push_back({f.normal.a, f.normal.b, f.normal.c, checked::mul(f.bound, m)});
    struct Scaled {
        std::array<Plane, 4> h;
        Box box;
    };
    std::vector<Scaled> simplices;
    for (const auto& s : cover) {
        Scaled sc;
        const auto hs = s.halfspaces();
        for (std::size_t i = 0; i < 4; ++i) {
            sc.h[i] = plane(hs[i]);
            sc.h[i].d = checked::mul(sc.h[i].d, m);
        }
        sc.box = box_of(s);
        for (std::size_t i = 0; i < 3; ++i) {
            sc.box.lo[i] = checked::mul(sc.box.lo[i], m);
            sc.box.hi[i] = checked::mul(sc.box.hi[i], m);
        }
        simplices.push_back(sc);
    }
    Int lo[3], hi[3];
    for (std::size_t i = 0; i < 3; ++i) {
        lo[i] = hi[i] = target.vertices()[0][i];
        for (const auto& v : target.vertices()) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
        lo[i] = checked::mul(lo[i], m);
        hi[i] = checked::mul(hi[i], m);
    }
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z) {
                const IntPoint3 p{x, y, z};
                bool inside = true;
                for (const auto& h : body)
                    if (h.eval(p) > 0) {
                        inside = false;
                        break;
                    }
                if (!inside) continue;
                ++r.grid_points_checked;
                bool hit = false;
                for (const auto& s : simplices) {
                    if (x < s.box.lo[0] || x > s.box.hi[0] || y < s.box.lo[1] || y > s.box.hi[1] || z < s.box.lo[2] ||
                        z > s.box.hi[2])
                        continue;
                    if (s.h[0].eval(p) <= 0 && s.h[1].eval(p) <= 0 && s.h[2].eval(p) <= 0 && s.h[3].eval(p) <= 0) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    r.witness = RatPoint3{Rational(x, m), Rational(y, m), Rational(z, m)};
                    return Coverage::Uncovered;
                }
            }
    return Coverage::Covered;
}

inline Coverage exact_coverage(const Body3& target, const std::vector<Simplex3>& cover, const VerifyOptions& opts,
                               VerifyReport& r) {
    struct Prepared {
        std::array<Plane, 4> h;
        std::array<IntPoint3, 4> v;
        Box box;
    };
    std::vector<Prepared> simplices;
    for (const auto& s : cover) {
        Prepared p;
        const auto hs = s.halfspaces();
        for (std::size_t i = 0; i < 4; ++i) p.h[i] = plane(hs[i]);
        p.v = s.vertices();
        p.box = box_of(s);
        simplices.push_back(p);
    }

    Cell root;
    for (const auto& v : target.vertices()) root.v.push_back(hpoint(v));
    for (const auto& f : target.facets()) root.planes.push_back(plane(f.normal, f.bound));

    std::optional<BigRational> volume;
    if (opts.check_conservation) volume = BigRational(0);

    struct Item {
        Cell cell;
        std::size_t next;
    };
    std::vector<Item> work;
    work.push_back({std::move(root), 0});
    while (!work.empty()) {
        Item item = std::move(work.back());
        work.pop_back();
        if (++r.cells_processed > opts.cell_budget) return Coverage::BudgetExceeded;

        const Box cb = box_of(item.cell);
        std::size_t k = item.next;
        for (; k < simplices.size(); ++k) {
            const Prepared& s = simplices[k];
            if (boxes_separate(cb, s.box)) continue;
            bool apart = false;
            for (const auto& h : s.h) {
                bool all_out = true;
                for (const auto& p : item.cell.v)
                    if (h.eval(p) < 0) {
                        all_out = false;
                        break;
                    }
                if (all_out) {
                    apart = true;
                    break;
                }
            }
            if (apart) continue;
            for (const auto& h : item.cell.planes) {
                bool all_out = true;
                for (const auto& v : s.v)
                    if (h.eval(v) < 0) {
                        all_out = false;
                        break;
                    }
                if (all_out) {
                    apart = true;
                    break;
                }
            }
            if (!apart) break;
        }
        if (k == simplices.size()) {
            r.witness = average(item.cell.v);
            if (volume) *volume += cell_volume(item.cell);
            if (volume) r.peeled_volume = volume;
            return Coverage::Uncovered;
        }

        std::optional<Cell> rest = std::move(item.cell);
        for (const auto& h : simplices[k].h) {
            auto [in, out] = clip(*rest, h);
            if (out) work.push_back({std::move(*out), k + 1});
            rest = std::move(in);
            if (!rest) break;
        }
        if (rest && volume) *volume += cell_volume(*rest);
    }
    if (volume) {
        r.peeled_volume = volume;
        if (*volume != BigRational(target.normalized_volume()))
            throw GuaranteeViolation("VolumeNotConserved", "peeled volume differs from the target volume",
                                     volume->str() + " vs " + std::to_string(target.normalized_volume()));
    }
    return Coverage::Covered;
}

}  // namespace detail

/// Checks unimodularity, containment and coverage of `target` by `cover`.
/// Exact mode decides coverage; grid mode only samples (1/M)Z^3.
inline VerifyReport verify_cover(const Body3& target, const std::vector<Simplex3>& cover,
                                 const VerifyOptions& opts = {}) {
    VerifyReport r;
    r.mode = opts.mode;
    detail::check_pieces(target, cover, r);
    if (opts.mode.kind == VerifyMode::Kind::Grid) {
        r.coverage = detail::grid_coverage(target, cover, opts.mode.resolution, r);
    } else {
        r.coverage = detail::exact_coverage(target, cover, opts, r);
        if (r.coverage == Coverage::BudgetExceeded && opts.grid_fallback)
            r.fallback_grid = detail::grid_coverage(target, cover, 4, r);
    }
    if (r.coverage == Coverage::Uncovered) detail::confirm_witness(target, cover, *r.witness);
    return r;
}

}  // namespace unicover

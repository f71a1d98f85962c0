#pragma once

// Integer decomposition property, checked by brute force: the lattice
// points of nP are compared with all n-fold sums of lattice points of P.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "unicover/body.hpp"
#include "unicover/error.hpp"
#include "unicover/polygon.hpp"

namespace unicover {

struct IdpReport {
    Int checked_up_to = 0;
    bool pass = true;
    std::optional<Int> failing_n;
    // Lexicographically largest point of nP not in the n-fold sumset.
    std::optional<IntPoint3> witness;
    // All such points at the failing n, sorted.
    std::vector<IntPoint3> witnesses;
    std::vector<std::size_t> dilation_sizes;  // |nP ∩ Z^3| for n = 1..checked_up_to
};

inline constexpr std::size_t kIdpPointLimit = 20'000'000;

namespace detail {

template <class Point>
using PointSet = std::unordered_set<Point, PointHash>;

template <class Point>
PointSet<Point> sumset(const PointSet<Point>& a, const std::vector<Point>& b) {
    if (a.size() * b.size() > kIdpPointLimit) throw ResourceLimit("sumset exceeds the point limit");
    PointSet<Point> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.insert(x + y);
    return out;
}

}  // namespace detail

inline IdpReport idp_check(const Body3& body, Int n_max = 3) {
    if (n_max < 2) throw PreconditionError("bad_n_max", "idp_check needs n_max >= 2");
    IdpReport r;
    const std::vector<IntPoint3> base = body.lattice_points();
    r.dilation_sizes.push_back(base.size());
    detail::PointSet<IntPoint3> sums(base.begin(), base.end());
    for (Int n = 2; n <= n_max; ++n) {
        sums = detail::sumset(sums, base);
        const auto target = dilate(body, n).lattice_points();
        r.dilation_sizes.push_back(target.size());
        r.checked_up_to = n;
        const detail::PointSet<IntPoint3> target_set(target.begin(), target.end());
        for (const auto& p : sums)
            if (!target_set.contains(p))
                throw GuaranteeViolation("SumsetEscapes", "a sum of lattice points left the dilation", to_string(p));
        for (const auto& p : target)
            if (!sums.contains(p)) r.witnesses.push_back(p);
        if (!r.witnesses.empty()) {
            std::sort(r.witnesses.begin(), r.witnesses.end());
            r.pass = false;
            r.failing_n = n;
            r.witness = r.witnesses.back();
            return r;
        }
    }
    return r;
}

template <class Point>
struct PairIdpReport {
    bool pass = true;
    std::optional<Point> witness;  // lexicographically largest missing point
    std::size_t sum_points = 0;    // |(P+Q) ∩ Z^d|
    std::size_t sumset_size = 0;   // |P ∩ Z^d + Q ∩ Z^d|
};

namespace detail {

template <class Point>
PairIdpReport<Point> compare_pair(const std::vector<Point>& lp, const std::vector<Point>& lq,
                                  const std::vector<Point>& lsum) {
    PairIdpReport<Point> r;
    const PointSet<Point> a(lp.begin(), lp.end());
    const auto s = sumset(a, lq);
    r.sum_points = lsum.size();
    r.sumset_size = s.size();
    for (auto it = lsum.rbegin(); it != lsum.rend(); ++it)
        if (!s.contains(*it)) {
            r.pass = false;
            r.witness = *it;
            break;
        }
    return r;
}

}  // namespace detail

/// Pair IDP for lattice polytopes of any dimension given by generating
/// points; only P + Q has to be full-dimensional.
inline PairIdpReport<IntPoint3> pair_idp_check(std::span<const IntPoint3> p, std::span<const IntPoint3> q) {
    if (p.empty() || q.empty()) throw PreconditionError("empty_polytope", "pair_idp_check needs nonempty inputs");
    std::vector<IntPoint3> sums;
    for (const auto& x : p)
        for (const auto& y : q) sums.push_back(x + y);
    const Body3 sum = Body3::hull(sums);
    auto lsum = sum.lattice_points();
    std::sort(lsum.begin(), lsum.end());
    return detail::compare_pair(hull_lattice_points(p), hull_lattice_points(q), lsum);
}

inline PairIdpReport<IntPoint3> pair_idp_check(const Body3& p, const Body3& q) {
    return pair_idp_check(p.vertices(), q.vertices());
}

inline PairIdpReport<IntPoint2> pair_idp_check(const Polygon2& p, const Polygon2& q) {
    std::vector<IntPoint2> sums;
    for (const auto& x : p.vertices())
        for (const auto& y : q.vertices()) sums.push_back(x + y);
    const Polygon2 sum = Polygon2::hull(sums);
    if (sum.dim() != 2) throw PreconditionError("not_full_dimensional", "P + Q must be two-dimensional");
    return detail::compare_pair(lattice_points(p), lattice_points(q), lattice_points(sum));
}

}  // namespace unicover

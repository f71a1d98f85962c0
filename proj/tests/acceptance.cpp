// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "unicover/unicover.hpp"

using namespace unicover;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Verified {
    std::string name;
    Body3 target;
    std::vector<IntPoint3> target_vertices;
    std::vector<Simplex3> cover;
};

// Covers that passed exact verification, reused by later criteria.
std::vector<Verified> g_verified;

std::vector<IntPoint3> as_vector(const std::array<IntPoint3, 4>& v) { return {v.begin(), v.end()}; }

bool oracle_covered(const RatPoint3& p, const std::vector<Simplex3>& cover) {
    for (const auto& s : cover)
        if (oracle::in_tetra(p, s.vertices())) return true;
    return false;
}

using Inside = std::function<bool(const IntPoint3&)>;

// Checks a cover with the exact verifier and with independent predicates.
// `inside` is an independent membership test for the target.
void check_cover(const std::string& name, const Body3& target, const std::vector<Simplex3>& cover, Outcome& o,
                 Inside inside = {}) {
    if (!inside) inside = [&](const IntPoint3& p) { return oracle::in_hull(p, target.vertices()); };
    const VerifyReport r = verify_cover(target, cover);
    if (r.coverage == Coverage::BudgetExceeded) return o.fail(name + ": cell budget exceeded");
    if (!r.ok()) return o.fail(name + ": verification reported " + to_string(r.coverage));
    for (const auto& s : cover) {
        if (oracle::abs_det(s.vertices()) != 1) return o.fail(name + ": non-unimodular " + s.to_string());
        for (const auto& v : s.vertices())
            if (!inside(v)) return o.fail(name + ": vertex outside " + to_string(v));
    }
    g_verified.push_back({name, target, target.vertices(), cover});
}

Outcome c1_corner_witnesses() {
    Outcome o;
    int forms = 0;
    for (Int b = 2; b <= 25; ++b)
        for (Int a = 1; a < b; ++a) {
            if (gcd(a, b) != 1) continue;
            ++forms;
            const auto c = circumscribe(white_vertices({a, b}));
            for (std::size_t i = 0; i < 4; ++i) {
                std::array<oracle::P3, 4> corner;
                for (std::size_t j = 0; j < 4; ++j) corner[j] = j == i ? oracle::p3(c.q[i]) : oracle::p3(c.p[j]);
                // Exhaustive scan of the bounding box.
                Int lo[3], hi[3];
                for (std::size_t k = 0; k < 3; ++k) {
                    lo[k] = std::min(c.q[i][k].floor(), Int{0});
                    hi[k] = std::max(c.q[i][k].ceil(), Int{0});
                    for (const auto& p : c.p) {
                        lo[k] = std::min(lo[k], p[k]);
                        hi[k] = std::max(hi[k], p[k]);
                    }
                }
                bool found = false;
                for (Int x = lo[0]; x <= hi[0] && !found; ++x)
                    for (Int y = lo[1]; y <= hi[1] && !found; ++y)
                        for (Int z = lo[2]; z <= hi[2] && !found; ++z) {
                            const IntPoint3 u{x, y, z};
                            if (std::find(c.p.begin(), c.p.end(), u) != c.p.end()) continue;
                            found = oracle::in_tetra(oracle::p3(u), corner);
                        }
                if (!found) o.fail("T(" + std::to_string(a) + "," + std::to_string(b) + ") corner " +
                                   std::to_string(i + 1) + " has no extra lattice point");
                const IntPoint3 w = corner_witness(c, i);
                if (!oracle::in_tetra(oracle::p3(w), corner)) o.fail("library witness outside its corner");
                if (i == 2 && !oracle::in_tetra(oracle::p3(IntPoint3{1, 1, 0}), corner))
                    o.fail("(1,1,0) not in conv(p1,p2,p4,q3) for b=" + std::to_string(b));
                if (i == 3 && !oracle::in_tetra(oracle::p3(IntPoint3{0, -1, 0}), corner))
                    o.fail("(0,-1,0) not in conv(p1,p2,p3,q4) for b=" + std::to_string(b));
            }
        }
    if (o.pass) o.detail = std::to_string(forms) + " forms, 4 corners each";
    return o;
}

Outcome c2_parallelepipeds() {
    Outcome o;
    Rng rng(20240601);
    std::size_t simplices = 0;
    for (int i = 0; i < 200; ++i) {
        const Parallelepiped p = random_parallelepiped(rng, 5);
        const Cover c = cover_parallelepiped(p);
        simplices += c.size();
        check_cover("parallelepiped #" + std::to_string(i), p.body(), c.simplices(), o, [&](const IntPoint3& v) {
            return oracle::in_parallelepiped(oracle::p3(v), p.base(), p.edges());
        });
    }
    if (o.pass) o.detail = "200 instances, " + std::to_string(simplices) + " simplices";
    return o;
}

Outcome c3_weak_summands() {
    Outcome o;
    int strip_failures = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const CayleySpec spec = random_weak_summand_pair(rng);
        if (!normal_fan_refines(spec.Q, spec.P)) {
            o.fail("seed " + std::to_string(seed) + ": generator postcondition violated");
            continue;
        }
        try {
            const Cover c = cover_cayley(spec);
            check_cover("cayley seed " + std::to_string(seed), cayley_embed(spec), c.simplices(), o);
        } catch (const NoStripWitness& e) {
            ++strip_failures;
            o.fail(std::string("seed ") + std::to_string(seed) + ": " + e.what());
        } catch (const GuaranteeViolation& e) {
            o.fail(std::string("seed ") + std::to_string(seed) + ": " + e.what());
        }
    }
    if (o.pass) o.detail = "100 pairs, NoStripWitness count " + std::to_string(strip_failures);
    return o;
}

Outcome c4_dilations() {
    Outcome o;
    int count = 0;
    auto slice_identity = [&](const Polygon2& q1, const Polygon2& q2, Int k, const std::string& name) {
        const Slice s = slice_z(prismatoid_body({dilate(q1, k), dilate(q2, k), k}), 1);
        std::vector<IntPoint2> lower;
        for (const auto& v : q1.vertices()) lower.push_back((k - 1) * v);
        std::vector<IntPoint2> got = s.lattice_polygon().vertices();
        std::sort(got.begin(), got.end());
        if (got != oracle::minkowski_vertices(lower, q2.vertices())) o.fail(name + ": slice at height 1 differs");
    };
    for (const auto& w : enumerate_white_forms(10)) {
        const auto v = white_vertices(w);
        const Body3 body = Body3::hull(as_vector(v));
        const std::string name = "2*T(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
        const Cover c = cover_width1_dilation(body, 2);
        check_cover(name, dilate(body, 2), c.simplices(), o);
        const auto [q1, q2] = cayley_bases(body);
        slice_identity(q1, q2, 2, name);
        ++count;
    }
    const Polygon2 pt = Polygon2::hull({{0, 0}});
    for (const auto& tri : {Polygon2::hull({{0, 0}, {1, 0}, {0, 1}}), Polygon2::hull({{0, 0}, {2, 0}, {0, 3}}),
                            Polygon2::hull({{-1, 0}, {2, 1}, {0, 3}})}) {
        std::vector<IntPoint3> pts{{0, 0, 0}};
        for (const auto& v : tri.vertices()) pts.push_back({v.x, v.y, 1});
        const Body3 body = Body3::hull(pts);
        const std::string name = "3*Cay(point, triangle " + std::to_string(count) + ")";
        const Cover c = cover_width1_dilation(body, 3);
        check_cover(name, dilate(body, 3), c.simplices(), o);
        slice_identity(pt, tri, 3, name);
        ++count;
    }
    if (o.pass) o.detail = std::to_string(count) + " dilations";
    return o;
}

Outcome c5_example() {
    Outcome o;
    for (const char* which : {"octahedron", "prism"}) {
        const auto v = example26(which);
        const Body3 body = Body3::hull(v);
        const auto census = oracle::lattice_points(v);
        std::set<IntPoint3> expect(v.begin(), v.end());
        expect.insert({0, 0, 0});
        if (census.size() != 7 || std::set<IntPoint3>(census.begin(), census.end()) != expect ||
            body.lattice_points() != census)
            o.fail(std::string(which) + ": census is not the six vertices and the origin");
        const IdpReport r = idp_check(body, 2);
        if (r.pass || r.failing_n != 2 || r.witness != IntPoint3{1, 1, 1})
            o.fail(std::string(which) + ": expected failure at n=2 with witness (1,1,1)");
        // (1,1,1) is in 2P but is no sum of two lattice points of P.
        const RatPoint3 half{Rational(1, 2), Rational(1, 2), Rational(1, 2)};
        if (!oracle::in_hull(half, v)) o.fail(std::string(which) + ": (1,1,1) not in 2P");
        bool decomposes = false;
        for (const auto& a : census)
            for (const auto& b : census) decomposes = decomposes || a + b == IntPoint3{1, 1, 1};
        if (decomposes) o.fail(std::string(which) + ": (1,1,1) decomposes");
    }
    if (o.pass) o.detail = "octahedron and prism";
    return o;
}

Outcome c6_idp_of_targets() {
    Outcome o;
    std::size_t points = 0;
    for (const auto& v : g_verified) {
        const IdpReport r = idp_check(v.target, 3);
        if (!r.pass) o.fail(v.name + ": not IDP, witness " + to_string(*r.witness));
        if (r.checked_up_to != 3) o.fail(v.name + ": stopped early");
        points += r.dilation_sizes.back();
    }
    if (o.pass)
        o.detail = std::to_string(g_verified.size()) + " targets up to n=3, " + std::to_string(points) +
                   " lattice points in the third dilations";
    return o;
}

Int orbit_min(Int a, Int b) {
    if (b == 1) return 1;
    Int inv = 1;
    while ((a * inv) % b != 1) ++inv;
    return std::min({a, b - a, inv, b - inv});
}

Outcome c7_white_round_trip() {
    Outcome o;
    Rng rng(777);
    int checked = 0;
    for (const auto& w : enumerate_white_forms(15)) {
        const auto src = white_vertices(w);
        const WhiteForm canon{orbit_min(w.a, w.b), w.b};
        const NormalForm self = white_normal_form(Simplex3(src));
        for (int k = 0; k < 50; ++k) {
            const auto phi = random_unimodular_map(rng);
            std::array<IntPoint3, 4> img;
            for (std::size_t i = 0; i < 4; ++i) img[i] = phi(src[i]);
            const NormalForm nf = white_normal_form(Simplex3(img));
            if (nf.form != canon || nf.form != self.form)
                o.fail("T(" + std::to_string(w.a) + "," + std::to_string(w.b) + ") -> (" + std::to_string(nf.form.a) +
                       "," + std::to_string(nf.form.b) + ")");
            std::array<IntPoint3, 4> mapped, target = white_vertices(nf.form);
            for (std::size_t i = 0; i < 4; ++i) mapped[i] = nf.map(img[i]);
            std::sort(mapped.begin(), mapped.end());
            std::sort(target.begin(), target.end());
            const Int det = nf.map.matrix.det();
            if (mapped != target || (det != 1 && det != -1)) o.fail("certificate does not map the vertex set");
            ++checked;
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " transformed tetrahedra";
    return o;
}

Outcome c8_tampering() {
    Outcome o;
    int tampered = 0;
    for (const auto& v : g_verified) {
        if (tampered == 50) break;
        if (v.cover.size() < 2) continue;
        const VerifyReport clean = verify_cover(v.target, v.cover);
        if (clean.coverage != Coverage::Covered) o.fail(v.name + ": untampered cover not covered");
        // Delete the first simplex whose centroid no other simplex contains.
        std::optional<std::size_t> drop;
        for (std::size_t i = 0; i < v.cover.size() && !drop; ++i) {
            const RatPoint3 c = oracle::centroid(v.cover[i].vertices());
            bool elsewhere = false;
            for (std::size_t j = 0; j < v.cover.size() && !elsewhere; ++j)
                elsewhere = j != i && oracle::in_tetra(c, v.cover[j].vertices());
            if (!elsewhere) drop = i;
        }
        if (!drop) continue;
        auto cover = v.cover;
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(*drop));
        const VerifyReport r = verify_cover(v.target, cover);
        ++tampered;
        if (r.coverage != Coverage::Uncovered || !r.witness) {
            o.fail(v.name + ": deletion not detected");
            continue;
        }
        if (!oracle::in_hull(*r.witness, v.target_vertices)) o.fail(v.name + ": witness outside the target");
        if (oracle_covered(*r.witness, cover)) o.fail(v.name + ": witness lies in a remaining simplex");
    }
    if (tampered < 50) o.fail("only " + std::to_string(tampered) + " tampered covers");
    if (o.pass) o.detail = "50 tampered covers detected, witnesses re-checked";
    return o;
}

Outcome c9_splits() {
    Outcome o;
    std::size_t splits = 0;
    CayleyOptions opts;
    opts.on_split = [&](const SplitRecord& r) {
        if (splits >= 500) return;
        ++splits;
        const Int l = oracle::abs_det(r.pieces[0].vertices()), rr = oracle::abs_det(r.pieces[1].vertices());
        if (l + rr != oracle::abs_det(r.tetrahedron.vertices()))
            o.fail("volume identity fails at " + r.tetrahedron.to_string());
        if (l < 1 || rr < 1) o.fail("empty part at " + r.tetrahedron.to_string());
    };
    for (std::uint64_t seed = 0; splits < 500 && seed < 5000; ++seed) {
        Rng rng(seed);
        cover_cayley(random_weak_summand_pair(rng), opts);
    }
    if (splits < 500) o.fail("only " + std::to_string(splits) + " splits observed");
    if (o.pass) o.detail = "500 splits";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"C1 corner witnesses of White tetrahedra", c1_corner_witnesses},
        {"C2 covers of 200 random parallelepipeds", c2_parallelepipeds},
        {"C3 covers of 100 weak-summand Cayley sums", c3_weak_summands},
        {"C4 covers of dilated width-one polytopes", c4_dilations},
        {"C5 non-IDP octahedron and prism", c5_example},
        {"C6 covered targets are IDP", c6_idp_of_targets},
        {"C7 White normal form round trip", c7_white_round_trip},
        {"C8 verifier detects deleted simplices", c8_tampering},
        {"C9 (2,2) split volume identity", c9_splits},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

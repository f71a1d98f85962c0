#include <gtest/gtest.h>

#include "support.hpp"
#include "unicover/generators.hpp"
#include "unicover/triangulate.hpp"

using namespace unicover;

namespace {

Int total_volume(const std::vector<Simplex3>& pieces) {
    Int v = 0;
    for (const auto& s : pieces) v += s.normalized_volume();
    return v;
}

}  // namespace

TEST(Triangulate, CubeFanHasSixPieces) {
    std::vector<IntPoint3> v;
    for (Int x : {0, 1})
        for (Int y : {0, 1})
            for (Int z : {0, 1}) v.push_back({x, y, z});
    const auto fan = fan_triangulation(Body3::hull(v));
    EXPECT_EQ(fan.size(), 6u);
    EXPECT_EQ(total_volume(fan), 6);
    for (const auto& s : fan) EXPECT_TRUE(s.has_vertex({0, 0, 0}));
}

TEST(Triangulate, FanUsesOnlyVerticesAndPreservesVolume) {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const Body3 body = random_parallelepiped(rng, 3).body();
        const auto fan = fan_triangulation(body);
        EXPECT_EQ(total_volume(fan), body.normalized_volume());
        for (const auto& s : fan)
            for (const auto& p : s.vertices())
                EXPECT_NE(std::find(body.vertices().begin(), body.vertices().end(), p), body.vertices().end());
    }
}

TEST(Triangulate, RefineToEmptyGivesEmptyPiecesOfEqualTotalVolume) {
    Rng rng(32);
    for (int i = 0; i < 80; ++i) {
        std::array<IntPoint3, 4> v;
        do {
            for (auto& p : v) p = {uniform_int(rng, -3, 3), uniform_int(rng, -3, 3), uniform_int(rng, -3, 3)};
        } while (oracle::abs_det(v) == 0);
        const Simplex3 s(v);
        const auto pieces = refine_to_empty(s);
        EXPECT_EQ(total_volume(pieces), s.normalized_volume());
        for (const auto& t : pieces) {
            EXPECT_EQ(oracle::lattice_points(t.vertices()).size(), 4u) << t.to_string();
            for (const auto& p : t.vertices()) EXPECT_TRUE(oracle::in_tetra(p, v));
        }
    }
}

TEST(Triangulate, EmptySimplexIsLeftAlone) {
    const Simplex3 t({IntPoint3{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {2, 5, 1}});
    const auto pieces = refine_to_empty(t);
    ASSERT_EQ(pieces.size(), 1u);
    EXPECT_EQ(pieces[0], t);
}

TEST(Simplex, LatticePointsMatchOracle) {
    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        std::array<IntPoint3, 4> v;
        do {
            for (auto& p : v) p = {uniform_int(rng, -4, 4), uniform_int(rng, -4, 4), uniform_int(rng, -4, 4)};
        } while (oracle::abs_det(v) == 0);
        const Simplex3 s(v);
        EXPECT_EQ(s.lattice_points(), oracle::lattice_points(v));
        EXPECT_EQ(s.normalized_volume(), oracle::abs_det(v));
    }
}

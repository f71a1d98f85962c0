#include <gtest/gtest.h>

#include <cstdlib>

#include "support.hpp"
#include "unicover/cover_para.hpp"
#include "unicover/generators.hpp"
#include "unicover/triangulate.hpp"
#include "unicover/verify.hpp"

using namespace unicover;

namespace {

Body3 unit_cube() {
    std::vector<IntPoint3> v;
    for (Int x : {0, 1})
        for (Int y : {0, 1})
            for (Int z : {0, 1}) v.push_back({x, y, z});
    return Body3::hull(v);
}

bool covered_by_oracle(const RatPoint3& p, const std::vector<Simplex3>& cover) {
    for (const auto& s : cover)
        if (oracle::in_tetra(p, s.vertices())) return true;
    return false;
}

}  // namespace

TEST(Verify, CubeFanIsCovered) {
    const Body3 cube = unit_cube();
    VerifyOptions opts;
    opts.check_conservation = true;
    const auto r = verify_cover(cube, fan_triangulation(cube), opts);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.n_simplices, 6u);
    ASSERT_TRUE(r.peeled_volume.has_value());
    EXPECT_EQ(*r.peeled_volume, 6);
}

TEST(Verify, EachDeletionFromTheCubeIsDetected) {
    const Body3 cube = unit_cube();
    const auto fan = fan_triangulation(cube);
    for (std::size_t k = 0; k < fan.size(); ++k) {
        auto cover = fan;
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(k));
        const auto r = verify_cover(cube, cover);
        EXPECT_EQ(r.coverage, Coverage::Uncovered);
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_TRUE(oracle::in_tetra(*r.witness, fan[k].vertices()));
        EXPECT_FALSE(covered_by_oracle(*r.witness, cover));
    }
}

TEST(Verify, FlagsNonUnimodularAndOutsidePieces) {
    const Body3 cube = unit_cube();
    auto cover = fan_triangulation(cube);
    cover.push_back(Simplex3({IntPoint3{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}));
    const auto r = verify_cover(cube, cover);
    EXPECT_FALSE(r.all_unimodular);
    EXPECT_EQ(r.first_non_unimodular, 6u);
    EXPECT_FALSE(r.all_contained);
    EXPECT_EQ(r.first_outside, 6u);
    EXPECT_EQ(r.coverage, Coverage::Covered);
    EXPECT_FALSE(r.ok());
}

TEST(Verify, GridModeOnCube) {
    const Body3 cube = unit_cube();
    auto cover = fan_triangulation(cube);
    VerifyOptions opts;
    opts.mode = VerifyMode::grid(4);
    const auto full = verify_cover(cube, cover, opts);
    EXPECT_TRUE(full.ok());
    EXPECT_EQ(full.grid_points_checked, 125u);
    cover.pop_back();
    const auto missing = verify_cover(cube, cover, opts);
    EXPECT_EQ(missing.coverage, Coverage::Uncovered);
    EXPECT_FALSE(covered_by_oracle(*missing.witness, cover));
}

TEST(Verify, GridUncoveredImpliesExactUncovered) {
    Rng rng(71);
    int uncovered = 0;
    for (int i = 0; i < 40; ++i) {
        const Parallelepiped p = random_parallelepiped(rng, 2);
        auto cover = cover_parallelepiped(p).simplices();
        const auto drop = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<Int>(cover.size()) - 1));
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(drop));
        VerifyOptions grid;
        grid.mode = VerifyMode::grid(6);
        const auto g = verify_cover(p.body(), cover, grid);
        const auto e = verify_cover(p.body(), cover);
        if (g.coverage == Coverage::Uncovered) {
            ++uncovered;
            EXPECT_EQ(e.coverage, Coverage::Uncovered) << "instance " << i;
        }
        if (e.coverage == Coverage::Uncovered) {
            EXPECT_FALSE(covered_by_oracle(*e.witness, cover));
        }
    }
    EXPECT_GT(uncovered, 0);
}

TEST(Verify, VolumeIsConservedOnRandomCovers) {
    Rng rng(72);
    for (int i = 0; i < 10; ++i) {
        const Parallelepiped p = random_parallelepiped(rng, 3);
        VerifyOptions opts;
        opts.check_conservation = true;
        const auto r = verify_cover(p.body(), cover_parallelepiped(p).simplices(), opts);
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(*r.peeled_volume, 6 * std::abs(p.det()));
    }
}

TEST(Verify, BudgetFallsBackToGrid) {
    Rng rng(73);
    const Parallelepiped p = random_parallelepiped(rng, 3);
    VerifyOptions opts;
    opts.cell_budget = 2;
    const auto r = verify_cover(p.body(), cover_parallelepiped(p).simplices(), opts);
    EXPECT_EQ(r.coverage, Coverage::BudgetExceeded);
    EXPECT_EQ(r.fallback_grid, Coverage::Covered);
    EXPECT_FALSE(r.ok());
    opts.grid_fallback = false;
    EXPECT_FALSE(verify_cover(p.body(), cover_parallelepiped(p).simplices(), opts).fallback_grid.has_value());
}

TEST(Verify, BudgetFromEnvironment) {
    ::setenv("UNICOVER_CELL_BUDGET", "1234", 1);
    EXPECT_EQ(default_cell_budget(), 1234u);
    ::setenv("UNICOVER_CELL_BUDGET", "junk", 1);
    EXPECT_EQ(default_cell_budget(), 1'000'000u);
    ::unsetenv("UNICOVER_CELL_BUDGET");
    EXPECT_EQ(default_cell_budget(), 1'000'000u);
}

TEST(Verify, EmptyCoverLeavesWholeBodyUncovered) {
    const Body3 cube = unit_cube();
    const auto r = verify_cover(cube, {});
    EXPECT_EQ(r.coverage, Coverage::Uncovered);
    EXPECT_EQ(*r.witness, (RatPoint3{Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
}

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "unicover/generators.hpp"
#include "unicover/white.hpp"

using namespace unicover;

namespace {

// Smallest member of {a, b - a, a^-1, b - a^-1} modulo b, found by search.
Int orbit_min(Int a, Int b) {
    if (b == 1) return 1;
    Int inv = 1;
    while ((a * inv) % b != 1) ++inv;
    return std::min({a, b - a, inv, b - inv});
}

bool same_set(std::array<IntPoint3, 4> x, std::array<IntPoint3, 4> y) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

}  // namespace

TEST(White, EnumerationCount) {
    // 1 + sum of phi(b) for b = 2..10.
    EXPECT_EQ(enumerate_white_forms(10).size(), 32u);
    EXPECT_EQ(enumerate_white_forms(1).size(), 1u);
}

TEST(White, InvalidFormsRejected) {
    EXPECT_THROW(white_tetrahedron(2, 4), PreconditionError);
    EXPECT_THROW(white_tetrahedron(5, 5), PreconditionError);
    EXPECT_THROW(white_tetrahedron(0, 3), PreconditionError);
}

TEST(White, FormsAreEmptyWithVolumeB) {
    for (const auto& w : enumerate_white_forms(9)) {
        const auto v = white_vertices(w);
        EXPECT_EQ(oracle::abs_det(v), w.b);
        EXPECT_EQ(oracle::lattice_points(v).size(), 4u) << w.a << "," << w.b;
    }
}

TEST(White, UnimodularMapsAreInvertible) {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto phi = random_unimodular_map(rng);
        EXPECT_TRUE(phi.matrix.det() == 1 || phi.matrix.det() == -1);
        const auto id = phi.compose(phi.inverse());
        const IntPoint3 p{uniform_int(rng, -9, 9), uniform_int(rng, -9, 9), uniform_int(rng, -9, 9)};
        EXPECT_EQ(id(p), p);
        EXPECT_EQ(phi.inverse()(phi(p)), p);
    }
}

TEST(White, NonUnimodularMatrixRejected) {
    IntMatrix3 m = IntMatrix3::identity();
    m.m[0][0] = 2;
    EXPECT_THROW(UnimodularAffineMap(m, IntVec3{}), PreconditionError);
}

TEST(White, NormalFormOfTransformedTetrahedra) {
    Rng rng(42);
    for (const auto& w : enumerate_white_forms(12)) {
        for (int k = 0; k < 10; ++k) {
            const auto phi = random_unimodular_map(rng);
            std::array<IntPoint3, 4> img;
            const auto src = white_vertices(w);
            for (std::size_t i = 0; i < 4; ++i) img[i] = phi(src[i]);
            const NormalForm nf = white_normal_form(Simplex3(img));
            EXPECT_EQ(nf.form, (WhiteForm{orbit_min(w.a, w.b), w.b}));
            std::array<IntPoint3, 4> mapped;
            for (std::size_t i = 0; i < 4; ++i) mapped[i] = nf.map(img[i]);
            EXPECT_TRUE(same_set(mapped, white_vertices(nf.form)));
            EXPECT_TRUE(nf.orbit_anomalies.empty());
        }
    }
}

TEST(White, NormalFormNeedsEmptyTetrahedron) {
    const Simplex3 big({IntPoint3{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    EXPECT_THROW(white_normal_form(big), PreconditionError);
}

#include <gtest/gtest.h>

#include <nlquad/nl_lattice.hpp>

using namespace nlquad;

TEST(FourfoldLattice, Matrices)
{
    EXPECT_EQ(fourfold_lattice(three_quadrics(), resolve("1;")), (RankTwoLattice{8, 1, 4, LatticeSide::FourfoldMiddle}));
    EXPECT_EQ(fourfold_lattice(three_quadrics(), resolve("3;5,0,0")),
              (RankTwoLattice{8, 4, 4, LatticeSide::FourfoldMiddle}));
    EXPECT_EQ(fourfold_lattice({{3}}, abstract_surface(13, 12, 2, 4)),
              (RankTwoLattice{3, 13, 61, LatticeSide::FourfoldMiddle}));
}

TEST(Discriminant, SignConventions)
{
    EXPECT_EQ(discriminant({8, 1, 4, LatticeSide::FourfoldMiddle}), 31);
    const RankTwoLattice s{9, 7, 2, LatticeSide::SurfacePicard};
    EXPECT_EQ(s.determinant(), -31);
    EXPECT_EQ(discriminant(s), 31);
    EXPECT_EQ(discriminant({8, 0, 1, LatticeSide::FourfoldMiddle}), 8);
    EXPECT_EQ(discriminant({3, 13, 61, LatticeSide::FourfoldMiddle}), 14);
}

TEST(Discriminant, NegativeValuesAreNotClamped)
{
    const RankTwoLattice l{1, 3, 1, LatticeSide::FourfoldMiddle};
    EXPECT_EQ(discriminant(l), -8);
    EXPECT_FALSE(has_positive_discriminant(l));
}

TEST(Mod16, Classes)
{
    EXPECT_EQ(mod16_class(16), (Mod16Class{0, true}));
    EXPECT_EQ(mod16_class(31), (Mod16Class{15, true}));
    EXPECT_EQ(mod16_class(23), (Mod16Class{7, true}));
    EXPECT_EQ(mod16_class(28), (Mod16Class{12, true}));
    EXPECT_FALSE(mod16_class(14).admissible);
    EXPECT_EQ(mod16_class(-1), (Mod16Class{15, true}));
}

TEST(SurfacePicard, Matrices)
{
    const auto a = surface_picard_matrix(abstract_surface(9, 9, 2, 4));
    EXPECT_EQ(a, (RankTwoLattice{9, 7, 2, LatticeSide::SurfacePicard}));
    EXPECT_EQ(discriminant(a), 31);
    const auto b = surface_picard_matrix(abstract_surface(13, 12, 2, 4));
    EXPECT_EQ(b, (RankTwoLattice{13, 9, 2, LatticeSide::SurfacePicard}));
    EXPECT_EQ(discriminant(b), 55);
    const auto plane = surface_picard_matrix(resolve("1;"));
    EXPECT_EQ(plane, (RankTwoLattice{1, -3, 9, LatticeSide::SurfacePicard}));
    EXPECT_EQ(discriminant(plane), 0);
    EXPECT_TRUE(is_degenerate(plane));
}

TEST(Mod16, ResidueFollowsDegree)
{
    // -deg^2 mod 16: deg even gives 0 or 12, deg odd gives 15 or 7
    for (integer deg = 1; deg <= 40; ++deg) {
        const auto s = abstract_surface(deg, deg / 2, 1, 1);
        const integer d = discriminant(fourfold_lattice(three_quadrics(), s));
        EXPECT_EQ(mod16_class(d).residue, ((-(deg * deg)) % 16 + 16) % 16) << deg;
        EXPECT_TRUE(mod16_class(d).admissible);
    }
}

#include <gtest/gtest.h>

#include <algorithm>

#include <nlquad/picard_lattice.hpp>

#include "oracles.hpp"

using namespace nlquad;

namespace {

DivisorClass cls(integer d, std::vector<integer> m) { return {d, std::move(m)}; }

bool contains(const std::vector<DivisorClass>& v, const DivisorClass& c)
{
    return std::find(v.begin(), v.end(), c) != v.end();
}

} // namespace

TEST(Pairing, LineSquaredIsOne) { EXPECT_EQ(pair(line_class(0), line_class(0)), 1); }

TEST(Pairing, HyperplaneAgainstCanonical)
{
    // -15 + 7 + 3 by hand
    const auto h = cls(5, {1, 1, 1, 1, 1, 1, 1, 3});
    EXPECT_EQ(pair(h, canonical(8)), -5);
    EXPECT_EQ(pair(h, canonical(8)), oracle::pairing(5, h.mults, -3, std::vector<integer>(8, -1)));
}

TEST(Pairing, ExceptionalClassesAreOrthogonal)
{
    EXPECT_EQ(pair(exceptional_class(2, 0), exceptional_class(2, 1)), 0);
    EXPECT_EQ(pair(exceptional_class(2, 0), exceptional_class(2, 0)), -1);
}

TEST(Pairing, MismatchedLatticeThrows)
{
    EXPECT_THROW(pair(line_class(2), line_class(3)), MismatchedLattice);
}

TEST(Pairing, OverflowIsReported)
{
    const DivisorClass big{integer{1} << 62, {}};
    EXPECT_THROW(pair(big, big), Overflow);
}

TEST(Canonical, SelfIntersection)
{
    EXPECT_EQ(square(canonical(0)), 9);
    EXPECT_EQ(square(canonical(8)), 1);
    EXPECT_EQ(square(canonical(10)), -1);
    EXPECT_EQ(canonical(0), cls(-3, {}));
}

TEST(RiemannRoch, Values)
{
    EXPECT_EQ(riemann_roch_chi(line_class(0)), 3);
    const auto h = cls(5, {1, 1, 1, 1, 1, 1, 1, 3});
    EXPECT_EQ(riemann_roch_chi(h), 8);
    EXPECT_EQ(riemann_roch_chi(2 * h), 24);
    EXPECT_EQ(36 - riemann_roch_chi(2 * h), 12);
}

TEST(Adjunction, Values)
{
    EXPECT_EQ(adjunction_genus(line_class(0)), 0);
    EXPECT_EQ(adjunction_genus(cls(5, {1, 1, 1, 1, 1, 1, 1, 3})), 3);
    EXPECT_EQ(adjunction_genus(cls(4, {1, 1, 1, 1, 1, 1, 2})), 2);
    EXPECT_EQ(adjunction_genus(cls(3, {})), 1);
}

TEST(Catalogue, SmallCases)
{
    EXPECT_TRUE(neg_curve_catalogue(0).empty());
    const auto two = neg_curve_catalogue(2);
    EXPECT_TRUE(contains(two, cls(1, {1, 1})));
    EXPECT_EQ(two.size(), 3u); // E1, E2, L-E1-E2
    const auto five = neg_curve_catalogue(5, 2);
    EXPECT_TRUE(contains(five, cls(2, {1, 1, 1, 1, 1})));
}

TEST(Catalogue, EveryClassIsMinusOne)
{
    for (std::size_t k = 0; k <= 10; ++k)
        for (const auto& c : neg_curve_catalogue(k)) {
            EXPECT_EQ(square(c), -1) << to_string(c);
            EXPECT_EQ(pair(c, canonical(k)), -1) << to_string(c);
        }
}

TEST(Catalogue, DegreeBoundIsRespected)
{
    for (const auto& c : neg_curve_catalogue(9, 3))
        EXPECT_LE(c.plane_degree, 3);
    EXPECT_GT(neg_curve_catalogue(9, 6).size(), neg_curve_catalogue(9, 3).size());
}

TEST(Catalogue, MatchesBruteForceUpToEightPoints)
{
    // On Bl_k P^2 with k <= 8 the catalogue is every (-1)-class.
    for (std::size_t k = 0; k <= 8; ++k) {
        const auto brute = oracle::brute_minus_one_classes(k, 6);
        const auto cat = neg_curve_catalogue(k, 6);
        ASSERT_EQ(cat.size(), brute.size()) << "k=" << k;
        for (const auto& c : cat)
            EXPECT_TRUE(brute.count({c.plane_degree, c.mults})) << to_string(c);
    }
    EXPECT_EQ(neg_curve_catalogue(7).size(), 56u);
    EXPECT_EQ(neg_curve_catalogue(8).size(), 240u);
}

TEST(Contractions, DelPezzoQuarticHasNone)
{
    const auto n = normalize_contractions(cls(3, {1, 1, 1, 1, 1}));
    EXPECT_TRUE(n.contracted.empty());
    EXPECT_EQ(n.canonical_square(), 4);
}

TEST(Contractions, ConicThroughTwoPointsContractsTheLine)
{
    const auto n = normalize_contractions(cls(2, {1, 1}));
    ASSERT_EQ(n.contracted.size(), 1u);
    EXPECT_EQ(n.contracted[0], cls(1, {1, 1}));
    EXPECT_EQ(n.canonical_square(), 8);
}

TEST(Contractions, PlaneHasNone) { EXPECT_TRUE(normalize_contractions(line_class(0)).contracted.empty()); }

TEST(Contractions, NotNefIsRejected)
{
    // a line through three points meets L - E1 - E2 negatively
    EXPECT_THROW(normalize_contractions(cls(1, {1, 1, 1})), NotNef);
}

TEST(Contractions, CremonaImageOfThePlaneNeedsHighDegreeShapes)
{
    // S(6;4,1,3): with cubics only it looks like a K^2 = 8 surface
    const auto h = cls(6, {1, 1, 1, 1, 2, 3, 3, 3});
    EXPECT_EQ(normalize_contractions(h).canonical_square(), 9);
    EXPECT_EQ(normalize_contractions(h, 3).canonical_square(), 8);
}

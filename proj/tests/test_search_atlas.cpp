#include <gtest/gtest.h>

#include <algorithm>

#include <nlquad/dataset.hpp>
#include <nlquad/search_atlas.hpp>

using namespace nlquad;

namespace {

const Atlas& default_atlas()
{
    static const Atlas a = enumerate(SearchBounds{}, 2);
    return a;
}

const AtlasEntry* find(const Atlas& a, const PlaneModel& m)
{
    for (const auto& e : a.entries)
        if (e.model == m)
            return &e;
    return nullptr;
}

} // namespace

TEST(Castelnuovo, Bound)
{
    EXPECT_EQ(castelnuovo_bound(4, 2), 3); // plane quartic
    EXPECT_EQ(castelnuovo_bound(9, 6), 3);
    EXPECT_EQ(castelnuovo_bound(8, 7), 1); // elliptic normal curve
    EXPECT_EQ(castelnuovo_bound(5, 6), -1); // too few points to span
}

TEST(Bounds, Validation)
{
    SearchBounds b;
    EXPECT_NO_THROW(b.validate());
    b.max_mult = 0;
    EXPECT_ANY_THROW(b.validate());
    EXPECT_NE(to_string(SearchBounds{}).find("max_a=8"), std::string::npos);
}

TEST(Candidate, Filters)
{
    const SearchBounds b;
    EXPECT_TRUE(evaluate_candidate({1, {0, 0, 0}}, b).has_value());
    EXPECT_FALSE(evaluate_candidate({1, {3, 0, 0}}, b).has_value()); // not nef
    EXPECT_FALSE(evaluate_candidate({4, {3, 1, 0}}, b).has_value()); // spans P^8
    const auto e = evaluate_candidate({3, {5, 0, 0}}, b);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->discriminant, 16);
    // codim 1 with h0(N_{S/X}) = 3; the search only knows the lower bound chi = 2
    EXPECT_EQ(e->codim_lo, -2);
    EXPECT_EQ(e->codim_hi, 0);
    EXPECT_FALSE(e->below_expected);
}

TEST(Enumerate, SmallestBound)
{
    SearchBounds b;
    b.max_a = 1;
    const Atlas a = enumerate(b);
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.entries[0].discriminant, 31);
}

TEST(Enumerate, DefaultAtlasSize) { EXPECT_EQ(default_atlas().entries.size(), 238u); }

TEST(Enumerate, ContainsEveryTabulatedModel)
{
    const Dataset d = load_dataset();
    for (int t : {1, 2})
        for (const TableRow* row : d.table(t)) {
            const auto spec = parse_surface_spec(row->surface_spec);
            const auto* e = find(default_atlas(), std::get<PlaneModel>(spec.base));
            ASSERT_NE(e, nullptr) << row->id;
            EXPECT_EQ(e->discriminant, row->discriminant) << row->id;
            EXPECT_EQ((std::array<integer, 4>{e->lattice.m11, e->lattice.m12, e->lattice.m12, e->lattice.m22}), row->matrix)
                << row->id;
            EXPECT_EQ(e->codim_lo, row->codim - row->h0_NSX) << row->id;
        }
}

TEST(Enumerate, EntriesAreAdmissibleAndSorted)
{
    const auto& a = default_atlas();
    EXPECT_TRUE(std::is_sorted(a.entries.begin(), a.entries.end(), atlas_order));
    for (const auto& e : a.entries) {
        EXPECT_GT(e.discriminant, 0);
        EXPECT_TRUE(mod16_class(e.discriminant).admissible);
        EXPECT_LE(e.codim_lo, e.codim_hi);
        EXPECT_GE(e.invariants.h0_H, 3);
        EXPECT_LE(e.invariants.h0_H, 8);
        EXPECT_EQ(e.below_expected, e.discriminant < 16);
    }
}

TEST(Gaps, DefaultBounds)
{
    EXPECT_EQ(gap_report(default_atlas(), 110), (std::vector<integer>{23, 95, 108}));
}

TEST(Gaps, WiderBoundsCanOnlyFillGaps)
{
    SearchBounds b;
    b.max_a = 6;
    const Atlas small = enumerate(b);
    for (integer g : gap_report(default_atlas(), 110))
        EXPECT_FALSE(small.attains(g));
    for (const auto& e : small.entries)
        EXPECT_TRUE(default_atlas().attains(e.discriminant));
}

TEST(Enumerate, WorkerCountDoesNotChangeResult)
{
    SearchBounds b;
    b.max_a = 6;
    const Atlas one = enumerate(b, 1);
    EXPECT_EQ(enumerate(b, 3), one);
    EXPECT_EQ(enumerate(b, 0), one);
}

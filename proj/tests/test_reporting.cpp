#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include <nlquad/reporting.hpp>

using namespace nlquad;

TEST(Tables, AllRowsReproduce)
{
    const Dataset d = load_dataset();
    const std::size_t sizes[] = {21, 13, 4, 3};
    for (int t = 1; t <= 4; ++t) {
        const auto rep = reproduce_tables(d, t);
        EXPECT_EQ(rep.rows.size(), sizes[t - 1]) << "table " << t;
        EXPECT_TRUE(rep.ok()) << table_text(rep);
        EXPECT_NO_THROW(require_match(rep));
    }
}

TEST(Tables, SpotRows)
{
    const Dataset d = load_dataset();
    const auto r = reproduce_row(d.row("T1-01"));
    EXPECT_EQ(r.lattice, (RankTwoLattice{8, 4, 4, LatticeSide::FourfoldMiddle}));
    EXPECT_EQ(r.discriminant, 16);
    EXPECT_EQ(r.counts.codim_bound, 1);
    const auto plane = reproduce_row(d.row("T3-1"));
    ASSERT_TRUE(plane.associated);
    EXPECT_EQ(*plane.associated_determinant, -31);
    EXPECT_THROW(d.row("T9-9"), DatasetMissing);
}

TEST(Tables, MismatchIsReported)
{
    Dataset d = load_dataset();
    TableRow row = d.row("T1-01");
    row.h0_N = 40;
    const auto r = reproduce_row(row);
    ASSERT_EQ(r.mismatches.size(), 1u);
    EXPECT_EQ(r.mismatches[0].field, "h0_N");
    EXPECT_EQ(r.mismatches[0].expected, "40");
    EXPECT_EQ(r.mismatches[0].computed, "41");
    TableReport t{1, {r}};
    EXPECT_THROW(require_match(t), RowMismatch);
}

TEST(Tables, BadSpecBecomesRowError)
{
    TableRow row;
    row.id = "X";
    row.table = 1;
    row.surface_spec = "5;7,0";
    const auto r = reproduce_row(row);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(r.error.empty());
}

TEST(Dataset, MissingOrEmpty)
{
    EXPECT_THROW(load_dataset("/nonexistent/tables.json"), DatasetMissing);
    const std::string path = testing::TempDir() + "nlquad_empty.json";
    std::ofstream(path) << "";
    EXPECT_ANY_THROW(load_dataset(path));
    std::ofstream(path) << R"({"format": "other", "version": 1, "rows": []})";
    EXPECT_THROW(load_dataset(path), DatasetMissing);
    std::remove(path.c_str());
    EXPECT_THROW(reproduce_tables(Dataset{}, 1), DatasetMissing);
}

TEST(Dataset, Gaps)
{
    const Dataset d = load_dataset();
    std::vector<integer> g;
    for (const auto& x : d.gaps)
        g.push_back(x.discriminant);
    EXPECT_EQ(g, (std::vector<integer>{23, 95, 108}));
}

TEST(Dataset, JsonRoundTrip)
{
    const Dataset d = load_dataset();
    const Dataset back = parse_dataset(json(d));
    EXPECT_EQ(back.rows, d.rows);
    EXPECT_EQ(back.gaps, d.gaps);
}

TEST(Emitters, MarkdownColumnOrder)
{
    const auto rep = reproduce_tables(load_dataset(), 1);
    const auto md = table_markdown(rep);
    const auto start = md.find("| surface");
    ASSERT_NE(start, std::string::npos);
    const auto header = md.substr(start, md.find('\n', start) - start);
    const auto pos = [&](const char* s) { return header.find(s); };
    EXPECT_LT(pos("surface"), pos("matrix"));
    EXPECT_LT(pos("matrix"), pos("codim"));
    EXPECT_LT(pos("codim"), pos("h0(I_S(2))"));
    EXPECT_LT(pos("h0(I_S(2))"), pos("h0(N_S)"));
    EXPECT_NE(md.find("| 3;5,0,0 |"), std::string::npos);
    const auto csv = table_csv(rep);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 22);
}

TEST(Emitters, AtlasOutputsNameTheBounds)
{
    SearchBounds b;
    b.max_a = 3;
    const Atlas a = enumerate(b);
    EXPECT_NE(atlas_text(a).find(to_string(b)), std::string::npos);
    EXPECT_NE(atlas_markdown(a).find("31"), std::string::npos);
}

TEST(Describe, Headline)
{
    const auto text = describe("5;7,0,1");
    EXPECT_EQ(text.rfind("Complete intersection of type (2,2,2) in P^7 of discriminant 47", 0), 0u);
    const auto cubic = describe_surface("abs:deg=13,g=12,K2=2,chiO=4", parse_ci("3"));
    EXPECT_EQ(cubic.discriminant, 14);
    EXPECT_FALSE(cubic.counts);
    EXPECT_THROW(describe("5;7,0"), SpanTooLarge);
}

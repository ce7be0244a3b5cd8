#include <gtest/gtest.h>

#include <nlquad/surface_models.hpp>

#include "oracles.hpp"

using namespace nlquad;

namespace {

void expect_invariants(const SurfaceInvariants& s, integer deg, integer g, integer K2, integer chi, integer chi_top,
                       integer h0)
{
    EXPECT_EQ(s.degree, deg) << s.label;
    EXPECT_EQ(s.sect_genus, g) << s.label;
    EXPECT_EQ(s.K2, K2) << s.label;
    EXPECT_EQ(s.chi_O, chi) << s.label;
    EXPECT_EQ(s.chi_top, chi_top) << s.label;
    EXPECT_EQ(s.h0_H, h0) << s.label;
}

SurfaceInvariants k3_degree14() { return abstract_surface(14, 8, 0, 2, "K3"); }

} // namespace

TEST(Expand, Transcription)
{
    EXPECT_EQ(expand({1, {}}), (DivisorClass{1, {}}));
    EXPECT_EQ(expand({5, {7, 0, 1}}), (DivisorClass{5, {1, 1, 1, 1, 1, 1, 1, 3}}));
    EXPECT_EQ(expand({4, {6, 1, 0}}), (DivisorClass{4, {1, 1, 1, 1, 1, 1, 2}}));
    EXPECT_THROW(expand({0, {}}), DegenerateModel);
    EXPECT_THROW(expand({3, {-1}}), DegenerateModel);
}

TEST(Invariants, PlaneModels)
{
    expect_invariants(invariants({3, {5, 0, 0}}), 4, 1, 4, 1, 8, 5);
    expect_invariants(invariants({5, {7, 0, 1}}), 9, 3, 1, 1, 11, 8);
    expect_invariants(invariants({1, {}}), 1, 0, 9, 1, 3, 3);
}

TEST(Invariants, AgreeWithDirectComputationWhenNothingContracts)
{
    for (const PlaneModel& m : {PlaneModel{3, {5, 0, 0}}, PlaneModel{5, {7, 0, 1}}, PlaneModel{6, {8, 4, 0}},
                                PlaneModel{7, {4, 8, 0}}}) {
        const auto s = invariants(m);
        const auto o = oracle::plane_model(m.a, m.point_counts);
        EXPECT_EQ(s.degree, o.degree);
        EXPECT_EQ(s.HK(), o.HK);
        EXPECT_EQ(s.sect_genus, o.genus);
        EXPECT_EQ(s.h0_H, o.h0);
        EXPECT_EQ(s.K2, 9 - m.total_points());
    }
}

TEST(Invariants, ContractionGivesQuadricSurface)
{
    const auto s = invariants({2, {2, 0, 0}});
    EXPECT_EQ(s.K2, 8);
    EXPECT_EQ(s.chi_top, 4);
    EXPECT_EQ(s.degree, 2);
}

TEST(Invariants, SpanChecks)
{
    EXPECT_THROW(invariants({5, {7, 0}}), SpanTooLarge);
    EXPECT_NO_THROW(invariants_unclamped({4, {3, 1}}));
    EXPECT_THROW(invariants({1, {3}}), NotNef);
    // the anticanonical pencil of cubics through nine points has H^2 = 0
    EXPECT_THROW(invariants({3, {9}}), DegenerateModel);
}

TEST(Invariants, ConstructorRejectsNoetherViolation)
{
    SurfaceInvariants s;
    s.chi_top = 4;
    EXPECT_THROW(s.validate(), InvalidInvariants);
    s.chi_top = 3;
    EXPECT_NO_THROW(s.validate());
    s.degree = 0;
    EXPECT_THROW(s.validate(), InvalidInvariants);
}

TEST(Projection, InternalOfK3)
{
    const auto p = internal_projection(k3_degree14());
    expect_invariants(p, 13, 8, -1, 2, 25, 8);
    const auto pp = internal_projection(p);
    EXPECT_EQ(pp.degree, 12);
    EXPECT_EQ(pp.K2, -2);
}

TEST(Projection, InternalOfAbstract)
{
    const auto p = internal_projection(abstract_surface(10, 4, 2, 1));
    EXPECT_EQ(p.degree, 9);
    EXPECT_EQ(p.sect_genus, 4);
    EXPECT_EQ(p.K2, 1);
    EXPECT_EQ(p.chi_O, 1);
}

TEST(Projection, InternalRejectsNodalOrSmallSources)
{
    SurfaceInvariants s = invariants_unclamped({4, {3, 1}});
    s.nodes = 1;
    EXPECT_THROW(internal_projection(s), NotProjectable);
    EXPECT_THROW(internal_projection(invariants({3, {6}})), NotProjectable);
}

TEST(Projection, External)
{
    const auto src = invariants_unclamped({4, {3, 1}});
    expect_invariants(src, 9, 2, 5, 1, 7, 9);
    const auto p = external_projection(src);
    expect_invariants(p, 9, 2, 5, 1, 7, 9);
    EXPECT_FALSE(p.linearly_normal);
    EXPECT_THROW(external_projection(p), NotProjectable);
    EXPECT_THROW(external_projection(invariants({5, {7, 0, 1}})), NotProjectable);
}

TEST(Projection, Nodal)
{
    const auto src = invariants_unclamped({5, {6, 2}});
    expect_invariants(src, 11, 4, 1, 1, 11, 9);
    const auto p = nodal_projection(src, 1);
    EXPECT_EQ(p.nodes, 1);
    EXPECT_EQ(p.degree, 11);
    EXPECT_THROW(nodal_projection(src, 0), NotProjectable);
    EXPECT_EQ(nodal_projection(invariants_unclamped({4, {3, 1}}), 2).nodes, 2);
}

TEST(SpecParser, PlaneAndModifiers)
{
    const auto spec = parse_surface_spec("5;6,2+nodes=1");
    EXPECT_EQ(std::get<PlaneModel>(spec.base), (PlaneModel{5, {6, 2}}));
    ASSERT_EQ(spec.modifiers.size(), 1u);
    EXPECT_EQ(spec.modifiers[0], (Modifier{ModifierKind::Nodes, 1}));

    const auto ws = parse_surface_spec("4;3,1 ext-proj");
    EXPECT_EQ(ws.modifiers[0].kind, ModifierKind::ExternalProjection);
    EXPECT_EQ(std::get<PlaneModel>(parse_surface_spec("1;").base), (PlaneModel{1, {}}));
}

TEST(SpecParser, Abstract)
{
    const auto spec = parse_surface_spec("abs:deg=13,g=8,K2=-1,chiO=2");
    EXPECT_EQ(std::get<AbstractData>(spec.base), (AbstractData{13, 8, -1, 2}));
    const auto s = resolve("abs:deg=14,g=8,K2=0,chiO=2+int-proj");
    expect_invariants(s, 13, 8, -1, 2, 25, 8);
}

TEST(SpecParser, RoundTripsThroughToString)
{
    for (const char* text : {"5;7,0,1", "abs:deg=14,g=8,K2=0,chiO=2+int-proj", "4;3,1+ext-proj", "5;6,2+nodes=1", "1;"})
        EXPECT_EQ(to_string(parse_surface_spec(text)), text);
}

TEST(SpecParser, ErrorsCarryPositions)
{
    try {
        parse_surface_spec("5;7,0,");
        FAIL() << "no exception";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(parse_surface_spec("5,7"), ParseError);
    EXPECT_THROW(parse_surface_spec("abs:deg=3,g=0"), ParseError);
    EXPECT_THROW(parse_surface_spec("abs:deg=3,g=0,K2=1,chiO=1,g=2"), ParseError);
    EXPECT_THROW(parse_surface_spec("3;5+flip"), ParseError);
    EXPECT_THROW(parse_surface_spec("3;5+nodes=0"), ParseError);
    EXPECT_THROW(parse_surface_spec("3;5junk"), ParseError);
}

TEST(SpecParser, ResolveRejectsUnprojectedSurfaceInP8)
{
    EXPECT_THROW(resolve("4;3,1"), SpanTooLarge);
    EXPECT_NO_THROW(resolve("4;3,1+ext-proj"));
    EXPECT_THROW(resolve("5;7,0"), SpanTooLarge);
}

#pragma once

// JSON conversions for every record type (nlohmann ADL hooks).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ci_chow.hpp"
#include "hodge_ledger.hpp"
#include "moduli_count.hpp"
#include "nl_lattice.hpp"
#include "picard_lattice.hpp"
#include "search_atlas.hpp"
#include "surface_models.hpp"

namespace nlquad {

using json = nlohmann::json;

inline void to_json(json& j, const DivisorClass& d) { j = {{"plane_degree", d.plane_degree}, {"mults", d.mults}}; }
inline void from_json(const json& j, DivisorClass& d)
{
    j.at("plane_degree").get_to(d.plane_degree);
    j.at("mults").get_to(d.mults);
}

inline void to_json(json& j, const PlaneModel& m) { j = {{"a", m.a}, {"point_counts", m.point_counts}}; }
inline void from_json(const json& j, PlaneModel& m)
{
    j.at("a").get_to(m.a);
    j.at("point_counts").get_to(m.point_counts);
}

inline void to_json(json& j, const SurfaceInvariants& s)
{
    j = {{"degree", s.degree}, {"sect_genus", s.sect_genus}, {"K2", s.K2},         {"chi_O", s.chi_O},
         {"chi_top", s.chi_top}, {"h0_H", s.h0_H},           {"nodes", s.nodes},   {"linearly_normal", s.linearly_normal},
         {"label", s.label}};
}
inline void from_json(const json& j, SurfaceInvariants& s)
{
    j.at("degree").get_to(s.degree);
    j.at("sect_genus").get_to(s.sect_genus);
    j.at("K2").get_to(s.K2);
    j.at("chi_O").get_to(s.chi_O);
    j.at("chi_top").get_to(s.chi_top);
    j.at("h0_H").get_to(s.h0_H);
    j.at("nodes").get_to(s.nodes);
    s.linearly_normal = j.value("linearly_normal", true);
    s.label = j.value("label", std::string{});
    s.validate();
}

inline void to_json(json& j, const CompleteIntersectionType& ci) { j = ci.degrees; }
inline void from_json(const json& j, CompleteIntersectionType& ci)
{
    j.get_to(ci.degrees);
    ci.validate();
}

inline void to_json(json& j, const SelfIntersectionCoefficients& c) { j = {{"cH2", c.cH2}, {"cHK", c.cHK}}; }
inline void from_json(const json& j, SelfIntersectionCoefficients& c)
{
    j.at("cH2").get_to(c.cH2);
    j.at("cHK").get_to(c.cHK);
}

inline void to_json(json& j, const SelfIntersection& s)
{
    j = {{"value", s.value}, {"coefficients", s.coefficients}, {"node_rule_used", s.node_rule_used}};
}
inline void from_json(const json& j, SelfIntersection& s)
{
    j.at("value").get_to(s.value);
    j.at("coefficients").get_to(s.coefficients);
    j.at("node_rule_used").get_to(s.node_rule_used);
}

inline void to_json(json& j, const RankTwoLattice& l)
{
    j = {{"matrix", {l.m11, l.m12, l.m12, l.m22}}, {"side", to_string(l.side)}};
}
inline void from_json(const json& j, RankTwoLattice& l)
{
    const auto m = j.at("matrix").get<std::vector<integer>>();
    if (m.size() != 4 || m[1] != m[2])
        throw DimensionMismatch("lattice matrix must be four entries, symmetric");
    l.m11 = m[0];
    l.m12 = m[1];
    l.m22 = m[3];
    const auto side = j.at("side").get<std::string>();
    if (side == "fourfold")
        l.side = LatticeSide::FourfoldMiddle;
    else if (side == "surface")
        l.side = LatticeSide::SurfacePicard;
    else
        throw ParseError("unknown lattice side '" + side + "'", 0);
}

inline void to_json(json& j, const Mod16Class& m) { j = {{"residue", m.residue}, {"admissible", m.admissible}}; }
inline void from_json(const json& j, Mod16Class& m)
{
    j.at("residue").get_to(m.residue);
    j.at("admissible").get_to(m.admissible);
}

inline void to_json(json& j, const ParameterCount& p)
{
    j = {{"h0_IS2", p.h0_IS2},       {"h0_N", p.h0_N},
         {"h0_NSX", p.h0_NSX},       {"grass_dim", p.grass_dim},
         {"codim_bound", p.codim_bound}, {"assumes_vanishing", p.assumes_vanishing},
         {"fitted_node_rule", p.fitted_node_rule}};
}
inline void from_json(const json& j, ParameterCount& p)
{
    j.at("h0_IS2").get_to(p.h0_IS2);
    j.at("h0_N").get_to(p.h0_N);
    j.at("h0_NSX").get_to(p.h0_NSX);
    j.at("grass_dim").get_to(p.grass_dim);
    j.at("codim_bound").get_to(p.codim_bound);
    j.at("assumes_vanishing").get_to(p.assumes_vanishing);
    j.at("fitted_node_rule").get_to(p.fitted_node_rule);
}

inline void to_json(json& j, const HodgeDiamond& d) { j = {{"dim", d.dim()}, {"h", d.rows()}}; }
inline void from_json(const json& j, HodgeDiamond& d)
{
    const auto rows = j.at("h").get<std::vector<std::vector<integer>>>();
    if (j.contains("dim") && j.at("dim").get<int>() + 1 != static_cast<int>(rows.size()))
        throw DimensionMismatch("Hodge table size does not match dim");
    d = HodgeDiamond::from_rows(rows);
}

inline void to_json(json& j, const SurfaceHodgeData& d)
{
    j = {{"pg", d.pg}, {"q", d.q}, {"h11", d.h11}, {"b2", d.b2}, {"chi_O", d.chi_O}, {"chi_top", d.chi_top}, {"K2", d.K2}};
}
inline void from_json(const json& j, SurfaceHodgeData& d)
{
    j.at("pg").get_to(d.pg);
    j.at("q").get_to(d.q);
    j.at("h11").get_to(d.h11);
    j.at("b2").get_to(d.b2);
    j.at("chi_O").get_to(d.chi_O);
    j.at("chi_top").get_to(d.chi_top);
    j.at("K2").get_to(d.K2);
}

inline void to_json(json& j, const Classification& c)
{
    j = {{"castelnuovo_type_I", c.castelnuovo_type_I}, {"non_minimal", c.non_minimal}, {"minimal_model_K2", nullptr}};
    if (c.minimal_model_K2)
        j["minimal_model_K2"] = *c.minimal_model_K2;
}
inline void from_json(const json& j, Classification& c)
{
    j.at("castelnuovo_type_I").get_to(c.castelnuovo_type_I);
    j.at("non_minimal").get_to(c.non_minimal);
    c.minimal_model_K2.reset();
    if (j.contains("minimal_model_K2") && !j.at("minimal_model_K2").is_null())
        c.minimal_model_K2 = j.at("minimal_model_K2").get<integer>();
}

inline void to_json(json& j, const SearchBounds& b)
{
    j = {{"max_a", b.max_a},         {"max_points", b.max_points},
         {"max_mult", b.max_mult},   {"min_h0_IS2", b.min_h0_IS2},
         {"max_codim", b.max_codim}, {"require_genus_bound", b.require_genus_bound},
         {"catalogue_degree", b.catalogue_degree}};
}
inline void from_json(const json& j, SearchBounds& b)
{
    j.at("max_a").get_to(b.max_a);
    j.at("max_points").get_to(b.max_points);
    j.at("max_mult").get_to(b.max_mult);
    j.at("min_h0_IS2").get_to(b.min_h0_IS2);
    j.at("max_codim").get_to(b.max_codim);
    j.at("require_genus_bound").get_to(b.require_genus_bound);
    j.at("catalogue_degree").get_to(b.catalogue_degree);
}

inline void to_json(json& j, const AtlasEntry& e)
{
    j = {{"model", e.model},
         {"invariants", e.invariants},
         {"lattice", e.lattice},
         {"discriminant", e.discriminant},
         {"codim_range", {e.codim_lo, e.codim_hi}},
         {"below_expected", e.below_expected}};
}
inline void from_json(const json& j, AtlasEntry& e)
{
    j.at("model").get_to(e.model);
    j.at("invariants").get_to(e.invariants);
    j.at("lattice").get_to(e.lattice);
    j.at("discriminant").get_to(e.discriminant);
    const auto r = j.at("codim_range").get<std::vector<integer>>();
    if (r.size() != 2)
        throw DimensionMismatch("codim_range needs two entries");
    e.codim_lo = r[0];
    e.codim_hi = r[1];
    j.at("below_expected").get_to(e.below_expected);
}

inline void to_json(json& j, const Atlas& a) { j = {{"bounds", a.bounds}, {"entries", a.entries}}; }
inline void from_json(const json& j, Atlas& a)
{
    j.at("bounds").get_to(a.bounds);
    j.at("entries").get_to(a.entries);
}

} // namespace nlquad

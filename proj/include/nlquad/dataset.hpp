#pragma once

// Transcribed table rows. h0(N_{S/X}) is only ever read from here.

#include <array>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "io.hpp"

#ifndef NLQUAD_DEFAULT_DATASET
#define NLQUAD_DEFAULT_DATASET "data/tables.json"
#endif

namespace nlquad {

struct AssociatedSurface
{
    integer degree = 0;
    integer sect_genus = 0;
    integer K2 = 0;
    integer chi_O = 0;
    std::array<integer, 4> matrix{};
    integer determinant = 0;

    friend bool operator==(const AssociatedSurface&, const AssociatedSurface&) = default;
};

struct TableRow
{
    std::string id;
    int table = 0;
    std::string surface_spec;
    std::string description;
    std::array<integer, 4> matrix{};
    integer discriminant = 0;
    integer codim = 0;
    integer h0_IS2 = 0;
    integer h0_N = 0;
    integer h0_NSX = 0;
    std::vector<std::string> flags;
    std::string fourfold_W;
    std::optional<AssociatedSurface> associated;

    bool has_flag(const std::string& f) const
    {
        for (const auto& x : flags)
            if (x == f)
                return true;
        return false;
    }

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct GapRow
{
    std::string id;
    int table = 0;
    integer discriminant = 0;

    friend bool operator==(const GapRow&, const GapRow&) = default;
};

struct Dataset
{
    std::string format = "nlquad-dataset";
    int version = 1;
    std::vector<TableRow> rows;
    std::vector<GapRow> gaps;
    std::string source;

    std::vector<const TableRow*> table(int t) const
    {
        std::vector<const TableRow*> out;
        for (const auto& r : rows)
            if (r.table == t)
                out.push_back(&r);
        return out;
    }

    const TableRow& row(const std::string& id) const
    {
        for (const auto& r : rows)
            if (r.id == id)
                return r;
        throw DatasetMissing("no dataset row '" + id + "'");
    }
};

inline void to_json(json& j, const AssociatedSurface& a)
{
    j = {{"degree", a.degree}, {"sect_genus", a.sect_genus}, {"K2", a.K2},
         {"chi_O", a.chi_O},   {"matrix", a.matrix},         {"determinant", a.determinant}};
}
inline void from_json(const json& j, AssociatedSurface& a)
{
    j.at("degree").get_to(a.degree);
    j.at("sect_genus").get_to(a.sect_genus);
    j.at("K2").get_to(a.K2);
    j.at("chi_O").get_to(a.chi_O);
    j.at("matrix").get_to(a.matrix);
    j.at("determinant").get_to(a.determinant);
}

inline void to_json(json& j, const TableRow& r)
{
    j = {{"id", r.id},         {"table", r.table},           {"surface_spec", r.surface_spec},
         {"matrix", r.matrix}, {"discriminant", r.discriminant}, {"codim", r.codim},
         {"h0_IS2", r.h0_IS2}, {"h0_N", r.h0_N},             {"h0_NSX", r.h0_NSX},
         {"flags", r.flags}};
    if (!r.description.empty())
        j["description"] = r.description;
    if (r.table >= 3) {
        j["fourfold_W"] = r.fourfold_W;
        j["associated"] = r.associated ? json(*r.associated) : json(nullptr);
    }
}
inline void from_json(const json& j, TableRow& r)
{
    j.at("id").get_to(r.id);
    j.at("table").get_to(r.table);
    j.at("surface_spec").get_to(r.surface_spec);
    r.description = j.value("description", std::string{});
    j.at("matrix").get_to(r.matrix);
    j.at("discriminant").get_to(r.discriminant);
    j.at("codim").get_to(r.codim);
    j.at("h0_IS2").get_to(r.h0_IS2);
    j.at("h0_N").get_to(r.h0_N);
    j.at("h0_NSX").get_to(r.h0_NSX);
    r.flags = j.value("flags", std::vector<std::string>{});
    r.fourfold_W = j.value("fourfold_W", std::string{});
    r.associated.reset();
    if (j.contains("associated") && !j.at("associated").is_null())
        r.associated = j.at("associated").get<AssociatedSurface>();
}

inline Dataset parse_dataset(const json& j, std::string source = "<memory>")
{
    Dataset d;
    d.source = std::move(source);
    d.format = j.value("format", std::string{});
    d.version = j.value("version", 0);
    if (d.format != "nlquad-dataset")
        throw DatasetMissing(d.source + ": not an nlquad dataset");
    for (const auto& row : j.value("rows", json::array())) {
        if (row.contains("gap"))
            d.gaps.push_back({row.at("id").get<std::string>(), row.at("table").get<int>(), row.at("gap").get<integer>()});
        else
            d.rows.push_back(row.get<TableRow>());
    }
    if (d.rows.empty())
        throw DatasetMissing(d.source + ": dataset has no rows");
    return d;
}

/// Gap rows are written after the data rows.
inline void to_json(json& j, const Dataset& d)
{
    json rows = json::array();
    for (const auto& r : d.rows)
        rows.push_back(r);
    for (const auto& g : d.gaps)
        rows.push_back({{"id", g.id}, {"table", g.table}, {"gap", g.discriminant}});
    j = {{"format", d.format}, {"version", d.version}, {"rows", std::move(rows)}};
}

/// explicit path > $NLQUAD_DATASET > built-in default.
inline std::string dataset_path(const std::string& explicit_path = {})
{
    if (!explicit_path.empty())
        return explicit_path;
    if (const char* env = std::getenv("NLQUAD_DATASET"); env && *env)
        return env;
    return NLQUAD_DEFAULT_DATASET;
}

inline Dataset load_dataset(const std::string& explicit_path = {})
{
    const std::string path = dataset_path(explicit_path);
    std::ifstream in(path);
    if (!in)
        throw DatasetMissing("cannot open dataset " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
    return parse_dataset(j, path);
}

} // namespace nlquad

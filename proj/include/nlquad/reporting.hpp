#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ci_chow.hpp"
#include "dataset.hpp"
#include "hodge_ledger.hpp"
#include "io.hpp"
#include "moduli_count.hpp"
#include "nl_lattice.hpp"
#include "search_atlas.hpp"
#include "surface_models.hpp"

namespace nlquad {

struct FieldMismatch
{
    std::string field;
    std::string expected;
    std::string computed;
};

struct RowReport
{
    std::string id;
    std::string surface_spec;
    RankTwoLattice lattice;
    integer discriminant = 0;
    ParameterCount counts;
    std::optional<RankTwoLattice> associated;
    std::optional<integer> associated_determinant;
    std::string error; // set when the row could not be evaluated
    std::vector<FieldMismatch> mismatches;

    bool ok() const { return error.empty() && mismatches.empty(); }
};

struct TableReport
{
    int table = 0;
    std::vector<RowReport> rows;

    bool ok() const
    {
        for (const auto& r : rows)
            if (!r.ok())
                return false;
        return !rows.empty();
    }

    std::size_t mismatched() const
    {
        std::size_t n = 0;
        for (const auto& r : rows)
            n += r.ok() ? 0 : 1;
        return n;
    }
};

namespace detail {

inline std::string matrix_string(const std::array<integer, 4>& m)
{
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" + std::to_string(m[2]) + ","
           + std::to_string(m[3]) + "]]";
}

inline std::array<integer, 4> as_array(const RankTwoLattice& l) { return {l.m11, l.m12, l.m12, l.m22}; }

inline void compare(RowReport& r, const std::string& field, integer expected, integer computed)
{
    if (expected != computed)
        r.mismatches.push_back({field, std::to_string(expected), std::to_string(computed)});
}

} // namespace detail

inline RowReport reproduce_row(const TableRow& row)
{
    RowReport r;
    r.id = row.id;
    r.surface_spec = row.surface_spec;
    try {
        const SurfaceInvariants s = resolve(row.surface_spec);
        r.lattice = fourfold_lattice(three_quadrics(), s);
        r.discriminant = discriminant(r.lattice);
        r.counts = codimension_bound(s, row.h0_NSX);
    } catch (const Error& e) {
        r.error = e.what();
        return r;
    }
    const auto m = detail::as_array(r.lattice);
    if (m != row.matrix)
        r.mismatches.push_back({"matrix", detail::matrix_string(row.matrix), detail::matrix_string(m)});
    detail::compare(r, "discriminant", row.discriminant, r.discriminant);
    detail::compare(r, "codim", row.codim, r.counts.codim_bound);
    detail::compare(r, "h0_IS2", row.h0_IS2, r.counts.h0_IS2);
    detail::compare(r, "h0_N", row.h0_N, r.counts.h0_N);

    if (row.associated) {
        const auto& a = *row.associated;
        try {
            const SurfaceInvariants u = abstract_surface(a.degree, a.sect_genus, a.K2, a.chi_O, "associated");
            r.associated = surface_picard_matrix(u);
            r.associated_determinant = r.associated->determinant();
        } catch (const Error& e) {
            r.error = std::string("associated surface: ") + e.what();
            return r;
        }
        const auto am = detail::as_array(*r.associated);
        if (am != a.matrix)
            r.mismatches.push_back({"associated.matrix", detail::matrix_string(a.matrix), detail::matrix_string(am)});
        detail::compare(r, "associated.determinant", a.determinant, *r.associated_determinant);
        // The two sides of the correspondence carry the same discriminant.
        detail::compare(r, "duality", r.discriminant, discriminant(*r.associated));
    }
    return r;
}

inline TableReport reproduce_tables(const Dataset& data, int which)
{
    if (which < 1 || which > 4)
        throw DatasetMissing("tables are numbered 1 to 4");
    TableReport t;
    t.table = which;
    for (const TableRow* row : data.table(which))
        t.rows.push_back(reproduce_row(*row));
    if (t.rows.empty())
        throw DatasetMissing("dataset has no rows for table " + std::to_string(which));
    return t;
}

/// Throws RowMismatch naming every failing row and field.
inline void require_match(const TableReport& t)
{
    if (t.ok())
        return;
    std::string msg = "table " + std::to_string(t.table) + ":";
    for (const auto& r : t.rows) {
        if (r.ok())
            continue;
        msg += " " + r.id + "{";
        if (!r.error.empty())
            msg += "error: " + r.error;
        for (const auto& m : r.mismatches)
            msg += m.field + " expected " + m.expected + " got " + m.computed + ";";
        msg += "}";
    }
    throw RowMismatch(msg);
}

inline void to_json(json& j, const FieldMismatch& m)
{
    j = {{"field", m.field}, {"expected", m.expected}, {"computed", m.computed}};
}

inline void to_json(json& j, const RowReport& r)
{
    j = {{"id", r.id},
         {"surface_spec", r.surface_spec},
         {"lattice", r.lattice},
         {"discriminant", r.discriminant},
         {"counts", r.counts},
         {"ok", r.ok()},
         {"mismatches", r.mismatches}};
    if (r.associated) {
        j["associated"] = *r.associated;
        j["associated_determinant"] = *r.associated_determinant;
    }
    if (!r.error.empty())
        j["error"] = r.error;
}

inline void to_json(json& j, const TableReport& t)
{
    j = {{"table", t.table}, {"ok", t.ok()}, {"rows", t.rows}};
}

// --- emitters --------------------------------------------------------------

inline std::string table_markdown(const TableReport& t)
{
    std::ostringstream os;
    os << "| surface | matrix | codim | h0(I_S(2)) | h0(N_S) | h0(N_S/X) | disc | status |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : t.rows) {
        os << "| " << r.surface_spec << " | " << to_string(r.lattice) << " | " << r.counts.codim_bound << " | "
           << r.counts.h0_IS2 << " | " << r.counts.h0_N << " | " << r.counts.h0_NSX << " | " << r.discriminant
           << " | " << (r.ok() ? "ok" : "MISMATCH") << " |\n";
    }
    return os.str();
}

inline std::string table_csv(const TableReport& t)
{
    std::ostringstream os;
    os << "id,surface,m11,m12,m22,codim,h0_IS2,h0_N,h0_NSX,discriminant,ok\n";
    for (const auto& r : t.rows)
        os << r.id << ",\"" << r.surface_spec << "\"," << r.lattice.m11 << "," << r.lattice.m12 << ","
           << r.lattice.m22 << "," << r.counts.codim_bound << "," << r.counts.h0_IS2 << "," << r.counts.h0_N << ","
           << r.counts.h0_NSX << "," << r.discriminant << "," << (r.ok() ? 1 : 0) << "\n";
    return os.str();
}

inline std::string table_text(const TableReport& t)
{
    std::ostringstream os;
    os << "Table " << t.table << ": " << t.rows.size() - t.mismatched() << "/" << t.rows.size() << " rows match\n";
    for (const auto& r : t.rows) {
        os << "  " << r.id << "  " << r.surface_spec << "  " << to_string(r.lattice) << "  disc " << r.discriminant
           << "  codim " << r.counts.codim_bound << "  (" << r.counts.h0_IS2 << ", " << r.counts.h0_N << ", "
           << r.counts.h0_NSX << ")";
        if (r.associated)
            os << "  associated " << to_string(*r.associated) << " det " << *r.associated_determinant;
        os << (r.ok() ? "  ok" : "  MISMATCH") << "\n";
        if (!r.error.empty())
            os << "      error: " << r.error << "\n";
        for (const auto& m : r.mismatches)
            os << "      " << m.field << ": expected " << m.expected << ", computed " << m.computed << "\n";
    }
    return os.str();
}

inline std::string atlas_markdown(const Atlas& a)
{
    std::ostringstream os;
    os << "Search bounds: " << to_string(a.bounds) << "\n\n";
    os << "| surface | matrix | codim | h0(I_S(2)) | h0(N_S) | disc | note |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& e : a.entries) {
        os << "| " << to_string(e.model) << " | " << to_string(e.lattice) << " | " << e.codim_lo;
        if (e.codim_hi != e.codim_lo)
            os << ".." << e.codim_hi;
        os << " | " << h0_quadrics(e.invariants) << " | " << h0_normal_bundle(e.invariants) << " | "
           << e.discriminant << " | " << (e.below_expected ? "below 16" : "") << " |\n";
    }
    return os.str();
}

inline std::string atlas_csv(const Atlas& a)
{
    std::ostringstream os;
    os << "a,counts,m11,m12,m22,discriminant,codim_lo,codim_hi,below_expected\n";
    for (const auto& e : a.entries) {
        std::string counts;
        for (std::size_t i = 0; i < e.model.point_counts.size(); ++i)
            counts += (i ? " " : "") + std::to_string(e.model.point_counts[i]);
        os << e.model.a << "," << counts << "," << e.lattice.m11 << "," << e.lattice.m12 << "," << e.lattice.m22
           << "," << e.discriminant << "," << e.codim_lo << "," << e.codim_hi << "," << (e.below_expected ? 1 : 0)
           << "\n";
    }
    return os.str();
}

inline std::string atlas_text(const Atlas& a)
{
    std::ostringstream os;
    os << "bounds: " << to_string(a.bounds) << "\n";
    for (const auto& [disc, entries] : a.buckets()) {
        os << "disc " << disc << (mod16_class(disc).admissible ? "" : " (inadmissible)")
           << (disc < 16 ? " (below 16)" : "") << ":";
        for (const AtlasEntry* e : entries)
            os << " S(" << to_string(e->model) << ")[codim " << e->codim_lo << ".." << e->codim_hi << "]";
        os << "\n";
    }
    return os.str();
}

// --- describe ----------------------------------------------------------------

struct Description
{
    std::string spec;
    CompleteIntersectionType ci;
    SurfaceInvariants invariants;
    SelfIntersection self;
    RankTwoLattice lattice;
    integer discriminant = 0;
    Mod16Class mod16;
    std::optional<ParameterCount> counts; // three quadrics only; h0(N_{S/X}) = 0
    std::optional<integer> chi_NSX;
};

inline Description describe_surface(const std::string& spec, const CompleteIntersectionType& ci)
{
    Description d;
    d.spec = spec;
    d.ci = ci;
    d.invariants = resolve(spec);
    d.self = self_intersection(ci, d.invariants);
    d.lattice = fourfold_lattice(ci, d.invariants);
    d.discriminant = discriminant(d.lattice);
    d.mod16 = mod16_class(d.discriminant);
    if (ci.is_three_quadrics()) {
        d.counts = codimension_bound(d.invariants, 0);
        d.chi_NSX = chi_NSX_lower(d.invariants);
    }
    return d;
}

inline std::string describe(const std::string& spec, const CompleteIntersectionType& ci = three_quadrics())
{
    const Description d = describe_surface(spec, ci);
    const SurfaceInvariants& s = d.invariants;
    std::ostringstream os;
    os << "Complete intersection of type (" << to_string(ci) << ") in P^" << ci.ambient_dim()
       << " of discriminant " << d.discriminant << "\n";
    os << "  surface   " << s.label << "\n";
    os << "  degree " << s.degree << ", sectional genus " << s.sect_genus << ", K^2 " << s.K2 << ", chi(O) "
       << s.chi_O << ", chi_top " << s.chi_top << ", h0(O(H)) " << s.h0_H;
    if (s.nodes)
        os << ", nodes " << s.nodes;
    if (!s.linearly_normal)
        os << ", not linearly normal";
    os << "\n";
    os << "  lattice   " << to_string(d.lattice) << "  (S)^2 = " << d.self.value << " from " << d.self.coefficients.cH2
       << " H^2 + " << d.self.coefficients.cHK << " HK + K^2 - c2" << (d.self.node_rule_used ? " [node rule]" : "")
       << "\n";
    os << "  disc mod 16 = " << d.mod16.residue << (d.mod16.admissible ? " (admissible)" : " (not admissible)") << "\n";
    if (d.counts) {
        const auto& c = *d.counts;
        os << "  h0(I_S(2)) = " << c.h0_IS2 << ", h0(N_S) = " << c.h0_N << ", dim G = " << c.grass_dim << "\n";
        os << "  codim <= " << c.codim_bound << " + h0(N_S/X); chi estimate of N_S/X = " << *d.chi_NSX << "\n";
        os << "  assumes vanishing of higher cohomology" << (c.fitted_node_rule ? "; nodal corrections are fitted" : "")
           << "\n";
    }
    return os.str();
}

inline void to_json(json& j, const Description& d)
{
    j = {{"spec", d.spec},         {"ci", d.ci},
         {"invariants", d.invariants}, {"self_intersection", d.self},
         {"lattice", d.lattice},   {"discriminant", d.discriminant},
         {"mod16", d.mod16}};
    if (d.counts) {
        j["counts"] = *d.counts;
        j["chi_NSX_lower"] = *d.chi_NSX;
    }
}

// --- diagram files -----------------------------------------------------------

namespace detail {

inline HodgeDiamond diamond_from(const json& j)
{
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        for (const auto& p : preset_names())
            if (p == name)
                return preset(name);
        return surface_diamond(resolve(name));
    }
    if (j.is_object() && j.contains("surface"))
        return surface_diamond(resolve(j.at("surface").get<std::string>()));
    return j.get<HodgeDiamond>();
}

inline DiagramSide side_from(const json& j)
{
    DiagramSide s;
    const json& f = j.at("fourfold");
    s.fourfold = diamond_from(f);
    s.fourfold_name = f.is_string() ? f.get<std::string>() : "custom";
    const json& c = j.at("center");
    if (!(c.is_string() && c.get<std::string>() == "unknown")) {
        s.center = diamond_from(c);
        s.center_name = c.is_string() ? c.get<std::string>() : "custom";
    }
    if (j.contains("flopped") && !j.at("flopped").is_null())
        s.flopped = diamond_from(j.at("flopped"));
    return s;
}

} // namespace detail

/// {"left": {"fourfold": ..., "center": ...}, "right": {...}, "flop_bridge": true}
/// Diamonds are preset names, surface specs, {"surface": spec} or {"dim": d, "h": rows}.
inline DiagramSpec parse_diagram(const json& j)
{
    DiagramSpec d;
    d.left = detail::side_from(j.at("left"));
    d.right = detail::side_from(j.at("right"));
    d.flop_bridge = j.value("flop_bridge", true);
    return d;
}

inline DiagramSpec load_diagram(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DatasetMissing("cannot open diagram file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what(), e.byte);
    }
    return parse_diagram(j);
}

} // namespace nlquad

// nlquad: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 table mismatch, 3 parse or I/O error.

#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include <nlquad/nlquad.hpp>

using namespace nlquad;

namespace {

enum Exit { ok = 0, domain_error = 1, mismatch = 2, parse_or_io = 3 };

struct Globals
{
    std::string format = "text";
    std::string dataset;
};

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

// Generic record output for json/csv/md; `text` is used for the text format.
void emit(const Globals& g, const json& record, const std::string& text)
{
    if (g.format == "json") {
        std::cout << record.dump(2) << "\n";
        return;
    }
    if (g.format == "text") {
        std::cout << text;
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(record, "", kv);
    if (g.format == "csv") {
        std::cout << "field,value\n";
        for (const auto& [k, v] : kv)
            std::cout << k << ",\"" << v << "\"\n";
    } else {
        std::cout << "| field | value |\n|---|---|\n";
        for (const auto& [k, v] : kv)
            std::cout << "| " << k << " | " << v << " |\n";
    }
}

std::string surface_argument(const std::string& surface, const std::string& abs)
{
    if (!surface.empty() && !abs.empty())
        throw ParseError("give either --surface or --abs, not both", 0);
    if (!abs.empty())
        return abs.starts_with("abs:") ? abs : "abs:" + abs;
    if (surface.empty())
        throw ParseError("missing --surface or --abs", 0);
    return surface;
}

std::string invariants_text(const SurfaceInvariants& s)
{
    std::ostringstream os;
    os << s.label << "\n"
       << "  degree      " << s.degree << "\n"
       << "  sect_genus  " << s.sect_genus << "\n"
       << "  H.K         " << s.HK() << "\n"
       << "  K^2         " << s.K2 << "\n"
       << "  chi(O)      " << s.chi_O << "\n"
       << "  chi_top     " << s.chi_top << "\n"
       << "  h0(O(H))    " << s.h0_H << "\n"
       << "  nodes       " << s.nodes << "\n"
       << "  span        P^" << s.span_dimension() << (s.linearly_normal ? "" : " (not linearly normal)") << "\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact invariants, lattices and parameter counts for surfaces in complete intersections of "
                 "three quadrics in P^7"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "md"}))
        ->capture_default_str();
    app.add_option("--dataset", g.dataset, "Dataset path (default: $NLQUAD_DATASET, then the bundled file)");

    std::string surface, abs, ci_text = "2,2,2";

    auto* inv = app.add_subcommand("invariants", "Invariants of a surface spec");
    inv->add_option("--surface", surface, "Surface spec, e.g. \"5;7,0,1\" or \"4;3,1+ext-proj\"");
    inv->add_option("--abs", abs, "Abstract invariants, e.g. deg=13,g=8,K2=-1,chiO=2");

    auto* lat = app.add_subcommand("lattice", "Fourfold lattice <h^2, S>, discriminant and mod-16 class");
    lat->add_option("--ci", ci_text, "Complete-intersection type")->capture_default_str();
    lat->add_option("--surface", surface, "Surface spec");
    lat->add_option("--abs", abs, "Abstract invariants");
    bool picard = false;
    lat->add_flag("--picard", picard, "Also print the surface lattice <H, K>");

    auto* self = app.add_subcommand("selfint", "Self-intersection of S in a complete-intersection fourfold");
    self->add_option("--ci", ci_text, "Complete-intersection type")->capture_default_str();
    self->add_option("--surface", surface, "Surface spec");
    self->add_option("--abs", abs, "Abstract invariants");

    auto* count = app.add_subcommand("count", "Parameter count and codimension bound");
    integer h0nsx = -1;
    std::string table_row;
    count->add_option("--surface", surface, "Surface spec");
    count->add_option("--abs", abs, "Abstract invariants");
    count->add_option("--h0nsx", h0nsx, "h0(N_{S/X})");
    count->add_option("--table-row", table_row, "Dataset row id, e.g. T1-10");

    auto* ledger = app.add_subcommand("ledger", "Solve a Hodge-diamond diagram");
    std::string diagram;
    ledger->add_option("--diagram", diagram, "Diagram JSON file")->required();

    auto* search = app.add_subcommand("search", "Enumerate plane models and build the discriminant atlas");
    SearchBounds bounds;
    integer det = 0, up_to = 110;
    bool gaps = false, no_genus_bound = false;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    search->add_option("--max-a", bounds.max_a)->capture_default_str();
    search->add_option("--max-points", bounds.max_points)->capture_default_str();
    search->add_option("--max-mult", bounds.max_mult)->capture_default_str();
    search->add_option("--min-h0-is2", bounds.min_h0_IS2)->capture_default_str();
    search->add_option("--max-codim", bounds.max_codim)->capture_default_str();
    search->add_option("--catalogue-degree", bounds.catalogue_degree)->capture_default_str();
    search->add_flag("--no-genus-bound", no_genus_bound, "Skip the Castelnuovo genus filter");
    search->add_option("--det", det, "Only print this discriminant bucket");
    search->add_flag("--gaps", gaps, "Report admissible discriminants with empty buckets");
    search->add_option("--up-to", up_to, "Upper end of the gap scan")->capture_default_str();
    search->add_option("--workers", workers, "Worker threads")->capture_default_str();

    auto* tables = app.add_subcommand("tables", "Recompute the bundled tables and diff against the dataset");
    int which = 0;
    tables->add_option("--table", which, "Table number 1-4 (default: all)")->check(CLI::Range(1, 4));

    auto* desc = app.add_subcommand("describe", "One-screen report for a surface spec");
    std::string desc_spec;
    desc->add_option("spec", desc_spec, "Surface spec")->required();
    desc->add_option("--ci", ci_text, "Complete-intersection type")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_or_io;
    }

    try {
        if (*inv) {
            const auto s = resolve(surface_argument(surface, abs));
            emit(g, s, invariants_text(s));
        } else if (*lat) {
            const auto ci = parse_ci(ci_text);
            const auto s = resolve(surface_argument(surface, abs));
            const auto l = fourfold_lattice(ci, s);
            const integer d = discriminant(l);
            const auto m = mod16_class(d);
            json j = {{"ci", ci}, {"surface", s}, {"lattice", l}, {"discriminant", d}, {"mod16", m},
                      {"degenerate", is_degenerate(l)}, {"node_rule_used", s.nodes > 0}};
            std::ostringstream os;
            os << to_string(l) << "  discriminant " << d << "  mod 16 = " << m.residue
               << (m.admissible ? " (admissible)" : " (not admissible)") << (s.nodes ? "  [node rule]" : "") << "\n";
            if (picard) {
                const auto p = surface_picard_matrix(s);
                j["picard"] = p;
                j["picard_discriminant"] = discriminant(p);
                os << "<H,K> " << to_string(p) << "  det " << p.determinant() << (is_degenerate(p) ? "  (degenerate)" : "")
                   << "\n";
            }
            emit(g, j, os.str());
        } else if (*self) {
            const auto ci = parse_ci(ci_text);
            const auto s = resolve(surface_argument(surface, abs));
            const auto r = self_intersection(ci, s);
            std::ostringstream os;
            os << r.value << "  (coefficients cH2=" << r.coefficients.cH2 << ", cHK=" << r.coefficients.cHK << ")"
               << (r.node_rule_used ? "  [node rule +2 per node]" : "") << "\n";
            emit(g, json{{"ci", ci}, {"surface", s}, {"self_intersection", r}}, os.str());
        } else if (*count) {
            std::string spec;
            if (!table_row.empty()) {
                const Dataset data = load_dataset(g.dataset);
                const TableRow& row = data.row(table_row);
                spec = row.surface_spec;
                if (h0nsx < 0)
                    h0nsx = row.h0_NSX;
            } else {
                spec = surface_argument(surface, abs);
            }
            if (h0nsx < 0)
                throw ParseError("--h0nsx is required unless --table-row is given", 0);
            const auto s = resolve(spec);
            const auto p = codimension_bound(s, h0nsx);
            const integer chi = chi_NSX_lower(s);
            std::ostringstream os;
            os << s.label << "\n"
               << "  h0(I_S(2))    " << p.h0_IS2 << "\n"
               << "  h0(N_S/P7)    " << p.h0_N << "\n"
               << "  h0(N_S/X)     " << p.h0_NSX << " (input)\n"
               << "  dim G         " << p.grass_dim << "\n"
               << "  codim bound   " << p.codim_bound << "\n"
               << "  chi estimate  " << chi << " (Euler characteristic of N_S/X, not h0)\n"
               << "  flags         assumes-vanishing" << (p.fitted_node_rule ? ", fitted-node-rule" : "") << "\n";
            emit(g, json{{"surface", s}, {"counts", p}, {"chi_NSX_lower", chi}}, os.str());
        } else if (*ledger) {
            const DiagramSpec spec = load_diagram(diagram);
            const DiagramSolution sol = solve_diagram(spec);
            const Classification c = classify(sol.invariants);
            const auto& d = sol.invariants;
            std::ostringstream os;
            os << "unknown centre on the " << (sol.unknown_on_left ? "left" : "right") << "\n"
               << to_string(sol.unknown) << "p_g " << d.pg << ", q " << d.q << ", h11 " << d.h11 << ", b2 " << d.b2
               << ", chi(O) " << d.chi_O << ", chi_top " << d.chi_top << ", K^2 " << d.K2 << "\n";
            if (c.castelnuovo_type_I)
                os << "Castelnuovo type I (K^2 = 3p_g - 7)\n";
            if (c.non_minimal)
                os << "non-minimal (K^2 < 2p_g - 4); minimal model K^2 " << *c.minimal_model_K2 << "\n";
            if (!c.castelnuovo_type_I && !c.non_minimal)
                os << "no classification flags\n";
            emit(g,
                 json{{"unknown", sol.unknown},
                      {"unknown_on_left", sol.unknown_on_left},
                      {"flop_bridge", spec.flop_bridge},
                      {"invariants", d},
                      {"classification", c}},
                 os.str());
        } else if (*search) {
            bounds.require_genus_bound = !no_genus_bound;
            Atlas atlas = enumerate(bounds, workers);
            if (gaps) {
                const auto report = gap_report(atlas, up_to);
                std::ostringstream os;
                os << "bounds: " << to_string(bounds) << "\n"
                   << "admissible discriminants in [16, " << up_to << "] with no model in these bounds:";
                for (integer x : report)
                    os << " " << x;
                os << "\n";
                emit(g, json{{"bounds", bounds}, {"up_to", up_to}, {"gaps", report}}, os.str());
                return ok;
            }
            if (det != 0)
                std::erase_if(atlas.entries, [&](const AtlasEntry& e) { return e.discriminant != det; });
            if (g.format == "json")
                std::cout << json(atlas).dump(2) << "\n";
            else if (g.format == "md")
                std::cout << atlas_markdown(atlas);
            else if (g.format == "csv")
                std::cout << atlas_csv(atlas);
            else
                std::cout << atlas_text(atlas);
        } else if (*tables) {
            const Dataset data = load_dataset(g.dataset);
            bool all_ok = true;
            json reports = json::array();
            for (int t = 1; t <= 4; ++t) {
                if (which != 0 && t != which)
                    continue;
                const TableReport r = reproduce_tables(data, t);
                all_ok = all_ok && r.ok();
                if (g.format == "json")
                    reports.push_back(r);
                else if (g.format == "md")
                    std::cout << "Table " << t << "\n\n" << table_markdown(r) << "\n";
                else if (g.format == "csv")
                    std::cout << table_csv(r);
                else
                    std::cout << table_text(r);
            }
            if (g.format == "json")
                std::cout << reports.dump(2) << "\n";
            return all_ok ? ok : mismatch;
        } else if (*desc) {
            const auto ci = parse_ci(ci_text);
            const auto d = describe_surface(desc_spec, ci);
            emit(g, d, describe(desc_spec, ci));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_or_io;
    } catch (const DatasetMissing& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return parse_or_io;
    } catch (const RowMismatch& e) {
        std::cerr << "mismatch: " << e.what() << "\n";
        return mismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const json::exception& e) {
        std::cerr << "json error: " << e.what() << "\n";
        return parse_or_io;
    }
    return ok;
}

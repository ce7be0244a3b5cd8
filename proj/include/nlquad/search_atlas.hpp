#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "ci_chow.hpp"
#include "errors.hpp"
#include "moduli_count.hpp"
#include "nl_lattice.hpp"
#include "picard_lattice.hpp"
#include "surface_models.hpp"

namespace nlquad {

struct SearchBounds
{
    integer max_a = 8;
    integer max_points = 13;
    integer max_mult = 3;
    integer min_h0_IS2 = 7;
    integer max_codim = 7;
    bool require_genus_bound = true;
    integer catalogue_degree = default_catalogue_degree;

    void validate() const
    {
        if (max_a < 1 || max_points < 1 || max_mult < 1 || min_h0_IS2 < 1 || max_codim < 1 || catalogue_degree < 1)
            throw InvalidInvariants("search bounds must all be >= 1");
    }

    friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

inline std::string to_string(const SearchBounds& b)
{
    return "max_a=" + std::to_string(b.max_a) + " max_points=" + std::to_string(b.max_points)
           + " max_mult=" + std::to_string(b.max_mult) + " min_h0_IS2=" + std::to_string(b.min_h0_IS2)
           + " max_codim=" + std::to_string(b.max_codim)
           + " genus_bound=" + (b.require_genus_bound ? "on" : "off")
           + " catalogue_degree=" + std::to_string(b.catalogue_degree);
}

/// Castelnuovo's bound for a non-degenerate irreducible curve of degree d in P^n.
/// Returns -1 when no such curve exists.
inline integer castelnuovo_bound(integer d, integer n)
{
    if (n <= 1)
        return d == 1 ? 0 : -1;
    if (d < n)
        return -1;
    const integer m = (d - 1) / (n - 1);
    const integer eps = d - 1 - m * (n - 1);
    return m * (m - 1) * (n - 1) / 2 + m * eps;
}

struct AtlasEntry
{
    PlaneModel model;
    SurfaceInvariants invariants;
    RankTwoLattice lattice;
    integer discriminant = 0;
    integer codim_lo = 0;
    integer codim_hi = 0;
    bool below_expected = false; // 0 < disc < 16

    friend bool operator==(const AtlasEntry&, const AtlasEntry&) = default;
};

struct Atlas
{
    SearchBounds bounds;
    std::vector<AtlasEntry> entries;

    std::map<integer, std::vector<const AtlasEntry*>> buckets() const
    {
        std::map<integer, std::vector<const AtlasEntry*>> b;
        for (const auto& e : entries)
            b[e.discriminant].push_back(&e);
        return b;
    }

    bool attains(integer disc) const
    {
        return std::any_of(entries.begin(), entries.end(), [&](const AtlasEntry& e) { return e.discriminant == disc; });
    }

    friend bool operator==(const Atlas&, const Atlas&) = default;
};

/// Evaluates a single candidate against the filters; nullopt if rejected.
inline std::optional<AtlasEntry> evaluate_candidate(const PlaneModel& m, const SearchBounds& b)
{
    SurfaceInvariants s;
    integer q = 0;
    try {
        s = invariants_unclamped(m, b.catalogue_degree);
        if (s.h0_H < 3 || s.h0_H > 8)
            return std::nullopt;
        if (b.require_genus_bound && (s.sect_genus < 0 || s.sect_genus > castelnuovo_bound(s.degree, s.h0_H - 2)))
            return std::nullopt;
        q = h0_quadrics(s);
    } catch (const Error&) {
        return std::nullopt; // not nef, degenerate, or no quadrics at all
    }
    if (q < b.min_h0_IS2)
        return std::nullopt;

    AtlasEntry e;
    e.model = m;
    e.invariants = s;
    e.lattice = fourfold_lattice(three_quadrics(), s);
    e.discriminant = discriminant(e.lattice);
    if (e.discriminant <= 0)
        return std::nullopt;
    // h0(N_{S/X}) is unknown for a new model: take the range {0, max(0, chi estimate)}.
    const ParameterCount base = assemble_parameter_count(q, h0_normal_bundle(s), 0);
    e.codim_lo = base.codim_bound;
    e.codim_hi = base.codim_bound + std::max<integer>(0, chi_NSX_lower(s));
    if (e.codim_hi < 0 || e.codim_lo > b.max_codim)
        return std::nullopt;
    e.below_expected = e.discriminant < 16;
    return e;
}

namespace detail {

inline void fill_counts(std::vector<PlaneModel>& out, integer a, std::vector<integer>& counts, std::size_t i,
                        integer remaining)
{
    if (i == counts.size()) {
        out.push_back({a, counts});
        return;
    }
    for (integer c = 0; c <= remaining; ++c) {
        counts[i] = c;
        fill_counts(out, a, counts, i + 1, remaining - c);
    }
    counts[i] = 0;
}

} // namespace detail

/// Every (a; n_1..n_max_mult) with a <= max_a and sum n_i <= max_points.
inline std::vector<PlaneModel> candidate_grid(const SearchBounds& b)
{
    std::vector<PlaneModel> out;
    std::vector<integer> counts(static_cast<std::size_t>(b.max_mult), 0);
    for (integer a = 1; a <= b.max_a; ++a)
        detail::fill_counts(out, a, counts, 0, b.max_points);
    return out;
}

inline bool atlas_order(const AtlasEntry& x, const AtlasEntry& y)
{
    return std::tie(x.discriminant, x.model.a, x.model.point_counts)
           < std::tie(y.discriminant, y.model.a, y.model.point_counts);
}

/// Parallel over the candidate grid; the result is sorted by
/// (discriminant, a, counts) and does not depend on `workers`.
inline Atlas enumerate(const SearchBounds& bounds, unsigned workers = 1)
{
    bounds.validate();
    const std::vector<PlaneModel> grid = candidate_grid(bounds);
    std::vector<std::optional<AtlasEntry>> results(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
            results[i] = evaluate_candidate(grid[i], bounds);
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    Atlas atlas{bounds, {}};
    for (auto& r : results)
        if (r)
            atlas.entries.push_back(std::move(*r));
    std::sort(atlas.entries.begin(), atlas.entries.end(), atlas_order);
    return atlas;
}

/// Admissible discriminants in [16, up_to] with no atlas entry.
inline std::vector<integer> gap_report(const Atlas& atlas, integer up_to)
{
    std::vector<integer> gaps;
    for (integer d = 16; d <= up_to; ++d)
        if (mod16_class(d).admissible && !atlas.attains(d))
            gaps.push_back(d);
    return gaps;
}

} // namespace nlquad

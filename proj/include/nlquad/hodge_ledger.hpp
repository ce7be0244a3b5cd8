#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "surface_models.hpp"

namespace nlquad {

class HodgeDiamond
{
public:
    HodgeDiamond() : HodgeDiamond(0) {}

    explicit HodgeDiamond(int dim) : dim_(dim)
    {
        if (dim != 0 && dim != 1 && dim != 2 && dim != 4)
            throw DimensionMismatch("Hodge diamonds are supported in dimension 0, 1, 2, 4; got " + std::to_string(dim));
        h_.assign(static_cast<std::size_t>((dim + 1) * (dim + 1)), 0);
    }

    /// rows[p][q] = h^{p,q}; validated.
    static HodgeDiamond from_rows(const std::vector<std::vector<integer>>& rows)
    {
        const int dim = static_cast<int>(rows.size()) - 1;
        HodgeDiamond d(dim);
        for (int p = 0; p <= dim; ++p) {
            if (static_cast<int>(rows[p].size()) != dim + 1)
                throw DimensionMismatch("Hodge table must be square");
            for (int q = 0; q <= dim; ++q)
                d.set(p, q, rows[p][q]);
        }
        d.validate();
        return d;
    }

    int dim() const noexcept { return dim_; }

    integer at(int p, int q) const
    {
        if (p < 0 || q < 0 || p > dim_ || q > dim_)
            return 0;
        return h_[index(p, q)];
    }

    void set(int p, int q, integer v) { h_.at(index(p, q)) = v; }

    /// Sets h^{p,q} together with its conjugate and Serre-dual entries.
    void set_symmetric(int p, int q, integer v)
    {
        set(p, q, v);
        set(q, p, v);
        set(dim_ - p, dim_ - q, v);
        set(dim_ - q, dim_ - p, v);
    }

    std::vector<std::vector<integer>> rows() const
    {
        std::vector<std::vector<integer>> r(dim_ + 1, std::vector<integer>(dim_ + 1));
        for (int p = 0; p <= dim_; ++p)
            for (int q = 0; q <= dim_; ++q)
                r[p][q] = at(p, q);
        return r;
    }

    integer betti(int k) const
    {
        integer b = 0;
        for (int p = 0; p <= k; ++p)
            b = checked::add(b, at(p, k - p));
        return b;
    }

    integer euler() const
    {
        integer e = 0;
        for (int k = 0; k <= 2 * dim_; ++k)
            e = checked::add(e, (k % 2 ? -1 : 1) * betti(k));
        return e;
    }

    void validate() const
    {
        for (int p = 0; p <= dim_; ++p)
            for (int q = 0; q <= dim_; ++q) {
                const integer v = at(p, q);
                if (v < 0)
                    throw Inconsistent("negative Hodge number h" + std::to_string(p) + std::to_string(q));
                if (v != at(q, p))
                    throw Inconsistent("h^{p,q} != h^{q,p} at (" + std::to_string(p) + "," + std::to_string(q) + ")");
                if (v != at(dim_ - p, dim_ - q))
                    throw Inconsistent("Serre symmetry fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
            }
        if (at(0, 0) != 1)
            throw Inconsistent("h^{0,0} must be 1");
    }

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
    std::size_t index(int p, int q) const
    {
        if (p < 0 || q < 0 || p > dim_ || q > dim_)
            throw DimensionMismatch("Hodge index out of range");
        return static_cast<std::size_t>(p * (dim_ + 1) + q);
    }

    int dim_;
    std::vector<integer> h_;
};

inline std::string to_string(const HodgeDiamond& d)
{
    // One line per total degree, h^{k,0} first.
    std::string s;
    for (int k = 0; k <= 2 * d.dim(); ++k) {
        std::string line;
        for (int p = std::min(k, d.dim()); p >= std::max(0, k - d.dim()); --p)
            line += (line.empty() ? "" : " ") + std::to_string(d.at(p, k - p));
        s += std::string(static_cast<std::size_t>(2 * std::abs(d.dim() - k)), ' ') + line + "\n";
    }
    return s;
}

/// h^{p,q} shifted by a Tate twist: entries land at (p+i, q+i) in dimension dim.
inline void add_shifted(HodgeDiamond& target, const HodgeDiamond& src, int shift, integer sign = 1)
{
    for (int p = 0; p <= src.dim(); ++p)
        for (int q = 0; q <= src.dim(); ++q) {
            const integer v = src.at(p, q);
            if (v == 0)
                continue;
            if (p + shift > target.dim() || q + shift > target.dim())
                throw DimensionMismatch("shifted diamond does not fit");
            target.set(p + shift, q + shift, checked::add(target.at(p + shift, q + shift), sign * v));
        }
}

/// h(Bl_Z Y) = h(Y) + sum_{i=1}^{codim-1} h(Z)(-i).
inline HodgeDiamond blowup(const HodgeDiamond& y, const HodgeDiamond& center)
{
    if (center.dim() >= y.dim())
        throw DimensionMismatch("blow-up centre must have smaller dimension");
    HodgeDiamond out = y;
    for (int i = 1; i < y.dim() - center.dim(); ++i)
        add_shifted(out, center, i);
    out.validate();
    return out;
}

namespace detail {

inline HodgeDiamond diagonal(int dim, std::initializer_list<integer> diag)
{
    HodgeDiamond d(dim);
    int p = 0;
    for (integer v : diag)
        d.set(p, p, v), ++p;
    return d;
}

} // namespace detail

inline const std::vector<std::string>& preset_names()
{
    static const std::vector<std::string> names = {"point", "P2", "K3", "P4", "X222", "cubic4", "ci22"};
    return names;
}

inline HodgeDiamond preset(const std::string& name)
{
    if (name == "point")
        return detail::diagonal(0, {1});
    if (name == "P2")
        return detail::diagonal(2, {1, 1, 1});
    if (name == "K3") {
        HodgeDiamond d = detail::diagonal(2, {1, 20, 1});
        d.set_symmetric(2, 0, 1);
        return d;
    }
    if (name == "P4")
        return detail::diagonal(4, {1, 1, 1, 1, 1});
    if (name == "X222") {
        HodgeDiamond d = detail::diagonal(4, {1, 1, 38, 1, 1});
        d.set_symmetric(3, 1, 3);
        return d;
    }
    if (name == "cubic4") {
        HodgeDiamond d = detail::diagonal(4, {1, 1, 21, 1, 1});
        d.set_symmetric(3, 1, 1);
        return d;
    }
    if (name == "ci22")
        return detail::diagonal(4, {1, 1, 8, 1, 1});
    throw UnknownPreset("unknown Hodge preset '" + name + "'");
}

/// Diamond of a smooth surface with q = 0: p_g = chi_O - 1, b_2 = chi_top - 2.
inline HodgeDiamond surface_diamond(const SurfaceInvariants& s)
{
    s.validate();
    const integer pg = s.chi_O - 1;
    const integer h11 = s.chi_top - 2 - 2 * pg;
    if (pg < 0 || h11 < 0)
        throw Inconsistent("invariants of " + s.label + " give a negative Hodge number");
    HodgeDiamond d = detail::diagonal(2, {1, h11, 1});
    d.set_symmetric(2, 0, pg);
    return d;
}

/// One side of a two-sided blow-up diagram: a fourfold and the surface blown up in it.
/// An empty centre is the unknown.
struct DiagramSide
{
    HodgeDiamond fourfold;
    std::optional<HodgeDiamond> center;
    std::optional<HodgeDiamond> flopped; // surface T' or R' produced by the flop
    std::string fourfold_name;
    std::string center_name;
};

struct DiagramSpec
{
    DiagramSide left;
    DiagramSide right;
    bool flop_bridge = true;
};

struct SurfaceHodgeData
{
    integer pg = 0;
    integer q = 0;
    integer h11 = 0;
    integer b2 = 0;
    integer chi_O = 0;
    integer chi_top = 0;
    integer K2 = 0;

    friend bool operator==(const SurfaceHodgeData&, const SurfaceHodgeData&) = default;
};

inline SurfaceHodgeData derive(const HodgeDiamond& u)
{
    if (u.dim() != 2)
        throw DimensionMismatch("derived invariants need a surface diamond");
    SurfaceHodgeData d;
    d.pg = u.at(2, 0);
    d.q = u.at(1, 0);
    d.h11 = u.at(1, 1);
    d.b2 = 2 * d.pg + d.h11;
    d.chi_O = 1 - d.q + d.pg;
    d.chi_top = 2 - 4 * d.q + d.b2;
    d.K2 = 12 * d.chi_O - d.chi_top;
    return d;
}

struct DiagramSolution
{
    HodgeDiamond unknown;
    bool unknown_on_left = false;
    SurfaceHodgeData invariants;
};

/// Solves h(L) + h(S)(-1) [+ h(T')(-1)] = h(R) + h(U)(-1) [+ h(R')(-1)]
/// for the one missing centre. With the flop bridge T' and R' cancel.
inline DiagramSolution solve_diagram(const DiagramSpec& spec)
{
    const bool left_unknown = !spec.left.center.has_value();
    const bool right_unknown = !spec.right.center.has_value();
    if (left_unknown && right_unknown)
        throw Underdetermined("both centres are unknown");
    if (!left_unknown && !right_unknown)
        throw Underdetermined("diagram has no unknown centre");
    if (spec.left.fourfold.dim() != 4 || spec.right.fourfold.dim() != 4)
        throw DimensionMismatch("diagram fourfolds must have dimension 4");

    const DiagramSide& known = left_unknown ? spec.right : spec.left;
    const DiagramSide& solve = left_unknown ? spec.left : spec.right;
    if (known.center->dim() != 2)
        throw DimensionMismatch("diagram centres must be surfaces");

    // Work in the fourfold's table: h(solve fourfold) + U(-1) = h(known fourfold) + S(-1) (+ flop terms).
    HodgeDiamond acc(4);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q)
            acc.set(p, q, checked::sub(known.fourfold.at(p, q), solve.fourfold.at(p, q)));
    add_shifted(acc, *known.center, 1);
    if (!spec.flop_bridge) {
        if (!known.flopped || !solve.flopped)
            throw Underdetermined("without the flop bridge both flopped surfaces must be given");
        add_shifted(acc, *known.flopped, 1);
        add_shifted(acc, *solve.flopped, 1, -1);
    }

    HodgeDiamond u(2);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            const integer v = acc.at(p, q);
            const bool inside = p >= 1 && q >= 1 && p <= 3 && q <= 3;
            if (!inside && v != 0)
                throw Inconsistent("diagram leaves h" + std::to_string(p) + std::to_string(q) + " = "
                                   + std::to_string(v) + " outside the shifted surface");
            if (inside) {
                if (v < 0)
                    throw Inconsistent("solved h" + std::to_string(p - 1) + std::to_string(q - 1) + " = "
                                       + std::to_string(v) + " is negative");
                u.set(p - 1, q - 1, v);
            }
        }
    u.validate();
    return {u, left_unknown, derive(u)};
}

struct Classification
{
    bool castelnuovo_type_I = false;
    bool non_minimal = false;
    std::optional<integer> minimal_model_K2;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// K^2 = 3p_g - 7 is the Castelnuovo equality; K^2 < 2p_g - 4 violates
/// Noether's inequality for minimal surfaces of general type.
inline Classification classify(const SurfaceHodgeData& d)
{
    Classification c;
    c.castelnuovo_type_I = d.pg >= 3 && d.K2 == 3 * d.pg - 7;
    if (d.pg >= 2 && d.q == 0 && d.K2 >= 1 && d.K2 < 2 * d.pg - 4) {
        c.non_minimal = true;
        c.minimal_model_K2 = std::max(2 * d.pg - 4, 3 * d.pg - 7);
    }
    return c;
}

} // namespace nlquad

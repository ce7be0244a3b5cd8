#pragma once

// Bilinear algebra on Pic(Bl_k P^2) with basis (L; E_1..E_k).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nlquad {

/// A class D = d L - sum m_i E_i. `mults` stores the m_i, so an exceptional
/// class E_i has m_i = -1.
struct DivisorClass
{
    integer plane_degree = 0;
    std::vector<integer> mults;

    std::size_t points() const noexcept { return mults.size(); }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

inline std::string to_string(const DivisorClass& d)
{
    std::string s = "(" + std::to_string(d.plane_degree) + ";";
    for (std::size_t i = 0; i < d.mults.size(); ++i)
        s += (i ? "," : " ") + std::to_string(d.mults[i]);
    return s + ")";
}

inline DivisorClass line_class(std::size_t k)
{
    return {1, std::vector<integer>(k, 0)};
}

inline DivisorClass exceptional_class(std::size_t k, std::size_t i)
{
    DivisorClass e{0, std::vector<integer>(k, 0)};
    e.mults.at(i) = -1;
    return e;
}

inline integer pair(const DivisorClass& a, const DivisorClass& b)
{
    if (a.points() != b.points())
        throw MismatchedLattice("cannot pair classes on Bl_" + std::to_string(a.points())
                                + " and Bl_" + std::to_string(b.points()));
    integer r = checked::mul(a.plane_degree, b.plane_degree);
    for (std::size_t i = 0; i < a.points(); ++i)
        r = checked::sub(r, checked::mul(a.mults[i], b.mults[i]));
    return r;
}

inline integer square(const DivisorClass& d) { return pair(d, d); }

/// K = -3L + sum E_i, i.e. plane degree -3 and every stored multiplicity -1.
inline DivisorClass canonical(std::size_t k)
{
    return {-3, std::vector<integer>(k, -1)};
}

inline DivisorClass operator+(DivisorClass a, const DivisorClass& b)
{
    if (a.points() != b.points())
        throw MismatchedLattice("cannot add classes on lattices of different rank");
    a.plane_degree = checked::add(a.plane_degree, b.plane_degree);
    for (std::size_t i = 0; i < a.points(); ++i)
        a.mults[i] = checked::add(a.mults[i], b.mults[i]);
    return a;
}

inline DivisorClass operator*(integer c, DivisorClass a)
{
    a.plane_degree = checked::mul(c, a.plane_degree);
    for (auto& m : a.mults)
        m = checked::mul(c, m);
    return a;
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b)
{
    return a + (-1) * b;
}

/// chi(O(D)) = 1 + D.(D - K)/2 on a rational surface.
inline integer riemann_roch_chi(const DivisorClass& d)
{
    const integer twice = pair(d, d - canonical(d.points()));
    if (twice % 2 != 0)
        throw ParityViolation("D.(D-K) is odd for " + to_string(d));
    return 1 + twice / 2;
}

/// Arithmetic genus 1 + (D^2 + D.K)/2.
inline integer adjunction_genus(const DivisorClass& d)
{
    const integer twice = checked::add(square(d), pair(d, canonical(d.points())));
    if (twice % 2 != 0)
        throw ParityViolation("D^2 + D.K is odd for " + to_string(d));
    return 1 + twice / 2;
}

namespace detail {

struct MinusOneShape
{
    integer degree;
    std::vector<integer> pattern; // nonzero stored multiplicities
};

// One representative per W(E_8)-type shape of (-1)-classes, up to plane degree 6.
inline const std::vector<MinusOneShape>& minus_one_shapes()
{
    static const std::vector<MinusOneShape> shapes = {
        {0, {-1}},
        {1, {1, 1}},
        {2, {1, 1, 1, 1, 1}},
        {3, {2, 1, 1, 1, 1, 1, 1}},
        {4, {2, 2, 2, 1, 1, 1, 1, 1}},
        {5, {2, 2, 2, 2, 2, 2, 1, 1}},
        {6, {3, 2, 2, 2, 2, 2, 2, 2}},
    };
    return shapes;
}

} // namespace detail

inline constexpr integer default_catalogue_degree = 6;

/// Every (-1)-class of the listed shapes with plane degree <= degree_bound,
/// sorted and de-duplicated.
inline std::vector<DivisorClass> neg_curve_catalogue(std::size_t k, integer degree_bound = default_catalogue_degree)
{
    std::vector<DivisorClass> out;
    for (const auto& shape : detail::minus_one_shapes()) {
        if (shape.degree > degree_bound || shape.pattern.size() > k)
            continue;
        std::vector<integer> slots(k, 0);
        std::copy(shape.pattern.begin(), shape.pattern.end(), slots.begin());
        std::sort(slots.begin(), slots.end());
        do {
            out.push_back({shape.degree, slots});
        } while (std::next_permutation(slots.begin(), slots.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Result of blowing down the catalogue (-1)-classes orthogonal to H.
/// `hyperplane` is H pulled back to the original lattice; since H.C = 0 for
/// every contracted C, all pairings with H are those of the image surface.
struct Normalized
{
    DivisorClass hyperplane;
    std::vector<DivisorClass> contracted;

    std::size_t original_points() const noexcept { return hyperplane.points(); }
    integer remaining_points() const noexcept
    {
        return static_cast<integer>(hyperplane.points()) - static_cast<integer>(contracted.size());
    }
    integer canonical_square() const noexcept { return 9 - remaining_points(); }
};

namespace detail {

// Points of H grouped by their stored multiplicity.
struct PointGroup
{
    integer mult;
    std::vector<std::size_t> indices;
};

inline std::vector<PointGroup> group_points(const DivisorClass& h)
{
    std::map<integer, std::vector<std::size_t>> by_mult;
    for (std::size_t i = 0; i < h.points(); ++i)
        by_mult[h.mults[i]].push_back(i);
    std::vector<PointGroup> groups;
    for (auto& [m, idx] : by_mult)
        groups.push_back({m, std::move(idx)});
    return groups;
}

// Walks every way of distributing the pattern values of a shape over the
// point groups. A distribution fixes H.C; classes are only materialized
// when H.C <= 0.
class OrthogonalScan
{
public:
    OrthogonalScan(const DivisorClass& h, const MinusOneShape& shape)
        : h_(h), shape_(shape), groups_(group_points(h))
    {
        std::map<integer, integer> counts;
        for (integer v : shape.pattern)
            ++counts[v];
        for (auto [v, c] : counts)
            values_.push_back({v, c});
        used_.assign(groups_.size(), 0);
        take_.assign(values_.size(), std::vector<integer>(groups_.size(), 0));
    }

    // Appends every class with H.C == 0 to `zero`; returns a class with
    // H.C < 0 if one exists (scan stops there).
    bool run(std::vector<DivisorClass>& zero, DivisorClass& negative)
    {
        zero_ = &zero;
        negative_ = &negative;
        found_negative_ = false;
        recurse_value(0, checked::mul(h_.plane_degree, shape_.degree));
        return !found_negative_;
    }

private:
    struct ValueCount { integer value; integer count; };

    void recurse_value(std::size_t vi, integer dot)
    {
        if (found_negative_)
            return;
        if (vi == values_.size()) {
            if (dot < 0) {
                found_negative_ = true;
                *negative_ = first_representative();
            } else if (dot == 0) {
                materialize();
            }
            return;
        }
        recurse_group(vi, 0, values_[vi].count, dot);
    }

    void recurse_group(std::size_t vi, std::size_t gi, integer remaining, integer dot)
    {
        if (found_negative_)
            return;
        if (gi == groups_.size()) {
            if (remaining == 0)
                recurse_value(vi + 1, dot);
            return;
        }
        const integer free = static_cast<integer>(groups_[gi].indices.size()) - used_[gi];
        for (integer x = 0; x <= std::min(free, remaining); ++x) {
            take_[vi][gi] = x;
            used_[gi] += x;
            const integer contribution = checked::mul(checked::mul(values_[vi].value, groups_[gi].mult), x);
            recurse_group(vi, gi + 1, remaining - x, checked::sub(dot, contribution));
            used_[gi] -= x;
            take_[vi][gi] = 0;
        }
    }

    DivisorClass first_representative() const
    {
        DivisorClass c{shape_.degree, std::vector<integer>(h_.points(), 0)};
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            std::size_t next = 0;
            for (std::size_t vi = 0; vi < values_.size(); ++vi)
                for (integer t = 0; t < take_[vi][gi]; ++t)
                    c.mults[groups_[gi].indices[next++]] = values_[vi].value;
        }
        return c;
    }

    // All concrete classes for the current distribution: within each group,
    // every arrangement of the chosen values over the group's points.
    void materialize()
    {
        std::vector<std::vector<integer>> per_group(groups_.size());
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            auto& slots = per_group[gi];
            slots.assign(groups_[gi].indices.size(), 0);
            std::size_t next = 0;
            for (std::size_t vi = 0; vi < values_.size(); ++vi)
                for (integer t = 0; t < take_[vi][gi]; ++t)
                    slots[next++] = values_[vi].value;
            std::sort(slots.begin(), slots.end());
        }
        emit(per_group, 0);
    }

    void emit(std::vector<std::vector<integer>>& per_group, std::size_t gi)
    {
        if (gi == per_group.size()) {
            DivisorClass c{shape_.degree, std::vector<integer>(h_.points(), 0)};
            for (std::size_t g = 0; g < per_group.size(); ++g)
                for (std::size_t j = 0; j < per_group[g].size(); ++j)
                    c.mults[groups_[g].indices[j]] = per_group[g][j];
            zero_->push_back(std::move(c));
            return;
        }
        auto& slots = per_group[gi];
        std::sort(slots.begin(), slots.end());
        do {
            emit(per_group, gi + 1);
        } while (std::next_permutation(slots.begin(), slots.end()));
    }

    const DivisorClass& h_;
    const MinusOneShape& shape_;
    std::vector<PointGroup> groups_;
    std::vector<ValueCount> values_;
    std::vector<integer> used_;
    std::vector<std::vector<integer>> take_;
    std::vector<DivisorClass>* zero_ = nullptr;
    DivisorClass* negative_ = nullptr;
    bool found_negative_ = false;
};

} // namespace detail

/// Catalogue classes C with H.C == 0, computed without enumerating the full
/// catalogue. Throws NotNef if some catalogue class has H.C < 0.
inline std::vector<DivisorClass> orthogonal_catalogue_classes(const DivisorClass& h,
                                                              integer degree_bound = default_catalogue_degree)
{
    std::vector<DivisorClass> zero;
    for (const auto& shape : detail::minus_one_shapes()) {
        if (shape.degree > degree_bound || shape.pattern.size() > h.points())
            continue;
        DivisorClass negative;
        detail::OrthogonalScan scan(h, shape);
        if (!scan.run(zero, negative))
            throw NotNef("H" + to_string(h) + " pairs to " + std::to_string(pair(h, negative))
                         + " with the (-1)-class " + to_string(negative));
    }
    std::sort(zero.begin(), zero.end());
    zero.erase(std::unique(zero.begin(), zero.end()), zero.end());
    return zero;
}

/// Blows down every catalogue (-1)-class orthogonal to H. For general points
/// the contracted classes are disjoint and no new H-orthogonal (-1)-curve
/// appears after blowing down, so a single pass reaches the fixed point.
inline Normalized normalize_contractions(const DivisorClass& h, integer degree_bound = default_catalogue_degree)
{
    Normalized n{h, orthogonal_catalogue_classes(h, degree_bound)};
    for (std::size_t i = 0; i < n.contracted.size(); ++i)
        for (std::size_t j = i + 1; j < n.contracted.size(); ++j)
            if (pair(n.contracted[i], n.contracted[j]) != 0)
                throw DegenerateModel("H" + to_string(h) + " contracts two meeting (-1)-classes "
                                      + to_string(n.contracted[i]) + " and " + to_string(n.contracted[j]));
    return n;
}

} // namespace nlquad

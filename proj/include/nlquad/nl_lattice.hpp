#pragma once

#include <string>

#include "ci_chow.hpp"
#include "errors.hpp"
#include "surface_models.hpp"

namespace nlquad {

enum class LatticeSide { FourfoldMiddle, SurfacePicard };

inline const char* to_string(LatticeSide side)
{
    return side == LatticeSide::FourfoldMiddle ? "fourfold" : "surface";
}

struct RankTwoLattice
{
    integer m11 = 0;
    integer m12 = 0;
    integer m22 = 0;
    LatticeSide side = LatticeSide::FourfoldMiddle;

    integer determinant() const { return checked::sub(checked::mul(m11, m22), checked::mul(m12, m12)); }

    friend bool operator==(const RankTwoLattice&, const RankTwoLattice&) = default;
};

inline std::string to_string(const RankTwoLattice& l)
{
    return "[[" + std::to_string(l.m11) + "," + std::to_string(l.m12) + "],[" + std::to_string(l.m12) + ","
           + std::to_string(l.m22) + "]]";
}

/// <h^2, S> on the middle cohomology of the fourfold.
inline RankTwoLattice fourfold_lattice(const CompleteIntersectionType& ci, const SurfaceInvariants& s,
                                       const NodeRules& rules = {})
{
    return {ci.product(), s.degree, self_intersection(ci, s, rules).value, LatticeSide::FourfoldMiddle};
}

/// <H, K> on the surface.
inline RankTwoLattice surface_picard_matrix(const SurfaceInvariants& s)
{
    return {s.degree, s.HK(), s.K2, LatticeSide::SurfacePicard};
}

/// det on the fourfold side, -det on the surface side. Never clamped.
inline integer discriminant(const RankTwoLattice& l)
{
    const integer d = l.determinant();
    return l.side == LatticeSide::FourfoldMiddle ? d : -d;
}

inline bool is_degenerate(const RankTwoLattice& l) { return l.determinant() == 0; }

inline bool has_positive_discriminant(const RankTwoLattice& l) { return discriminant(l) > 0; }

struct Mod16Class
{
    integer residue = 0;
    bool admissible = false;

    friend bool operator==(const Mod16Class&, const Mod16Class&) = default;
};

inline Mod16Class mod16_class(integer disc)
{
    const integer r = ((disc % 16) + 16) % 16;
    return {r, r == 0 || r == 7 || r == 12 || r == 15};
}

} // namespace nlquad

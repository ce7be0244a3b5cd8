#pragma once

// Parameter count for surfaces S in P^7 inside complete intersections of
// three quadrics. Cohomology is replaced by Euler characteristics, so every
// count assumes the higher cohomology vanishes.

#include <string>

#include "errors.hpp"
#include "surface_models.hpp"

namespace nlquad {

/// dim of the Hilbert scheme of (2,2,2) complete intersections in P^7.
inline constexpr integer three_quadrics_moduli = 99;
/// h^0(O_P7(2)).
inline constexpr integer quadrics_in_p7 = 36;

/// chi(O_S(H)) = chi_O + (H^2 - H.K)/2
inline integer chi_hyperplane(const SurfaceInvariants& s)
{
    return checked::add(s.chi_O, checked::sub(s.degree, s.HK()) / 2);
}

/// chi(O_S(2H)) = chi_O + (4 H^2 - 2 H.K)/2
inline integer chi_twice_hyperplane(const SurfaceInvariants& s)
{
    return checked::add(s.chi_O, checked::sub(checked::mul(2, s.degree), s.HK()));
}

inline integer h0_quadrics(const SurfaceInvariants& s, const NodeRules& rules = {})
{
    s.validate();
    integer v = checked::sub(quadrics_in_p7, chi_twice_hyperplane(s));
    v = checked::add(v, checked::mul(rules.quadrics, s.nodes));
    if (v < 0)
        throw NegativeCount("h0(I_S(2)) = " + std::to_string(v) + " for " + s.label);
    return v;
}

/// chi(N_{S/P7}) from the Euler sequence: 8 chi(O(H)) - chi_O - (7 K^2 - 5 c2)/6.
inline integer normal_bundle_euler(integer chi_H, integer chi_O, integer K2, integer chi_top)
{
    const integer t = checked::sub(checked::mul(7, K2), checked::mul(5, chi_top));
    if (t % 6 != 0)
        throw DivisibilityViolation("7K^2 - 5chi_top = " + std::to_string(t) + " is not divisible by 6");
    return checked::sub(checked::sub(checked::mul(8, chi_H), chi_O), t / 6);
}

inline integer h0_normal_bundle(const SurfaceInvariants& s, const NodeRules& rules = {})
{
    s.validate();
    const integer v = normal_bundle_euler(chi_hyperplane(s), s.chi_O, s.K2, s.chi_top);
    return checked::add(v, checked::mul(rules.normal_bundle, s.nodes));
}

struct ParameterCount
{
    integer h0_IS2 = 0;
    integer h0_N = 0;
    integer h0_NSX = 0;
    integer grass_dim = 0;
    integer codim_bound = 0;
    bool assumes_vanishing = true;
    bool fitted_node_rule = false;

    friend bool operator==(const ParameterCount&, const ParameterCount&) = default;
};

inline ParameterCount assemble_parameter_count(integer h0_IS2, integer h0_N, integer h0_NSX)
{
    if (h0_IS2 < 3)
        throw NegativeCount("need at least three quadrics through S, got " + std::to_string(h0_IS2));
    if (h0_NSX < 0)
        throw NegativeCount("h0(N_{S/X}) must be >= 0");
    ParameterCount p;
    p.h0_IS2 = h0_IS2;
    p.h0_N = h0_N;
    p.h0_NSX = h0_NSX;
    p.grass_dim = checked::mul(3, h0_IS2 - 3);
    p.codim_bound = checked::sub(three_quadrics_moduli, checked::sub(checked::add(h0_N, p.grass_dim), h0_NSX));
    return p;
}

inline ParameterCount codimension_bound(const SurfaceInvariants& s, integer h0_NSX, const NodeRules& rules = {})
{
    ParameterCount p = assemble_parameter_count(h0_quadrics(s, rules), h0_normal_bundle(s, rules), h0_NSX);
    p.fitted_node_rule = s.nodes > 0;
    return p;
}

/// chi(N_{S/X}) estimate h0(N_{S/P7}) - 3 chi(O_S(2)). Not an h0.
inline integer chi_NSX_lower(const SurfaceInvariants& s, const NodeRules& rules = {})
{
    return checked::sub(h0_normal_bundle(s, rules), checked::mul(3, chi_twice_hyperplane(s)));
}

} // namespace nlquad

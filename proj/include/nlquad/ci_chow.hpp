#pragma once

// Self-intersection of a surface S inside a smooth fourfold complete
// intersection X in P^(r+4): c_2(N_{S/X}) expressed through H^2, H.K, K^2, c_2(T_S).

#include <array>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "surface_models.hpp"

namespace nlquad {

struct CompleteIntersectionType
{
    std::vector<integer> degrees;

    std::size_t r() const noexcept { return degrees.size(); }
    integer ambient_dim() const noexcept { return static_cast<integer>(degrees.size()) + 4; }

    integer degree_sum() const
    {
        integer s = 0;
        for (integer a : degrees)
            s = checked::add(s, a);
        return s;
    }

    /// Degree of X, i.e. (h^2)^2 on the fourfold.
    integer product() const
    {
        integer p = 1;
        for (integer a : degrees)
            p = checked::mul(p, a);
        return p;
    }

    void validate() const
    {
        if (degrees.empty())
            throw DegenerateModel("complete intersection needs at least one equation");
        for (integer a : degrees)
            if (a < 2)
                throw DegenerateModel("complete-intersection degrees must be >= 2");
    }

    bool is_three_quadrics() const { return degrees == std::vector<integer>{2, 2, 2}; }

    friend bool operator==(const CompleteIntersectionType&, const CompleteIntersectionType&) = default;
};

inline std::string to_string(const CompleteIntersectionType& ci)
{
    std::string s;
    for (std::size_t i = 0; i < ci.degrees.size(); ++i)
        s += (i ? "," : "") + std::to_string(ci.degrees[i]);
    return s;
}

inline CompleteIntersectionType three_quadrics() { return {{2, 2, 2}}; }

/// "2,2,2" or "3".
inline CompleteIntersectionType parse_ci(std::string_view text)
{
    CompleteIntersectionType ci;
    std::size_t pos = 0;
    while (true) {
        const std::size_t start = pos;
        integer v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = checked::add(checked::mul(v, 10), text[pos++] - '0');
        if (pos == start)
            throw ParseError("expected a degree", start);
        ci.degrees.push_back(v);
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw ParseError("expected ','", pos);
        ++pos;
    }
    ci.validate();
    return ci;
}

struct SelfIntersectionCoefficients
{
    integer cH2 = 0;
    integer cHK = 0;

    friend bool operator==(const SelfIntersectionCoefficients&, const SelfIntersectionCoefficients&) = default;
};

inline SelfIntersectionCoefficients closed_form_coefficients(const CompleteIntersectionType& ci)
{
    ci.validate();
    const integer r = static_cast<integer>(ci.r());
    const integer s = ci.degree_sum();
    integer pairs = 0;
    for (std::size_t i = 0; i < ci.r(); ++i)
        for (std::size_t j = i + 1; j < ci.r(); ++j)
            pairs = checked::add(pairs, checked::mul(ci.degrees[i], ci.degrees[j]));
    SelfIntersectionCoefficients c;
    c.cH2 = (r + 4) * (r + 5) / 2;
    c.cH2 = checked::sub(c.cH2, checked::mul(r + 5, s));
    c.cH2 = checked::add(c.cH2, checked::mul(s, s));
    c.cH2 = checked::sub(c.cH2, pairs);
    c.cHK = r + 5 - s;
    return c;
}

/// Element of the degree-truncated Chow ring of a surface with symbolic basis:
/// degree 1 over {H, K}, degree 2 over {H^2, HK, K^2, c2}.
class TruncatedClass
{
public:
    enum Deg2 { H2 = 0, HK = 1, K2 = 2, C2 = 3 };

    integer c0 = 0;
    std::array<integer, 2> c1{}; // H, K
    std::array<integer, 4> c2{}; // H^2, HK, K^2, c2(T_S)

    static TruncatedClass one() { TruncatedClass t; t.c0 = 1; return t; }
    static TruncatedClass hyperplane(integer k = 1) { TruncatedClass t; t.c1[0] = k; return t; }
    static TruncatedClass canonical(integer k = 1) { TruncatedClass t; t.c1[1] = k; return t; }
    static TruncatedClass second_chern(integer k = 1) { TruncatedClass t; t.c2[C2] = k; return t; }

    TruncatedClass degree1() const { TruncatedClass t; t.c1 = c1; return t; }
    TruncatedClass degree2() const { TruncatedClass t; t.c2 = c2; return t; }

    friend TruncatedClass operator+(TruncatedClass a, const TruncatedClass& b)
    {
        a.c0 = checked::add(a.c0, b.c0);
        for (std::size_t i = 0; i < 2; ++i)
            a.c1[i] = checked::add(a.c1[i], b.c1[i]);
        for (std::size_t i = 0; i < 4; ++i)
            a.c2[i] = checked::add(a.c2[i], b.c2[i]);
        return a;
    }

    friend TruncatedClass operator*(integer k, TruncatedClass a)
    {
        a.c0 = checked::mul(k, a.c0);
        for (auto& x : a.c1)
            x = checked::mul(k, x);
        for (auto& x : a.c2)
            x = checked::mul(k, x);
        return a;
    }

    friend TruncatedClass operator-(const TruncatedClass& a, const TruncatedClass& b) { return a + (-1) * b; }

    friend TruncatedClass operator*(const TruncatedClass& a, const TruncatedClass& b)
    {
        TruncatedClass r;
        r.c0 = checked::mul(a.c0, b.c0);
        for (std::size_t i = 0; i < 2; ++i)
            r.c1[i] = checked::add(checked::mul(a.c0, b.c1[i]), checked::mul(b.c0, a.c1[i]));
        for (std::size_t i = 0; i < 4; ++i)
            r.c2[i] = checked::add(checked::mul(a.c0, b.c2[i]), checked::mul(b.c0, a.c2[i]));
        // H.H, H.K + K.H, K.K
        r.c2[H2] = checked::add(r.c2[H2], checked::mul(a.c1[0], b.c1[0]));
        r.c2[HK] = checked::add(r.c2[HK], checked::add(checked::mul(a.c1[0], b.c1[1]), checked::mul(a.c1[1], b.c1[0])));
        r.c2[K2] = checked::add(r.c2[K2], checked::mul(a.c1[1], b.c1[1]));
        return r;
    }

    /// Inverse of a class with constant term 1: 1 - x + x^2.
    TruncatedClass inverse() const
    {
        if (c0 != 1)
            throw std::domain_error("TruncatedClass::inverse needs constant term 1");
        const TruncatedClass x = *this - one();
        return one() - x + x * x;
    }

    friend bool operator==(const TruncatedClass&, const TruncatedClass&) = default;
};

namespace detail {

inline SelfIntersectionCoefficients extract_coefficients(const TruncatedClass& c2N)
{
    // A correct derivation always lands on K^2 - c2(T_S) beyond the H terms.
    if (c2N.c2[TruncatedClass::K2] != 1 || c2N.c2[TruncatedClass::C2] != -1)
        throw std::logic_error("Chern engine produced K^2/c2 coefficients "
                               + std::to_string(c2N.c2[TruncatedClass::K2]) + "/"
                               + std::to_string(c2N.c2[TruncatedClass::C2]));
    return {c2N.c2[TruncatedClass::H2], c2N.c2[TruncatedClass::HK]};
}

} // namespace detail

/// Total Chern classes of T_P, N_{X/P} and T_X restricted to S.
struct AmbientChern
{
    TruncatedClass tangent_projective;
    TruncatedClass normal_ci;
    TruncatedClass tangent_fourfold;
};

inline AmbientChern ambient_chern(const CompleteIntersectionType& ci)
{
    ci.validate();
    AmbientChern out;
    out.tangent_projective = TruncatedClass::one();
    for (integer i = 0; i < ci.ambient_dim() + 1; ++i)
        out.tangent_projective = out.tangent_projective * (TruncatedClass::one() + TruncatedClass::hyperplane());
    out.normal_ci = TruncatedClass::one();
    for (integer a : ci.degrees)
        out.normal_ci = out.normal_ci * (TruncatedClass::one() + TruncatedClass::hyperplane(a));

    // Whitney: c(T_P) = c(T_X) c(N_X), read off degree by degree.
    const TruncatedClass c1TP = out.tangent_projective.degree1();
    const TruncatedClass c2TP = out.tangent_projective.degree2();
    const TruncatedClass c1N = out.normal_ci.degree1();
    const TruncatedClass c2N = out.normal_ci.degree2();
    const TruncatedClass c1TX = c1TP - c1N;
    const TruncatedClass c2TX = c2TP - c1TX * c1N - c2N;
    out.tangent_fourfold = TruncatedClass::one() + c1TX + c2TX;
    return out;
}

inline SelfIntersectionCoefficients chern_engine_coefficients(const CompleteIntersectionType& ci)
{
    const AmbientChern a = ambient_chern(ci);
    const TruncatedClass c1TX = a.tangent_fourfold.degree1();
    const TruncatedClass c2TX = a.tangent_fourfold.degree2();

    // c(T_S) = 1 - K + c2
    const TruncatedClass c1TS = TruncatedClass::canonical(-1);
    const TruncatedClass c2TS = TruncatedClass::second_chern();

    // c(T_X|S) = c(T_S) c(N_{S/X})
    const TruncatedClass c1NSX = c1TX - c1TS;
    const TruncatedClass c2NSX = c2TX - c2TS - c1TS * c1NSX;
    return detail::extract_coefficients(c2NSX);
}

/// Same coefficients through truncated division c(T_X)|S / c(T_S).
inline SelfIntersectionCoefficients chern_division_coefficients(const CompleteIntersectionType& ci)
{
    const AmbientChern a = ambient_chern(ci);
    const TruncatedClass tx = a.tangent_projective * a.normal_ci.inverse();
    const TruncatedClass ts = TruncatedClass::one() + TruncatedClass::canonical(-1) + TruncatedClass::second_chern();
    return detail::extract_coefficients((tx * ts.inverse()).degree2());
}

struct SelfIntersection
{
    integer value = 0;
    SelfIntersectionCoefficients coefficients;
    bool node_rule_used = false;

    friend bool operator==(const SelfIntersection&, const SelfIntersection&) = default;
};

/// 2 deg + 4 g + 2 K^2 - 12 chi - 4 for three quadrics, before node correction.
inline integer three_quadrics_self_intersection(const SurfaceInvariants& s)
{
    integer v = checked::mul(2, s.degree);
    v = checked::add(v, checked::mul(4, s.sect_genus));
    v = checked::add(v, checked::mul(2, s.K2));
    v = checked::sub(v, checked::mul(12, s.chi_O));
    return checked::sub(v, 4);
}

inline integer general_self_intersection(const SelfIntersectionCoefficients& c, const SurfaceInvariants& s)
{
    integer v = checked::mul(c.cH2, s.degree);
    v = checked::add(v, checked::mul(c.cHK, s.HK()));
    v = checked::add(v, s.K2);
    return checked::sub(v, s.chi_top);
}

inline SelfIntersection self_intersection(const CompleteIntersectionType& ci, const SurfaceInvariants& s,
                                          const NodeRules& rules = {})
{
    s.validate();
    SelfIntersection out;
    out.coefficients = closed_form_coefficients(ci);
    out.value = ci.is_three_quadrics() ? three_quadrics_self_intersection(s)
                                       : general_self_intersection(out.coefficients, s);
    if (s.nodes > 0) {
        out.value = checked::add(out.value, checked::mul(rules.self_intersection, s.nodes));
        out.node_rule_used = true;
    }
    return out;
}

} // namespace nlquad

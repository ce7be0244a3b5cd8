#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "picard_lattice.hpp"

namespace nlquad {

/// S(a; n_1, n_2, ...): image of the plane by degree-a curves through n_i
/// general points of multiplicity i.
struct PlaneModel
{
    integer a = 1;
    std::vector<integer> point_counts;

    integer total_points() const
    {
        integer k = 0;
        for (integer n : point_counts)
            k = checked::add(k, n);
        return k;
    }

    friend bool operator==(const PlaneModel&, const PlaneModel&) = default;
};

inline std::string to_string(const PlaneModel& m)
{
    std::string s = std::to_string(m.a) + ";";
    for (std::size_t i = 0; i < m.point_counts.size(); ++i)
        s += (i ? "," : "") + std::to_string(m.point_counts[i]);
    return s;
}

inline void validate(const PlaneModel& m)
{
    if (m.a < 1)
        throw DegenerateModel("plane-curve degree must be >= 1, got " + std::to_string(m.a));
    for (integer n : m.point_counts)
        if (n < 0)
            throw DegenerateModel("negative point count in S(" + to_string(m) + ")");
}

/// Per-node corrections. These are fitted to the single nodal example
/// available, so every result that uses them is flagged.
struct NodeRules
{
    integer self_intersection = 2;
    integer quadrics = 1;
    integer normal_bundle = -3;
};

struct SurfaceInvariants
{
    integer degree = 1;
    integer sect_genus = 0;
    integer K2 = 9;
    integer chi_O = 1;
    integer chi_top = 3;
    integer h0_H = 3;
    integer nodes = 0;
    bool linearly_normal = true;
    std::string label;

    /// H.K recovered from adjunction.
    integer HK() const { return checked::sub(checked::sub(checked::mul(2, sect_genus), 2), degree); }

    /// Ambient projective dimension spanned by the surface (capped at 7).
    integer span_dimension() const { return std::min<integer>(h0_H, 8) - 1; }

    void validate() const
    {
        if (degree < 1)
            throw InvalidInvariants("degree must be >= 1, got " + std::to_string(degree));
        if (nodes < 0)
            throw InvalidInvariants("node count must be >= 0");
        if (chi_top != checked::sub(checked::mul(12, chi_O), K2))
            throw InvalidInvariants("Noether identity fails: chi_top " + std::to_string(chi_top)
                                    + " != 12*" + std::to_string(chi_O) + " - " + std::to_string(K2));
    }

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Abstract-invariant input: chi_top by Noether, h0_H = chi(O(H)) by
/// Riemann-Roch under the usual vanishing.
inline SurfaceInvariants abstract_surface(integer degree, integer genus, integer K2, integer chi_O,
                                          std::string label = "abstract")
{
    SurfaceInvariants s;
    s.degree = degree;
    s.sect_genus = genus;
    s.K2 = K2;
    s.chi_O = chi_O;
    s.chi_top = checked::sub(checked::mul(12, chi_O), K2);
    s.validate();
    s.h0_H = chi_O + (degree - s.HK()) / 2;
    s.label = std::move(label);
    return s;
}

inline DivisorClass expand(const PlaneModel& m)
{
    validate(m);
    DivisorClass h{m.a, {}};
    for (std::size_t i = 0; i < m.point_counts.size(); ++i)
        for (integer j = 0; j < m.point_counts[i]; ++j)
            h.mults.push_back(static_cast<integer>(i + 1));
    return h;
}

/// Invariants of the image without the span check. Use this for projection
/// sources living in P^8 or higher.
inline SurfaceInvariants invariants_unclamped(const PlaneModel& m,
                                              integer catalogue_degree = default_catalogue_degree)
{
    const DivisorClass h = expand(m);
    const Normalized n = normalize_contractions(h, catalogue_degree);
    SurfaceInvariants s;
    s.degree = square(h);
    if (s.degree < 1)
        throw DegenerateModel("S(" + to_string(m) + ") has H^2 = " + std::to_string(s.degree));
    s.sect_genus = adjunction_genus(h);
    s.K2 = n.canonical_square();
    s.chi_O = 1;
    s.chi_top = 12 - s.K2;
    s.h0_H = riemann_roch_chi(h);
    s.label = "S(" + to_string(m) + ")";
    s.validate();
    return s;
}

inline void check_span(const SurfaceInvariants& s)
{
    if (s.h0_H < 3)
        throw SpanTooSmall(s.label + " spans only P^" + std::to_string(s.h0_H - 1));
    if (s.h0_H > 8 && s.linearly_normal && s.nodes == 0)
        throw SpanTooLarge(s.label + " is linearly normal in P^" + std::to_string(s.h0_H - 1)
                           + "; project it into P^7 first");
}

inline SurfaceInvariants invariants(const PlaneModel& m, integer catalogue_degree = default_catalogue_degree)
{
    SurfaceInvariants s = invariants_unclamped(m, catalogue_degree);
    check_span(s);
    return s;
}

/// Projection from a general point of the surface.
inline SurfaceInvariants internal_projection(const SurfaceInvariants& src)
{
    src.validate();
    if (src.nodes != 0)
        throw NotProjectable("internal projection needs a smooth source");
    if (src.h0_H < 5)
        throw NotProjectable("internal projection of a surface spanning P^" + std::to_string(src.h0_H - 1)
                             + " would not span P^3");
    SurfaceInvariants out = src;
    out.degree -= 1;
    out.K2 -= 1;
    out.chi_top += 1;
    out.h0_H -= 1;
    out.label = "int-proj(" + src.label + ")";
    out.validate();
    return out;
}

/// Projection from a general point off the surface, P^8 -> P^7.
inline SurfaceInvariants external_projection(const SurfaceInvariants& src)
{
    src.validate();
    if (src.nodes != 0)
        throw NotProjectable("external projection needs a smooth source");
    if (src.h0_H != 9 || !src.linearly_normal)
        throw NotProjectable("external projection needs a linearly normal surface in P^8 (h0_H = "
                             + std::to_string(src.h0_H) + ")");
    SurfaceInvariants out = src;
    out.linearly_normal = false;
    out.label = "ext-proj(" + src.label + ")";
    return out;
}

/// Projection from a general point of the secant variety, creating delta nodes.
inline SurfaceInvariants nodal_projection(const SurfaceInvariants& src, integer delta)
{
    src.validate();
    if (delta < 1)
        throw NotProjectable("nodal projection needs delta >= 1");
    if (src.nodes != 0)
        throw NotProjectable("nodal projection needs a smooth source");
    if (src.h0_H < 9)
        throw NotProjectable("nodal projection needs a source spanning at least P^8");
    SurfaceInvariants out = src;
    out.nodes = delta;
    out.label = "nodal-proj(" + src.label + ", " + std::to_string(delta) + ")";
    return out;
}

// ---------------------------------------------------------------------------
// Surface specification strings
//
//   spec      := base (sep modifier)*
//   base      := INT ';' [INT (',' INT)*]  |  'abs:' key '=' INT (',' key '=' INT)*
//   modifier  := 'int-proj' | 'ext-proj' | 'nodes=' INT
//   sep       := '+' | whitespace
// ---------------------------------------------------------------------------

struct AbstractData
{
    integer degree = 0;
    integer genus = 0;
    integer K2 = 0;
    integer chi_O = 0;

    friend bool operator==(const AbstractData&, const AbstractData&) = default;
};

enum class ModifierKind { InternalProjection, ExternalProjection, Nodes };

struct Modifier
{
    ModifierKind kind;
    integer value = 0;

    friend bool operator==(const Modifier&, const Modifier&) = default;
};

struct SurfaceSpec
{
    std::variant<PlaneModel, AbstractData> base;
    std::vector<Modifier> modifiers;

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

namespace detail {

class SpecParser
{
public:
    explicit SpecParser(std::string_view text) : s_(text) {}

    SurfaceSpec parse()
    {
        SurfaceSpec spec;
        skip_space();
        if (s_.substr(pos_).starts_with("abs:")) {
            pos_ += 4;
            spec.base = parse_abstract();
        } else {
            spec.base = parse_plane();
        }
        while (true) {
            const std::size_t before = pos_;
            skip_space();
            if (at_end())
                break;
            if (peek() == '+') {
                ++pos_;
                skip_space();
            } else if (pos_ == before) {
                throw ParseError("expected '+' or whitespace before modifier", pos_);
            }
            spec.modifiers.push_back(parse_modifier());
        }
        return spec;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    integer parse_int()
    {
        const std::size_t start = pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", start);
        integer v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = checked::add(checked::mul(v, 10), s_[pos_] - '0');
            ++pos_;
        }
        return negative ? -v : v;
    }

    PlaneModel parse_plane()
    {
        PlaneModel m;
        m.a = parse_int();
        expect(';');
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            m.point_counts.push_back(parse_nonnegative());
            while (peek() == ',') {
                ++pos_;
                m.point_counts.push_back(parse_nonnegative());
            }
        }
        return m;
    }

    integer parse_nonnegative()
    {
        const std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a point count", start);
        return parse_int();
    }

    std::string parse_word()
    {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    AbstractData parse_abstract()
    {
        AbstractData d;
        bool seen[4] = {false, false, false, false};
        do {
            if (peek() == ',')
                ++pos_;
            const std::size_t key_pos = pos_;
            const std::string key = parse_word();
            expect('=');
            const integer v = parse_int();
            int slot = -1;
            if (key == "deg")
                d.degree = v, slot = 0;
            else if (key == "g")
                d.genus = v, slot = 1;
            else if (key == "K2")
                d.K2 = v, slot = 2;
            else if (key == "chiO")
                d.chi_O = v, slot = 3;
            else
                throw ParseError("unknown key '" + key + "'", key_pos);
            if (seen[slot])
                throw ParseError("duplicate key '" + key + "'", key_pos);
            seen[slot] = true;
        } while (peek() == ',');
        for (int i = 0; i < 4; ++i)
            if (!seen[i])
                throw ParseError("abstract spec needs deg, g, K2 and chiO", pos_);
        return d;
    }

    Modifier parse_modifier()
    {
        const std::size_t start = pos_;
        const std::string word = parse_word();
        if (word == "int-proj")
            return {ModifierKind::InternalProjection, 0};
        if (word == "ext-proj")
            return {ModifierKind::ExternalProjection, 0};
        if (word == "nodes") {
            expect('=');
            const std::size_t vpos = pos_;
            const integer v = parse_int();
            if (v < 1)
                throw ParseError("node count must be >= 1", vpos);
            return {ModifierKind::Nodes, v};
        }
        throw ParseError("unknown modifier '" + word + "'", start);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline SurfaceSpec parse_surface_spec(std::string_view text)
{
    return detail::SpecParser(text).parse();
}

inline std::string to_string(const SurfaceSpec& spec)
{
    std::string s;
    if (const auto* m = std::get_if<PlaneModel>(&spec.base)) {
        s = to_string(*m);
    } else {
        const auto& d = std::get<AbstractData>(spec.base);
        s = "abs:deg=" + std::to_string(d.degree) + ",g=" + std::to_string(d.genus) + ",K2="
            + std::to_string(d.K2) + ",chiO=" + std::to_string(d.chi_O);
    }
    for (const auto& mod : spec.modifiers) {
        switch (mod.kind) {
        case ModifierKind::InternalProjection: s += "+int-proj"; break;
        case ModifierKind::ExternalProjection: s += "+ext-proj"; break;
        case ModifierKind::Nodes: s += "+nodes=" + std::to_string(mod.value); break;
        }
    }
    return s;
}

/// Builds the invariant record: base surface, then modifiers left to right,
/// then the P^7 span check.
inline SurfaceInvariants resolve(const SurfaceSpec& spec, integer catalogue_degree = default_catalogue_degree)
{
    SurfaceInvariants s;
    if (const auto* m = std::get_if<PlaneModel>(&spec.base)) {
        s = invariants_unclamped(*m, catalogue_degree);
    } else {
        const auto& d = std::get<AbstractData>(spec.base);
        s = abstract_surface(d.degree, d.genus, d.K2, d.chi_O,
                             "abs(" + std::to_string(d.degree) + "," + std::to_string(d.genus) + ")");
    }
    for (const auto& mod : spec.modifiers) {
        switch (mod.kind) {
        case ModifierKind::InternalProjection: s = internal_projection(s); break;
        case ModifierKind::ExternalProjection: s = external_projection(s); break;
        case ModifierKind::Nodes: s = nodal_projection(s, mod.value); break;
        }
    }
    check_span(s);
    return s;
}

inline SurfaceInvariants resolve(std::string_view text, integer catalogue_degree = default_catalogue_degree)
{
    return resolve(parse_surface_spec(text), catalogue_degree);
}

} // namespace nlquad

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

// Candidate mate families, in the order mates are reported.
enum class Family {
    TwoComponent,  // K_t ∪ CS(clique m, indep n)
    P3_cc,         // (-l,-m,n)
    P3_mixed,      // (l,-m,n)
    P3_cm,         // (-l,m,n)
    P3_ccc,        // (l,m,n)
    P4_a,          // (l,-3,-2,-2)
    P4_b,          // (-2,m,n,-2)
    P4_c,          // (l,-2,n,-3)
    P4_table,      // (l,m,-n,s), (l,m,s) from the ten-row list
    P5,            // (1,l,-m,n,1)
};

inline constexpr std::array<Family, 10> all_families{
    Family::TwoComponent, Family::P3_cc, Family::P3_mixed, Family::P3_cm, Family::P3_ccc,
    Family::P4_a,         Family::P4_b,  Family::P4_c,     Family::P4_table, Family::P5};

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::TwoComponent: return "TwoComponent";
    case Family::P3_cc: return "P3_cc";
    case Family::P3_mixed: return "P3_mixed";
    case Family::P3_cm: return "P3_cm";
    case Family::P3_ccc: return "P3_ccc";
    case Family::P4_a: return "P4_a";
    case Family::P4_b: return "P4_b";
    case Family::P4_c: return "P4_c";
    case Family::P4_table: return "P4_table";
    case Family::P5: return "P5";
    }
    throw std::invalid_argument("unknown family");
}

inline Family family_from_name(std::string_view name) {
    for (auto f : all_families)
        if (family_name(f) == name) return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

inline std::vector<std::string_view> param_names(Family f) {
    switch (f) {
    case Family::TwoComponent: return {"t", "m", "n"};
    case Family::P3_cc:
    case Family::P3_mixed:
    case Family::P3_cm:
    case Family::P3_ccc:
    case Family::P5: return {"l", "m", "n"};
    case Family::P4_a: return {"l"};
    case Family::P4_b: return {"m", "n"};
    case Family::P4_c: return {"l", "n"};
    case Family::P4_table: return {"l", "m", "n", "s"};
    }
    throw std::invalid_argument("unknown family");
}

// (l, m, s) triples admitted for the (l,m,-n,s) family.
inline constexpr std::array<std::array<Int, 3>, 10> p4_table_shapes{{
    {3, 3, 6}, {3, 4, 4}, {3, 6, 3}, {4, 2, 6}, {4, 3, 3},
    {4, 6, 2}, {5, 2, 4}, {5, 4, 2}, {7, 2, 3}, {7, 3, 2},
}};

inline bool is_p4_table_shape(Int l, Int m, Int s) {
    for (const auto& r : p4_table_shapes)
        if (r[0] == l && r[1] == m && r[2] == s) return true;
    return false;
}

struct FamilySpec {
    Family family = Family::TwoComponent;
    std::array<Int, 4> params{};  // in param_names order; unused slots are 0
    Int isolated = 0;

    Int param(std::string_view name) const {
        auto names = param_names(family);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return params[i];
        throw std::invalid_argument("family " + std::string(family_name(family)) + " has no parameter " + std::string(name));
    }

    static FamilySpec two_component(Int t, Int m, Int n, Int a) { return {Family::TwoComponent, {t, m, n, 0}, a}; }
    static FamilySpec p3_cc(Int l, Int m, Int n, Int a) { return {Family::P3_cc, {l, m, n, 0}, a}; }
    static FamilySpec p3_mixed(Int l, Int m, Int n, Int a) { return {Family::P3_mixed, {l, m, n, 0}, a}; }
    static FamilySpec p3_cm(Int l, Int m, Int n, Int a) { return {Family::P3_cm, {l, m, n, 0}, a}; }
    static FamilySpec p3_ccc(Int l, Int m, Int n, Int a) { return {Family::P3_ccc, {l, m, n, 0}, a}; }
    static FamilySpec p4_a(Int l, Int a) { return {Family::P4_a, {l, 0, 0, 0}, a}; }
    static FamilySpec p4_b(Int m, Int n, Int a) { return {Family::P4_b, {m, n, 0, 0}, a}; }
    static FamilySpec p4_c(Int l, Int n, Int a) { return {Family::P4_c, {l, n, 0, 0}, a}; }
    static FamilySpec p4_table(Int l, Int m, Int n, Int s, Int a) { return {Family::P4_table, {l, m, n, s}, a}; }
    static FamilySpec p5(Int l, Int m, Int n, Int a) { return {Family::P5, {l, m, n, 0}, a}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
    friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

// Parameter bounds of each family; false for out-of-range specs.
inline bool spec_valid(const FamilySpec& s) {
    const auto& p = s.params;
    if (s.isolated < 0) return false;
    switch (s.family) {
    case Family::TwoComponent: return p[0] >= 2 && p[1] >= 1 && p[2] >= 1;
    case Family::P3_cc:
    case Family::P3_mixed:
    case Family::P3_cm:
    case Family::P3_ccc: return p[0] >= 1 && p[1] >= 1 && p[2] >= 2;
    case Family::P4_a: return p[0] >= 1;
    case Family::P4_b:
    case Family::P4_c: return p[0] >= 1 && p[1] >= 1;
    case Family::P4_table: return p[2] >= 1 && is_p4_table_shape(p[0], p[1], p[3]);
    case Family::P5: return p[0] >= 1 && p[1] >= 1 && p[2] >= 1;
    }
    return false;
}

inline void validate(const FamilySpec& s) {
    if (!spec_valid(s)) throw std::invalid_argument("family parameters out of range for " + std::string(family_name(s.family)));
}

// Type tuple of the main component; none for TwoComponent.
inline std::optional<MixedExtension> type_tuple(const FamilySpec& s) {
    validate(s);
    const auto& p = s.params;
    switch (s.family) {
    case Family::TwoComponent: return std::nullopt;
    case Family::P3_cc: return MixedExtension{-p[0], -p[1], p[2]};
    case Family::P3_mixed: return MixedExtension{p[0], -p[1], p[2]};
    case Family::P3_cm: return MixedExtension{-p[0], p[1], p[2]};
    case Family::P3_ccc: return MixedExtension{p[0], p[1], p[2]};
    case Family::P4_a: return MixedExtension{p[0], -3, -2, -2};
    case Family::P4_b: return MixedExtension{-2, p[0], p[1], -2};
    case Family::P4_c: return MixedExtension{p[0], -2, p[1], -3};
    case Family::P4_table: return MixedExtension{p[0], p[1], -p[2], p[3]};
    case Family::P5: return MixedExtension{1, p[0], -p[1], p[2], 1};
    }
    return std::nullopt;
}

// Order of the main component(s), without isolated vertices.
inline Int main_order(const FamilySpec& s) {
    if (s.family == Family::TwoComponent) {
        validate(s);
        return s.params[0] + s.params[1] + s.params[2];
    }
    return type_tuple(s)->order();
}

inline Int realized_order(const FamilySpec& s) { return main_order(s) + s.isolated; }

inline Graph realize(const FamilySpec& s) {
    validate(s);
    auto a = static_cast<std::size_t>(s.isolated);
    if (s.family == Family::TwoComponent) {
        const auto& p = s.params;
        return disjoint_union({make_complete(static_cast<std::size_t>(p[0])),
                               make_complete_split(static_cast<std::size_t>(p[2]), static_cast<std::size_t>(p[1]))},
                              a);
    }
    return disjoint_union({make_mixed_extension(*type_tuple(s))}, a);
}

// Identifies a realized graph up to the isomorphisms this library recognises.
struct SpecKey {
    bool two_component = false;
    std::vector<Int> body;
    Int isolated = 0;

    friend bool operator==(const SpecKey&, const SpecKey&) = default;
    friend auto operator<=>(const SpecKey&, const SpecKey&) = default;
};

inline SpecKey spec_key(const FamilySpec& s) {
    if (s.family == Family::TwoComponent) {
        validate(s);
        Int t = s.params[0], m = s.params[1], n = s.params[2];
        // CS(clique m, indep 1) is K_{m+1}, so K_t ∪ CS(m,1) is also K_{m+1} ∪ CS(t-1,1).
        if (n == 1 && m + 1 > t) std::swap(t, m), ++t, --m;
        return {true, {t, m, n}, s.isolated};
    }
    return {false, type_tuple(s)->normal_form(), s.isolated};
}

inline SpecKey pineapple_key(const PineappleParams& params) { return {false, pineapple_type(params).normal_form(), 0}; }

inline bool isomorphic_to_pineapple(const FamilySpec& s, const PineappleParams& params) {
    return spec_key(s) == pineapple_key(params);
}

inline std::string to_string(const FamilySpec& s) {
    std::string out;
    if (s.family == Family::TwoComponent) {
        const auto& p = s.params;
        out = "K_" + std::to_string(p[0]) + " ∪ CS(clique " + std::to_string(p[1]) + ", indep " + std::to_string(p[2]) + ")";
    } else {
        out = "P" + std::to_string(type_tuple(s)->base_len()) + " " + type_tuple(s)->to_string();
    }
    if (s.isolated > 0) out += " ∪ " + std::to_string(s.isolated) + "K_1";
    return out;
}

} // namespace cospec

#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "cospec/classifier.hpp"
#include "cospec/closed_forms.hpp"
#include "cospec/int_poly.hpp"
#include "cospec/oracle.hpp"

namespace cospec {

using json = nlohmann::json;

// Coefficients as decimal strings, low degree first.
inline json to_json(const IntPoly& p) { return json(p.to_decimal_strings()); }

inline IntPoly int_poly_from_json(const json& j) { return IntPoly::from_decimal_strings(j.get<std::vector<std::string>>()); }

inline json to_json(const FactoredPoly& f) {
    return json{{"x_mult", f.x_mult}, {"x1_mult", f.x1_mult}, {"cubic", to_json(f.cubic)}};
}

inline FactoredPoly factored_poly_from_json(const json& j) {
    return FactoredPoly::make(j.at("x_mult").get<Int>(), j.at("x1_mult").get<Int>(), int_poly_from_json(j.at("cubic")));
}

inline json to_json(const FamilySpec& s) {
    json params = json::object();
    auto names = param_names(s.family);
    for (std::size_t i = 0; i < names.size(); ++i) params[std::string(names[i])] = s.params[i];
    json j{{"family", std::string(family_name(s.family))}, {"params", params}, {"isolated", s.isolated}};
    if (auto t = type_tuple(s)) j["type"] = t->type();
    return j;
}

inline FamilySpec family_spec_from_json(const json& j) {
    FamilySpec s;
    s.family = family_from_name(j.at("family").get<std::string>());
    auto names = param_names(s.family);
    for (std::size_t i = 0; i < names.size(); ++i) s.params[i] = j.at("params").at(std::string(names[i])).get<Int>();
    s.isolated = j.at("isolated").get<Int>();
    validate(s);
    return s;
}

inline json to_json(const Mate& m) {
    json j = to_json(m.spec);
    j["order"] = m.realized_order;
    j["verified"] = m.verified;
    return j;
}

inline json to_json(const Classification& c) {
    json mates = json::array();
    for (const auto& m : c.mates) mates.push_back(to_json(m));
    return json{{"p", c.params.p}, {"k", c.params.k}, {"q", c.params.q}, {"das", c.das()}, {"mates", mates}};
}

inline Classification classification_from_json(const json& j) {
    Classification c;
    c.params = PineappleParams{j.at("p").get<Int>(), j.at("k").get<Int>(), j.at("q").get<Int>()};
    c.params.validate();
    for (const auto& m : j.at("mates")) {
        Mate mate{family_spec_from_json(m), m.at("order").get<Int>(), m.value("verified", false)};
        c.mates.push_back(mate);
    }
    if (j.at("das").get<bool>() != c.das()) throw std::invalid_argument("classification JSON: das flag contradicts mate list");
    return c;
}

inline json to_json(const ScanHit& h) {
    return json{{"p", h.params.p}, {"k", h.params.k}, {"q", h.params.q}, {"mate", to_json(h.spec)}};
}

inline json to_json(const ScanReport& r) {
    auto list = [](const std::vector<ScanHit>& v) {
        json a = json::array();
        for (const auto& h : v) a.push_back(to_json(h));
        return a;
    };
    return json{{"params_range", r.params_range},
                {"specs_checked", r.specs_checked},
                {"pineapples_checked", r.pineapples_checked},
                {"found", list(r.found)},
                {"missed_by_classifier", list(r.missed_by_classifier)},
                {"spurious_in_classifier", list(r.spurious_in_classifier)},
                {"passed", r.passed()}};
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline std::string census_csv_header() { return "p,k,q,das,mate_count,mates_json"; }

inline std::string census_csv_row(const CensusRow& row) {
    json mates = json::array();
    for (const auto& m : row.result.mates) mates.push_back(to_json(m));
    const auto& p = row.params;
    return std::to_string(p.p) + "," + std::to_string(p.k) + "," + std::to_string(p.q) + "," +
           (row.result.das() ? "true" : "false") + "," + std::to_string(row.result.mates.size()) + "," +
           detail::csv_quote(mates.dump());
}

inline std::string census_csv(const CensusTable& t) {
    std::string out = census_csv_header() + "\n";
    for (const auto& r : t.rows) out += census_csv_row(r) + "\n";
    return out;
}

} // namespace cospec

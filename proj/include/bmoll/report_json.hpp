#pragma once

// JSON form of PropertyReport. Exact values travel as "num/den" strings
// (denominator omitted when 1), so serialize/parse is lossless.

#include "properties.hpp"

#include <json.hpp>

namespace bmoll {

inline nlohmann::ordered_json to_json(const Witness& w) {
    return nlohmann::ordered_json{{"m", w.m},
                                  {"i", w.i},
                                  {"lhs", fraction_str(w.lhs)},
                                  {"rhs", fraction_str(w.rhs)},
                                  {"relation", w.relation == Relation::Less ? "<" : "=="}};
}

inline nlohmann::ordered_json to_json(const PropertyReport& r) {
    nlohmann::ordered_json j{{"property", property_name(r.property)},
                             {"m_from", r.m_from},
                             {"m_to", r.m_to},
                             {"verdict", verdict_name(r.verdict)}};
    if (r.witness)
        j["witness"] = to_json(*r.witness);
    j["notes"] = r.notes;
    return j;
}

inline Witness witness_from_json(const nlohmann::json& j) {
    Witness w;
    w.m = j.at("m").get<long>();
    w.i = j.at("i").get<long>();
    w.lhs = parse_fraction(j.at("lhs").get<std::string>());
    w.rhs = parse_fraction(j.at("rhs").get<std::string>());
    std::string rel = j.at("relation").get<std::string>();
    if (rel == "<")
        w.relation = Relation::Less;
    else if (rel == "==")
        w.relation = Relation::Equal;
    else
        throw DomainError("witness_from_json: unknown relation '" + rel + "'");
    return w;
}

inline PropertyReport report_from_json(const nlohmann::json& j) {
    PropertyReport r;
    auto prop = property_from_name(j.at("property").get<std::string>());
    if (!prop)
        throw DomainError("report_from_json: unknown property");
    r.property = *prop;
    r.m_from = j.at("m_from").get<long>();
    r.m_to = j.at("m_to").get<long>();
    auto verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (!verdict)
        throw DomainError("report_from_json: unknown verdict");
    r.verdict = *verdict;
    if (j.contains("witness"))
        r.witness = witness_from_json(j.at("witness"));
    r.notes = j.value("notes", std::string{});
    return r;
}

}  // namespace bmoll

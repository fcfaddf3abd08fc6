#pragma once

#include "json.hpp"

#include "zetalab/identities.hpp"

namespace zetalab {

inline nlohmann::json report_to_json(int k, int r, double x,
                                     const VerificationReport& rep,
                                     double ms) {
    nlohmann::json j;
    j["schema"] = 1;
    j["k"] = k;
    j["r"] = r;
    j["x"] = x;
    j["lhs"] = rep.lhs.value;
    j["lhs_tail_bound"] = rep.lhs.tail_bound;
    j["rhs"] = rep.rhs_total;
    j["rhs_terms"] = nlohmann::json::object();
    for (const auto& [name, value] : rep.rhs_terms)
        j["rhs_terms"][name] = value;
    j["residual"] = rep.abs_residual;
    j["rel_residual"] = rep.rel_residual;
    j["terms"] = rep.lhs.terms_used;
    j["ms"] = ms;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport rep;
    rep.lhs.value = j.at("lhs").get<double>();
    rep.lhs.tail_bound = j.at("lhs_tail_bound").get<double>();
    rep.lhs.terms_used = j.at("terms").get<std::int64_t>();
    rep.rhs_total = j.at("rhs").get<double>();
    for (const auto& [name, value] : j.at("rhs_terms").items())
        rep.rhs_terms[name] = value.get<double>();
    rep.abs_residual = j.at("residual").get<double>();
    rep.rel_residual = j.at("rel_residual").get<double>();
    return rep;
}

} // namespace zetalab

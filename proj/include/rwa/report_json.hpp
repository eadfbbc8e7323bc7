#pragma once

// JSON serialization of test reports, with stable field names. Rationals are
// carried as "p/q" strings so reports round-trip exactly.

#include "rwa/moments.hpp"
#include "rwa/stats.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rwa {

inline void to_json(nlohmann::json& j, const KsResult& r) {
    j = nlohmann::json{{"statistic", r.statistic},
                       {"n_effective", r.n_effective},
                       {"p_value", r.p_value},
                       {"alpha", r.alpha},
                       {"pass", r.pass}};
}

inline void from_json(const nlohmann::json& j, KsResult& r) {
    j.at("statistic").get_to(r.statistic);
    j.at("n_effective").get_to(r.n_effective);
    j.at("p_value").get_to(r.p_value);
    j.at("alpha").get_to(r.alpha);
    j.at("pass").get_to(r.pass);
}

inline void to_json(nlohmann::json& j, const MomentTestResult& r) {
    j = nlohmann::json{{"k", r.k},
                       {"empirical", r.empirical},
                       {"exact", r.exact},
                       {"z_score", r.z_score},
                       {"pass", r.pass}};
}

inline void from_json(const nlohmann::json& j, MomentTestResult& r) {
    j.at("k").get_to(r.k);
    j.at("empirical").get_to(r.empirical);
    j.at("exact").get_to(r.exact);
    j.at("z_score").get_to(r.z_score);
    j.at("pass").get_to(r.pass);
}

inline void to_json(nlohmann::json& j, const MomentReport& r) {
    std::vector<std::string> direct;
    std::vector<std::string> closed;
    for (const auto& q : r.direct) direct.push_back(to_string(q));
    for (const auto& q : r.closed_form) closed.push_back(to_string(q));
    j = nlohmann::json{{"k_max", r.k_max},
                       {"direct", direct},
                       {"closed_form", closed},
                       {"equal", r.equal},
                       {"overall_pass", r.overall_pass}};
}

inline void from_json(const nlohmann::json& j, MomentReport& r) {
    r.k_max = j.at("k_max").get<unsigned>();
    r.direct.clear();
    r.closed_form.clear();
    for (const auto& s : j.at("direct")) r.direct.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : j.at("closed_form"))
        r.closed_form.push_back(parse_rational(s.get<std::string>()));
    r.equal = j.at("equal").get<std::vector<bool>>();
    r.overall_pass = j.at("overall_pass").get<bool>();
}

}  // namespace rwa

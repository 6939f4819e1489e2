#pragma once

#include <json.hpp>

#include "covseg/enumerate.hpp"
#include "covseg/session.hpp"

namespace covseg {

/* JSON shapes used by the command line tool, matched by the schema files
   under schemas/. */

inline nlohmann::json to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

inline nlohmann::json to_json(const CoverSpec& c) {
    nlohmann::json j{{"family", c.family == Family::KP ? "KP" : "S"}, {"n", c.n}};
    if (c.family == Family::KP) j["a"] = c.a;
    if (!c.tame) j["tame"] = false;
    return j;
}

inline nlohmann::json to_json(const DerivativeResult& res) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, mult] : res.value.terms)
        terms.push_back({{"mult", res.scalar > 0 ? mult / res.scalar : mult}, {"m", m.str()}});
    return nlohmann::json{{"degree", res.degree},
                          {"scalar", res.scalar},
                          {"terms", terms},
                          {"tag", res.value.tag == RepTag::Z ? "Z" : "L"}};
}

inline nlohmann::json to_json(const BvConsistency& bc) {
    return nlohmann::json{{"lambda", to_json(bc.lambda)},
                          {"bv", to_json(bc.bv)},
                          {"equal", bc.equal},
                          {"orbit", to_json(bc.orbit)}};
}

inline nlohmann::json to_json(const SweepSummary& sum) {
    nlohmann::json checked = nlohmann::json::object();
    for (const auto& [name, count] : sum.checked) checked[name] = count;
    return nlohmann::json{{"covers", sum.covers},
                          {"instances", sum.instances},
                          {"checked", checked},
                          {"failure_count", sum.failure_count},
                          {"failures", sum.failures}};
}

} // namespace covseg

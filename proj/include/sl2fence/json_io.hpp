#pragma once

// JSON and CSV emission.  Rationals always serialize as "p/q" strings, never
// as floats; reports carry no timestamps, so identical configurations produce
// byte-identical output.

#include <sl2fence/fences.hpp>
#include <sl2fence/report.hpp>
#include <sl2fence/verma.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace sl2fence {

using Json = nlohmann::ordered_json;

inline Json to_json(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re);
    return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

inline Json to_json(const CheckResult& c) {
    Json j;
    j["identity"] = c.name;
    j["status"] = to_string(c.status);
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

inline Json to_json(const SuiteReport& s) {
    Json j;
    j["suite"] = s.suite;
    j["pass"] = s.count(CheckStatus::Pass);
    j["fail"] = s.count(CheckStatus::Fail);
    j["flagged"] = s.count(CheckStatus::Flagged);
    j["checks"] = Json::array();
    for (const auto& c : s.checks) j["checks"].push_back(to_json(c));
    return j;
}

inline Json to_json(const std::vector<SuiteReport>& suites) {
    Json j = Json::array();
    for (const auto& s : suites) j.push_back(to_json(s));
    return j;
}

inline Json to_json(const PointRecord& p) {
    return Json{{"x", p.x}, {"y", p.y}, {"value", p.value}, {"chamber", p.chamber}};
}

inline Json to_json(const MultiplicityReport& r) {
    Json j;
    j["model"] = r.model;
    j["window"] = Json{{"x", {r.window.x_lo, r.window.x_hi}}, {"y", {r.window.y_lo, r.window.y_hi}}};
    j["points"] = Json::array();
    for (const auto& p : r.points) j["points"].push_back(to_json(p));
    j["chambers"] = Json::array();
    for (const auto& v : r.verdicts) {
        Json c;
        c["chamber"] = v.chamber;
        c["constant"] = v.constant;
        if (v.constant)
            c["value"] = v.value;
        else if (v.witness)
            c["witness"] = Json::array({to_json(v.witness->first), to_json(v.witness->second)});
        j["chambers"].push_back(c);
    }
    Json meta = Json::object();
    for (const auto& [k, v] : r.metadata) meta[k] = v;
    j["metadata"] = meta;
    return j;
}

inline Json to_json(const RegionScan& s) {
    Json j;
    j["oracle"] = s.oracle;
    j["window"] = s.window;
    Json counts = Json::object();
    for (const auto& [value, n] : s.value_counts) counts[std::to_string(value)] = n;
    j["value_counts"] = counts;
    if (s.oracle == "verma") {
        j["multiplicity_two_points"] = Json::array();
        for (const auto& p : s.mult_two_points) j["multiplicity_two_points"].push_back({p[0], p[1], p[2]});
        j["stated_region"] = "a+b+c <= -2, |a-b| <= -c-2, a+b-c in 2N";
        j["observed_region"] = "a+b+c >= -2, |a-b| <= -c-2, a+b-c in 2N";
        j["observed_region_exact"] = s.observed_form_exact;
        j["note"] =
            "the kernel oracle realizes the reflected region a+b+c >= -2 where the stated one has a+b+c <= -2; "
            "both are reported unchanged, with the pointwise comparison below";
    }
    if (s.oracle == "fusion") j["predicate"] = "l3 >= l1+l2+1, l1+l2-l3 odd";
    j["comparisons"] = s.comparisons;
    j["agreements"] = s.agreements;
    j["disagreement_points"] = Json::array();
    for (const auto& p : s.disagreement_points) j["disagreement_points"].push_back({p[0], p[1], p[2]});
    return j;
}

}  // namespace sl2fence

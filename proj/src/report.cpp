#include "wspec/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace wspec {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::expected_fail: return "expected-fail";
    }
    return "fail";
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string fmt_bool(bool b) { return b ? "yes" : "no"; }

std::string ExperimentReport::csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    out += "# verdict: " + verdict_name(verdict) + "\n";
    return out;
}

std::string ExperimentReport::json_string() const {
    nlohmann::json j;
    j["experiment"] = name;
    nlohmann::json jp = nlohmann::json::object();
    for (const auto& [k, v] : params) jp[k] = v;
    j["params"] = jp;
    j["columns"] = columns;
    j["rows"] = rows;
    j["verdict"] = verdict_name(verdict);
    if (!first_counterexample.empty()) j["first_counterexample"] = first_counterexample;
    j["max_solver_gap"] = max_solver_gap;
    return j.dump(2) + "\n";
}

}  // namespace wspec

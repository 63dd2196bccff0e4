#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wspec {

enum class Verdict { pass, fail, expected_fail };

// A flat experiment result: named parameters, a label-stable row grid (cells
// preformatted, decimals at 6 significant digits), and a summary verdict.
// Every row carries the parameters needed to recompute it.
struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    Verdict verdict = Verdict::pass;
    std::string first_counterexample;  // empty when none
    double max_solver_gap = 0.0;

    // Header row, comma-separated cells, final "# verdict: ..." comment line.
    std::string csv() const;
    std::string json_string() const;
    int exit_code() const { return verdict == Verdict::fail ? 1 : 0; }
};

std::string verdict_name(Verdict v);
std::string fmt6(double v);   // %.6g
std::string fmt_bool(bool b); // "yes"/"no"

}  // namespace wspec

// wspec: weighted-adjacency spectra experiments.
//
// Subcommands map one-to-one onto the library's experiment runners; every
// experiment prints CSV to stdout (or --csv PATH) with an optional JSON
// mirror via --json PATH. Exit code 0 on pass (including expected-fail for
// non-restricted weights), 1 on unexpected failure, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wspec/enumeration.hpp"
#include "wspec/harness.hpp"
#include "wspec/weights.hpp"

namespace {

struct WeightArgs {
    std::string name;
    std::optional<double> alpha;
    std::optional<double> p;

    wspec::WeightFunction resolve() const { return wspec::resolve_weight(name, alpha, p); }
};

void add_weight_options(CLI::App* cmd, WeightArgs& args) {
    cmd->add_option("--f", args.name, "catalog function name, 'unit', or an expression in x,y")
        ->required();
    cmd->add_option("--alpha", args.alpha, "general_sum_connectivity exponent (>= 1)");
    cmd->add_option("--p", args.p, "p_sombor exponent (>= 1)");
}

int emit(const wspec::ExperimentReport& rep, const std::string& csv_path,
         const std::string& json_path) {
    if (csv_path.empty()) {
        std::cout << rep.csv();
    } else {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot write " + csv_path);
        out << rep.csv();
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << rep.json_string();
    }
    if (rep.verdict != wspec::Verdict::pass)
        std::cerr << "verdict: " << wspec::verdict_name(rep.verdict)
                  << (rep.first_counterexample.empty()
                          ? ""
                          : " (" + rep.first_counterexample + ")")
                  << "\n";
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral radii of degree-weighted adjacency matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // let --csv/--json appear after the subcommand name

    std::string csv_path, json_path;
    app.add_option("--csv", csv_path, "write the CSV report here instead of stdout");
    app.add_option("--json", json_path, "also write a JSON mirror of the report");

    auto* table1 = app.add_subcommand("table1", "reproduce the published 5x7 radius table");

    WeightArgs scan_f;
    int n_lo = 4, n_hi = 10, scan_jobs = 0;
    auto* scan = app.add_subcommand("scan", "exhaustive extremal scan over free trees");
    add_weight_options(scan, scan_f);
    scan->add_option("--n-lo", n_lo, "smallest order")->required();
    scan->add_option("--n-hi", n_hi, "largest order")->required();
    scan->add_option("--jobs", scan_jobs, "worker threads (1 = serial reference)");

    WeightArgs kel_f;
    int kel_n = 10, kel_trials = 500, kel_jobs = 0;
    std::uint64_t kel_seed = 1;
    auto* kel = app.add_subcommand("kelmans", "random Kelmans monotonicity trials");
    add_weight_options(kel, kel_f);
    kel->add_option("--n", kel_n, "graph order")->required();
    kel->add_option("--trials", kel_trials, "number of trials")->required();
    kel->add_option("--seed", kel_seed, "PRNG seed")->required();
    kel->add_option("--jobs", kel_jobs, "worker threads (1 = serial reference)");

    WeightArgs chain_f;
    int chain_n = 15;
    auto* chain = app.add_subcommand("chain", "double-star chain monotonicity");
    add_weight_options(chain, chain_f);
    chain->add_option("--n", chain_n, "order of the double stars")->required();

    WeightArgs pb_f;
    int pb_n_hi = 30;
    auto* pb = app.add_subcommand("pathbounds", "path cosine bound and S_5 anchor");
    add_weight_options(pb, pb_f);
    pb->add_option("--n-hi", pb_n_hi, "largest path order")->required();

    WeightArgs props_f;
    int props_delta = wspec::kDefaultGridBound;
    auto* props = app.add_subcommand("props", "grid property report for a weight function");
    add_weight_options(props, props_f);
    props->add_option("--delta", props_delta, "grid bound (default 50)");

    int trees_n = 0;
    bool trees_emit = false;
    auto* trees = app.add_subcommand("trees", "free tree enumeration debug output");
    trees->add_option("--n", trees_n, "tree order")->required();
    trees->add_flag("--emit", trees_emit, "write each tree in graph text format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message / help
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table1) return emit(wspec::run_table1(), csv_path, json_path);
        if (*scan) {
            auto rep = wspec::run_extremal_scan(scan_f.resolve(), n_lo, n_hi, scan_jobs);
            for (const auto& [key, value] : rep.params)
                if (key == "restricted" && value == "no")
                    std::cerr << "warning: weight is not restricted; extremal failures "
                                 "are the expected negative cases\n";
            return emit(rep, csv_path, json_path);
        }
        if (*kel) {
            auto rep = wspec::run_kelmans_check(kel_f.resolve(), kel_n, kel_trials,
                                                kel_seed, kel_jobs);
            std::string summary = "summary:";
            for (const auto& [key, value] : rep.params) summary += " " + key + "=" + value;
            std::cerr << summary << " verdict=" << wspec::verdict_name(rep.verdict) << "\n";
            return emit(rep, csv_path, json_path);
        }
        if (*chain)
            return emit(wspec::run_double_star_chain(chain_f.resolve(), chain_n), csv_path,
                        json_path);
        if (*pb)
            return emit(wspec::run_path_bounds(pb_f.resolve(), pb_n_hi), csv_path,
                        json_path);
        if (*props) {
            auto f = props_f.resolve();
            std::cout << "function: " << f.display_name() << "\n";
            std::cout << "symmetric: " << wspec::check_symmetric(f, props_delta).describe()
                      << "\n";
            std::cout << "increasing: "
                      << wspec::check_increasing(f, props_delta).describe() << "\n";
            std::cout << "convex: " << wspec::check_convex(f, props_delta).describe()
                      << "\n";
            std::cout << "restricted: "
                      << wspec::check_restricted(f, props_delta).describe() << "\n";
            std::cout << "property_p: "
                      << wspec::check_property_p(f, props_delta).describe() << "\n";
            return 0;
        }
        if (*trees) {
            auto it = wspec::free_trees(trees_n);
            long long count = 0;
            while (auto t = it.next()) {
                ++count;
                if (trees_emit) {
                    if (count > 1) std::cout << "\n";
                    std::cout << wspec::write_graph_text(*t);
                }
            }
            if (!trees_emit) std::cout << count << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

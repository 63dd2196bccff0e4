// Times the serial reference scan against the OpenMP kernel on the full set
// of free trees of one order and verifies the results agree exactly.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wspec/enumeration.hpp"
#include "wspec/harness.hpp"
#include "wspec/scan.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int n = 15;
    std::string fname = "sombor";
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string key = argv[i];
        if (key == "--n")
            n = std::atoi(argv[i + 1]);
        else if (key == "--f")
            fname = argv[i + 1];
        else {
            std::fprintf(stderr, "usage: bench_scan [--n N] [--f NAME]\n");
            return 2;
        }
    }

    auto f = wspec::resolve_weight(fname, {}, {});

    std::vector<wspec::Graph> trees;
    auto it = wspec::free_trees(n);
    while (auto t = it.next()) trees.push_back(std::move(*t));
    std::printf("n=%d trees=%zu f=%s\n", n, trees.size(), f.display_name().c_str());

    double t0 = now();
    auto serial = wspec::tree_spectra_serial(trees, f);
    double t1 = now();
    auto parallel = wspec::tree_spectra(trees, f, 0);
    double t2 = now();

    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (serial.rho[i] != parallel.rho[i]) {
            std::fprintf(stderr, "mismatch at tree %zu: %.17g vs %.17g\n", i,
                         serial.rho[i], parallel.rho[i]);
            return 1;
        }
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    double ts = t1 - t0, tp = t2 - t1;
    std::printf("serial:   %8.3f s\n", ts);
    std::printf("openmp:   %8.3f s  (%d threads)\n", tp, threads);
    std::printf("speedup:  %8.2fx\n", tp > 0 ? ts / tp : 0.0);
    std::printf("results identical; max solver gap %.3g\n", serial.max_solver_gap);
    return 0;
}

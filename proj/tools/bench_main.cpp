// Benchmark: serial reference kernel vs the OpenMP chunk kernel, checking
// that both produce identical results.
//
//   mclab_bench [trials] [workers] [method ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef MCLAB_HAVE_OPENMP
#include <omp.h>
#endif

#include "mclab/runner.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace mclab::runner;

    std::uint64_t trials = 2'000'000;
    int workers = 2;
#ifdef MCLAB_HAVE_OPENMP
    workers = omp_get_max_threads();
#endif
    if (argc > 1) trials = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2) workers = std::atoi(argv[2]);

    std::vector<std::string> methods;
    for (int i = 3; i < argc; ++i) methods.emplace_back(argv[i]);
    if (methods.empty()) {
        methods = {"ellipse-1:1", "half-normal", "bertrand-endpoints",
                   "stick-parallel"};
    }

#ifndef MCLAB_HAVE_OPENMP
    std::printf("note: built without OpenMP; the parallel kernel runs serially\n");
#endif
    std::printf("%-22s %12s %12s %10s %8s  %s\n", "method", "serial [s]",
                "parallel [s]", "speedup", "workers", "match");

    int mismatches = 0;
    for (const std::string& name : methods) {
        const auto t0 = std::chrono::steady_clock::now();
        const ExperimentResult serial = run_method_serial(name, trials, 1);
        const double ts = seconds_since(t0);

        const auto t1 = std::chrono::steady_clock::now();
        const ExperimentResult parallel =
            run_method_parallel(name, trials, 1, workers);
        const double tp = seconds_since(t1);

        const bool match = serial.hits == parallel.hits &&
                           serial.denom == parallel.denom &&
                           serial.p_hat == parallel.p_hat;
        if (!match) ++mismatches;
        std::printf("%-22s %12.3f %12.3f %9.2fx %8d  %s\n", name.c_str(), ts,
                    tp, ts / tp, workers, match ? "yes" : "NO");
    }
    return mismatches == 0 ? 0 : 1;
}

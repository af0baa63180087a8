// Wall-time comparison of the serial reference scan against the OpenMP
// kernel on a few corpora, with a result-equality check. Build and run:
//
//   cmake --build build && ./build/tools/bench_roundtrip
//
// Optional argument: repetitions per measurement (default 3, best-of).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "l1k/corpus.hpp"

using namespace l1k;

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double best_of(int reps, F&& run) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_seconds();
        run();
        double dt = now_seconds() - t0;
        if (dt < best) best = dt;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    if (reps < 1) reps = 1;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; the parallel path degrades to serial\n");
#endif

    struct Case {
        int vars;
        int max_size;
    };
    const std::vector<Case> cases = {{2, 7}, {2, 8}, {3, 6}};

    std::printf("%-18s %10s %12s %12s %9s\n", "corpus", "formulas",
                "serial [s]", "parallel [s]", "speedup");
    for (const auto& c : cases) {
        auto corpus = enumerate_l1(default_name_vars(c.vars), c.max_size);
        RoundtripReport serial_report, parallel_report;
        double ts = best_of(reps, [&] { serial_report = roundtrip_serial(corpus); });
        double tp =
            best_of(reps, [&] { parallel_report = roundtrip_parallel(corpus); });

        bool same = serial_report.checked == parallel_report.checked &&
                    serial_report.provable == parallel_report.provable &&
                    serial_report.mismatches.size() ==
                        parallel_report.mismatches.size();
        std::string label = std::to_string(c.vars) + " vars, size<=" +
                            std::to_string(c.max_size);
        std::printf("%-18s %10zu %12.4f %12.4f %8.2fx%s\n", label.c_str(),
                    corpus.size(), ts, tp, ts / tp,
                    same ? "" : "  RESULTS DIFFER");
        if (!same) return 1;
        if (!serial_report.ok()) {
            std::printf("unexpected mismatches in corpus %s\n", label.c_str());
            return 1;
        }
    }
    return 0;
}

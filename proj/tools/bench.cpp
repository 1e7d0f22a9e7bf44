// Benchmark: the OpenMP kernels against their serial reference paths.
//
//   bench [xmax] [zeros-file]
//
// Covers the two parallel hot spots: the segmented Mertens scan (serial
// reference vs parallel) and the short sum over zeros (1 thread vs all).
// Each comparison also asserts that both paths produce identical results,
// which is the determinism contract the test suite relies on.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mertens/shortsum.hpp"
#include "mertens/sieve.hpp"
#include "mertens/zeros.hpp"

using namespace mertens;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

int threads_available() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t xmax = 20000000ull;
    if (argc > 1) xmax = std::strtoull(argv[1], nullptr, 10);
    std::string zeros_path = "data/zeros2750.txt";
    if (argc > 2)
        zeros_path = argv[2];
    else if (const char* env = std::getenv("MERTENS_ZEROS_PATH"); env && *env)
        zeros_path = env;

    const int nthreads = threads_available();
    std::printf("threads available: %d\n\n", nthreads);

    std::printf("mertens scan to %llu\n", (unsigned long long)xmax);
    auto t0 = std::chrono::steady_clock::now();
    MertensScan serial = mertens_scan(xmax, 0, false);
    const double t_serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    MertensScan parallel = mertens_scan(xmax, 0, true);
    const double t_parallel = seconds_since(t0);
    const bool scan_match = serial.m_at_xmax == parallel.m_at_xmax &&
                            serial.max_abs_m == parallel.max_abs_m &&
                            serial.argmax_abs == parallel.argmax_abs &&
                            serial.max_ratio == parallel.max_ratio;
    std::printf("  serial reference: %8.3f s   (M = %lld)\n", t_serial,
                serial.m_at_xmax);
    std::printf("  parallel:         %8.3f s   speedup %.2fx   results %s\n\n",
                t_parallel, t_serial / t_parallel,
                scan_match ? "identical" : "DIFFER");

    ZerosTable table = load_zeros(zeros_path);
    std::printf("short sum over %zu zeros (fast engine)\n", table.gamma.size());
    set_threads(1);
    t0 = std::chrono::steady_clock::now();
    ShortSumResult one = short_sum(table, 0, true);
    const double t_one = seconds_since(t0);
    set_threads(nthreads);
    t0 = std::chrono::steady_clock::now();
    ShortSumResult all = short_sum(table, 0, true);
    const double t_all = seconds_since(t0);
    const bool sum_match =
        one.sum.mid == all.sum.mid && one.sum.rad == all.sum.rad;
    std::printf("  1 thread:  %8.3f s\n", t_one);
    std::printf("  %d threads: %8.3f s   speedup %.2fx   sums %s\n", nthreads,
                t_all, t_one / t_all, sum_match ? "identical" : "DIFFER");

    return (scan_match && sum_match) ? 0 : 1;
}

// Benchmark of the two OpenMP kernels against their serial reference
// implementations.  Both pairs are required to produce identical results
// (bit-identical for the Monte-Carlo integrator), so the comparison is purely
// about wall time.

#include <chrono>
#include <cstdio>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "speczeta/combinatorics.hpp"
#include "speczeta/numoracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double timed(F&& f)
{
    const auto t0 = Clock::now();
    f();
    return seconds_since(t0);
}

void report(const char* name, double serial_s, double parallel_s, bool equal)
{
    std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s, equal ? "equal" : "DIFFER");
}

}  // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif

    using namespace speczeta;

    {
        std::vector<Integer> serial_hist, parallel_hist;
        const unsigned n = 10;
        const double serial_s   = timed([&] { serial_hist = circular_descent_histogram_serial(n); });
        const double parallel_s = timed([&] { parallel_hist = circular_descent_histogram(n); });
        report("circular descent histogram n=10", serial_s, parallel_s,
               serial_hist == parallel_hist);
    }

    {
        McConfig cfg;
        cfg.samples = 4000000;
        McResult serial_res{}, parallel_res{};
        const double alpha      = 2.0 * std::numbers::pi / 3.0;
        const double serial_s   = timed([&] { serial_res = mercer_integral_mc_serial(4, alpha, cfg); });
        const double parallel_s = timed([&] { parallel_res = mercer_integral_mc(4, alpha, cfg); });
        report("Mercer MC n=4, 4e6 samples", serial_s, parallel_s,
               serial_res.estimate == parallel_res.estimate &&
                   serial_res.std_error == parallel_res.std_error);
    }

    return 0;
}

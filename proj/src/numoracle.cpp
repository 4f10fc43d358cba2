#include "speczeta/numoracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "speczeta/errors.hpp"

namespace speczeta {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double base, unsigned exp)
{
    double result = 1.0;
    while (exp > 0) {
        if (exp & 1u) {
            result *= base;
        }
        base *= base;
        exp >>= 1;
    }
    return result;
}

}  // namespace

std::complex<double> dirichlet_L_series(unsigned n, const DirichletCharacter& chi,
                                        unsigned long terms)
{
    if (n < 1 || terms < 1) {
        throw Error("dirichlet_L_series: n and terms must be >= 1");
    }
    if (n == 1 && is_principal(chi)) {
        throw Divergent("dirichlet_L_series: L(1, principal) diverges");
    }
    const unsigned long N = chi.modulus;
    const unsigned long K = N * ((terms + N - 1) / N);
    std::vector<std::complex<double>> period(N);
    for (unsigned long j = 0; j < N; ++j) {
        period[j] = cyc_to_complex(char_eval(chi, static_cast<long>(j)));
    }
    std::complex<double> sum = 0.0;
    for (unsigned long k = K; k >= 1; --k) {  // small terms first
        sum += period[k % N] * ipow(1.0 / static_cast<double>(k), n);
    }
    return sum;
}

double hurwitz_zeta_series(unsigned n, const Rational& a, unsigned long terms)
{
    if (n < 2) {
        throw Error("hurwitz_zeta_series: n must be >= 2");
    }
    const double ad = to_double(a);
    if (!(ad > 0.0) || ad > 1.0) {
        throw Error("hurwitz_zeta_series: a must lie in (0, 1]");
    }
    double sum = 0.0;
    for (unsigned long k = terms; k-- > 0;) {
        sum += ipow(1.0 / (static_cast<double>(k) + ad), n);
    }
    const double edge = static_cast<double>(terms) + ad;
    return sum + std::pow(edge, 1.0 - static_cast<double>(n)) /
                     (static_cast<double>(n) - 1.0);
}

double spectral_sum_series(unsigned n, double alpha, unsigned long K)
{
    if (n < 1 || K < 1) {
        throw Error("spectral_sum_series: n and K must be >= 1");
    }
    if (std::sin(alpha / 2.0) == 0.0) {
        throw AlphaIsPole("spectral_sum_series: alpha is a multiple of 2 pi");
    }
    double sum = 0.0;
    for (unsigned long k = K; k >= 1; --k) {
        const double step = 2.0 * kPi * static_cast<double>(k);
        sum += ipow(1.0 / (step + alpha), n) + ipow(1.0 / (alpha - step), n);
    }
    return sum + ipow(1.0 / alpha, n);
}

std::complex<double> green_function(double s, double t, double alpha)
{
    if (s == t) {
        throw OnDiagonal("green_function: s = t");
    }
    const double half_sin = std::sin(alpha / 2.0);
    if (half_sin == 0.0) {
        throw AlphaIsPole("green_function: sin(alpha/2) = 0");
    }
    const double phase = alpha * (t - s) + (s < t ? -alpha / 2.0 : alpha / 2.0);
    const double scale = 1.0 / (2.0 * half_sin);
    return {std::cos(phase) * scale, std::sin(phase) * scale};
}

namespace {

constexpr unsigned kMaxMercerOrder = 32;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Counter-based generator: the draw is a pure function of its key, so any
// partition of the sample range across threads yields the same stream.
double uniform01(std::uint64_t seed, std::uint64_t sample, std::uint64_t attempt,
                 std::uint64_t dim)
{
    const std::uint64_t h =
        splitmix64(seed ^ splitmix64(sample ^ splitmix64(attempt ^ splitmix64(dim))));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::complex<double> mercer_sample(unsigned n, double alpha, std::uint64_t seed,
                                   std::uint64_t sample)
{
    std::array<double, kMaxMercerOrder> x;
    for (std::uint64_t attempt = 0;; ++attempt) {
        for (unsigned d = 0; d < n; ++d) {
            x[d] = uniform01(seed, sample, attempt, d);
        }
        bool distinct = true;
        for (unsigned d = 0; d < n && distinct; ++d) {
            distinct = x[d] != x[(d + 1) % n];
        }
        if (distinct) {
            break;
        }
    }
    std::complex<double> product = green_function(x[0], x[1 % n], alpha);
    for (unsigned d = 1; d < n; ++d) {
        product *= green_function(x[d], x[(d + 1) % n], alpha);
    }
    return product;
}

McResult mercer_impl(unsigned n, double alpha, const McConfig& cfg, bool parallel)
{
    if (n < 2) {
        throw Error("mercer_integral_mc: n must be >= 2 (the n = 1 integrand is "
                    "a one-variable diagonal average)");
    }
    if (n > kMaxMercerOrder) {
        throw InstanceTooLarge("mercer_integral_mc: n too large");
    }
    if (std::sin(alpha / 2.0) == 0.0) {
        throw AlphaIsPole("mercer_integral_mc: sin(alpha/2) = 0");
    }
    if (cfg.samples < 1 || cfg.batch_count < 1 || cfg.batch_count > cfg.samples) {
        throw Error("mercer_integral_mc: need samples >= batch_count >= 1");
    }
    const unsigned B = cfg.batch_count;
    // Batches are contiguous sample ranges; the remainder spreads over the
    // leading batches so sizes differ by at most one.
    std::vector<std::complex<double>> batch_sum(B);
    std::vector<std::uint64_t> batch_begin(B + 1);
    const std::uint64_t base = cfg.samples / B;
    const std::uint64_t extra = cfg.samples % B;
    batch_begin[0] = 0;
    for (unsigned b = 0; b < B; ++b) {
        batch_begin[b + 1] = batch_begin[b] + base + (b < extra ? 1 : 0);
    }
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long b = 0; b < static_cast<long>(B); ++b) {
        std::complex<double> sum = 0.0;
        for (std::uint64_t s = batch_begin[b]; s < batch_begin[b + 1]; ++s) {
            sum += mercer_sample(n, alpha, cfg.seed, s);
        }
        batch_sum[b] = sum;
    }
    // Reduce in fixed batch order so thread count never changes the result.
    std::complex<double> total = 0.0;
    std::complex<double> mean_of_means = 0.0;
    for (unsigned b = 0; b < B; ++b) {
        total += batch_sum[b];
        mean_of_means += batch_sum[b] /
                         static_cast<double>(batch_begin[b + 1] - batch_begin[b]);
    }
    mean_of_means /= static_cast<double>(B);
    const std::complex<double> estimate =
        total / static_cast<double>(cfg.samples);
    double variance = 0.0;
    if (B > 1) {
        for (unsigned b = 0; b < B; ++b) {
            const std::complex<double> mean =
                batch_sum[b] /
                static_cast<double>(batch_begin[b + 1] - batch_begin[b]);
            variance += std::norm(mean - mean_of_means);
        }
        variance /= static_cast<double>(B) * static_cast<double>(B - 1);
    }
    return {estimate, std::sqrt(variance)};
}

}  // namespace

McResult mercer_integral_mc(unsigned n, double alpha, const McConfig& cfg)
{
    return mercer_impl(n, alpha, cfg, /*parallel=*/true);
}

McResult mercer_integral_mc_serial(unsigned n, double alpha, const McConfig& cfg)
{
    return mercer_impl(n, alpha, cfg, /*parallel=*/false);
}

std::complex<double> special_value_numeric(const SpecialValue& v)
{
    return cyc_to_complex(v.coeff) *
           std::pow(kPi, static_cast<double>(v.pi_power));
}

}  // namespace speczeta

#pragma once

#include <complex>
#include <cstdint>

#include "speczeta/characters.hpp"
#include "speczeta/lvalues.hpp"
#include "speczeta/numbers.hpp"

namespace speczeta {

// Floating-point oracles, deliberately independent of the exact routes: plain
// truncated series, the closed-form Green function, and a Monte-Carlo Mercer
// integral.  Everything here is double precision by design.

// Partial sum of L(n, chi) truncated at a whole number of periods
// N * ceil(terms / N).  For n >= 2 the tail is < N / ((n-1) K^(n-1)); for
// n = 1 full-period grouping leaves an O(N/K) error.  L(1, principal)
// diverges and throws.
std::complex<double> dirichlet_L_series(unsigned n, const DirichletCharacter& chi,
                                        unsigned long terms);

// zeta(n, a) = sum_{k>=0} 1/(k+a)^n for a in (0, 1], as a truncated sum plus
// the integral tail (terms + a)^(1-n)/(n-1); absolute error < (terms+a)^-n.
double hurwitz_zeta_series(unsigned n, const Rational& a, unsigned long terms);

// Symmetric partial sum  sum_{k=-K}^{K} 1/(2 k pi + alpha)^n, accumulated in
// +-k pairs from the tails inward.  For n = 1 this converges O(1/K) to the
// principal value (1/2)cot(alpha/2); the alpha = pi sum collapses to its last
// unpaired term 1/((2K+1) pi).
double spectral_sum_series(unsigned n, double alpha, unsigned long K);

// Green function of the first-order circle operator:
//   G(s, t) = e^(i alpha (t-s)) / (2 sin(alpha/2)) * e^(-+ i alpha/2)
// with the minus sign for s < t and the plus sign for s > t.
std::complex<double> green_function(double s, double t, double alpha);

struct McConfig {
    unsigned long samples = 1000000;
    std::uint64_t seed = 0x243F6A8885A308D3ull;
    unsigned batch_count = 100;
};

struct McResult {
    std::complex<double> estimate;
    double std_error;  // from batch means, combined over re/im
};

// Monte-Carlo estimate of the n-fold Mercer integral
//   integral over [0,1]^n of G(x_1,x_2) G(x_2,x_3) ... G(x_n,x_1),
// whose exact value is the spectral sum of order n at angle alpha.  Each
// factor is evaluated directly through green_function; points with coinciding
// consecutive coordinates (a measure-zero set) are resampled.  Identical
// McConfig values reproduce bit-identical results, with batches distributed
// across OpenMP threads; the _serial variant is the single-threaded reference
// implementation and returns the exact same bits.
McResult mercer_integral_mc(unsigned n, double alpha, const McConfig& cfg);
McResult mercer_integral_mc_serial(unsigned n, double alpha, const McConfig& cfg);

// cyc_to_complex(v.coeff) * pi^(v.pi_power).
std::complex<double> special_value_numeric(const SpecialValue& v);

}  // namespace speczeta

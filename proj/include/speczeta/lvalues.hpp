#pragma once

#include "speczeta/characters.hpp"
#include "speczeta/cyclotomic.hpp"
#include "speczeta/numbers.hpp"

namespace speczeta {

// A closed-form special value coeff * pi^pi_power, with coeff an exact
// cyclotomic number.  Addition requires matching powers of pi;
// multiplication adds them.
struct SpecialValue {
    int pi_power = 0;
    CycNum coeff;

    SpecialValue operator+(const SpecialValue& rhs) const;
    SpecialValue operator*(const SpecialValue& rhs) const;
    SpecialValue operator*(const Rational& scalar) const;
    bool operator==(const SpecialValue& rhs) const;
    bool operator!=(const SpecialValue& rhs) const { return !(*this == rhs); }

    std::string str() const;
};

// The spectral series  sum_{k in Z} 1/(2k*pi + alpha)^n  at a rational angle
// alpha = 2*pi*p/q (stored in lowest terms; q never divides p).
struct SpectralSumSpec {
    long p;
    unsigned long q;
    unsigned n;

    // Reduces p/q and validates; AlphaIsPole when q | p, Error on q = 0 or
    // n = 0.
    static SpectralSumSpec make(long p, unsigned long q, unsigned n);

    double alpha() const;  // 2*pi*p/q
};

enum class Parity { Even, Odd };

// Exact value of the symmetric-limit spectral series: (1/2)cot(alpha/2) for
// n = 1 and, for n >= 2,
//   1/(2^n (n-1)! sin^n(alpha/2)) * sum_l cos((n-2l) p pi/q) Abar(n,l).
// The result is algebraic (pi_power 0), living in Q(zeta_{4q}).
SpecialValue spectral_sum(const SpectralSumSpec& spec);

// S(n) = sum_{k in Z} 1/(4k+1)^n = (pi/2)^n * spectral_sum(alpha = pi/2, n);
// checked internally against (1 - 2^-n) zeta(n) for even n and L(n, chi_4)
// for odd n.
SpecialValue s_value(unsigned n);

// zeta(2n) = (-1)^(n+1) (2 pi)^(2n) B_{2n} / (2 (2n)!).
SpecialValue zeta_even(unsigned n);

// L(2n+1, chi_4) = pi^(2n+1) * (2n-th secant number) / (2^(2n+2) (2n)!).
SpecialValue l_chi4_odd(unsigned n);

// L(n, chi) for arbitrary chi mod N >= 2 with chi(-1) = (-1)^n, via the
// trigonometric closed form
//   (pi^n / (2 (n-1)! N^n)) sum_m chi(m) sin^-n(m pi/N)
//       * sum_l cos((n-2l) m pi/N) Abar(n,l)
// (n = 1, odd chi: (pi/2N) sum_m chi(m) cot(m pi/N)).  The N = 2 case is
// cross-checked against the Euler-product value before being returned.
SpecialValue dirichlet_L_closed(unsigned n, const DirichletCharacter& chi);

// L(n, chi) for primitive chi with matching parity via
//   -chi(-1) G(chi) (2 pi sqrt(-1))^n / (2 N n!) * sum_j conj(chi)(j) B_n(j/N).
SpecialValue dirichlet_L_leopoldt(unsigned n, const DirichletCharacter& chi);

// zeta_{Z/NZ}(n) = sum_{m=1}^{N-1} sin^-2n(m pi/N); the cyclotomic sum is
// provably rational and returned as such.
Rational graph_zeta(unsigned n, unsigned long N);

// Verlinde number V_g(N) by Zagier's polynomial
//   sum_{s=0}^{g} (-1)^(s-1) 2^(2s) B_{2s}/(2s)! c_{g,s} N^(2s);
// equals graph_zeta(g, N).
Rational verlinde_zagier(unsigned g, unsigned long N);

// L_{Z/NZ}(n, chi) = sum_m chi(m)/sin^2n(m pi/N), or the twisted variant
// with an extra cot(m pi/N) factor.  Values are memoized per (N, chi, n).
CycNum graph_L(unsigned n, const DirichletCharacter& chi, bool twisted);

// L(2n, chi) (even chi) resp. L(2n+1, chi) (odd chi) assembled from graph
// L-values with the a- resp. b-coefficients.
SpecialValue L_from_graph(unsigned n, const DirichletCharacter& chi);

// The inverse direction: graph L-values from Dirichlet L-values through the
// c-coefficients; the powers of pi cancel exactly.
CycNum graph_from_L(unsigned n, const DirichletCharacter& chi);

// zeta(2n) recovered from cycle-graph zeta values:
//   (N^2n - 1) zeta(2n) = (pi^2n / (2 (2n-1)!)) sum_i a_{n,i} zeta_{Z/NZ}(i).
SpecialValue zeta_from_spectral(unsigned n, unsigned long N);

// Graph L-values directly from Bernoulli polynomials and the inverse Gauss
// sum (primitive chi only).  The odd case carries a global sign correcting
// for G(chi) G(conj chi) = chi(-1) N, which is -N for odd chi.
CycNum graph_L_via_bernoulli(unsigned n, const DirichletCharacter& chi);

// Exact mean of L(s, chi) over characters of the given parity mod N:
// parity Even averages L(2n, chi) over even chi; parity Odd averages
// L(2n-1, chi) over odd chi.  Closed form in Q(zeta_4N).
SpecialValue mean_L_closed_form(unsigned n, unsigned long N, Parity parity);

// The same mean by brute force: (2/phi(N)) sum of dirichlet_L_closed over
// all characters of the given parity.
SpecialValue mean_L_bruteforce(unsigned n, unsigned long N, Parity parity);

}  // namespace speczeta

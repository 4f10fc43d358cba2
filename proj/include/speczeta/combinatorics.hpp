#pragma once

#include <vector>

#include "speczeta/numbers.hpp"
#include "speczeta/polyq.hpp"

namespace speczeta {

// A circular n-permutation: the arrangement sigma(1..n) read around a circle,
// so the pair (sigma(n), sigma(1)) also counts toward descents/ascents.
struct CircularPermutation {
    std::vector<unsigned> arrangement;

    unsigned size() const { return static_cast<unsigned>(arrangement.size()); }
    unsigned descents() const;  // positions i with sigma(i) > sigma(i+1), cyclically
    unsigned ascents() const { return size() - descents(); }
    // The eigenvalue-style weight m(sigma) = ascents - descents = n - 2*descents.
    long weight_m() const
    {
        return static_cast<long>(ascents()) - static_cast<long>(descents());
    }
};

// Eulerian numbers A(n, l): permutations of {1..n} with exactly l-1 descents,
// computed by the explicit alternating sum
//   A(n,l) = sum_{i=0}^{l} (-1)^i C(n+1,i) (l-i)^n.
// Returns 0 for l <= 0 or l > n; requires n >= 1.
Integer eulerian(unsigned n, long l);

// Circular Eulerian numbers: Abar(n, l) = A(n-1, l); circular n-permutations
// with exactly l circular descents.  Requires n >= 2.
Integer circular_eulerian(unsigned n, long l);

// Same quantity by direct enumeration of all (n-1)! circular permutations,
// fixing sigma(1) = n to kill rotational duplicates.  Guarded by
// InstanceTooLarge for n > 10.
Integer circular_eulerian_bruteforce(unsigned n, long l);

// Enumeration histograms behind the brute-force oracle: entry [l-1] counts
// circular n-permutations with l circular descents (l = 1..n-1).  The plain
// version partitions the permutation space across OpenMP threads; the
// _serial version is the single-threaded reference implementation.
std::vector<Integer> circular_descent_histogram(unsigned n);
std::vector<Integer> circular_descent_histogram_serial(unsigned n);

// Multiplicity M_m of weight m among circular n-permutations:
// Abar(n, (n-m)/2) when m = n (mod 2) and |m| <= n-2, and 0 otherwise.
Integer class_number_M(unsigned n, long m);

// One row of Eulerian values: A(n, 1..n), or Abar(n, 1..n-1) when circular.
struct EulerianTable {
    unsigned n;
    bool circular;
    std::vector<Integer> values;  // values[l-1]
};
EulerianTable eulerian_table(unsigned n, bool circular);

// B_0..B_{k_max} from the recurrence sum_{j=0}^{k} C(k+1,j) B_j = 0 (k >= 1).
std::vector<Rational> bernoulli_numbers(unsigned k_max);

// B_n(x) = sum_j C(n,j) B_j x^(n-j).
PolyQ bernoulli_polynomial(unsigned n);

// Secant numbers 1, 1, 5, 61, 1385, ...: entry [k] is the 2k-th secant
// number, i.e. (2k)! times the t^(2k) coefficient of sec(t), obtained by
// exact series reciprocal of the cosine series.  (In the signed Euler-number
// convention E_{2k} this is (-1)^k E_{2k}; the library keeps the positive
// values, matching sec's positive Taylor coefficients.)
std::vector<Integer> secant_numbers(unsigned k_max);

enum class ChebKind { T, U };

// Coefficient tables for even Chebyshev polynomials written in powers of
// sin:  t(k,i) = (-1)^(k-i) 2^(2i) (k/(k+i)) C(k+i, k-i)  with the special
// value t(0,0) = 1/2, and  u(k,i) = (-1)^(k-i) 2^(2i) C(k+i, k-i).
// Returns 0 outside 0 <= i <= k.
Rational chebyshev_coeff(unsigned k, long i, ChebKind kind);

// B_{2n} and the 2n-th secant number recovered from circular Eulerian
// numbers; the quarter-period cosines involved take values in {0, +-1} resp.
// {+-1/sqrt2} and are evaluated by exact case analysis mod 4.
Rational bernoulli_via_eulerian(unsigned n);
Rational secant_via_eulerian(unsigned n);  // NonIntegerResult if not integral

}  // namespace speczeta

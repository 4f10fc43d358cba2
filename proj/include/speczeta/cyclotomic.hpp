#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "speczeta/numbers.hpp"
#include "speczeta/polyq.hpp"

namespace speczeta {

// --- small number-theory helpers -----------------------------------------

unsigned long gcd_u(unsigned long a, unsigned long b);
unsigned long lcm_u(unsigned long a, unsigned long b);
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);
unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);  // ascending

// M-th cyclotomic polynomial over Q (monic, integer coefficients), computed
// by dividing x^M - 1 by the cyclotomic polynomials of the proper divisors.
// The returned reference stays valid for the lifetime of the process.
const PolyQ& cyclotomic_polynomial(unsigned long M);

// --- elements of cyclotomic fields ----------------------------------------

// An element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^(phi(M)-1),
// i.e. a polynomial in zeta_M reduced mod the M-th cyclotomic polynomial.
// The coefficient vector always has length exactly phi(M).
//
// Values are *not* automatically moved to a smaller conductor even when they
// would fit (e.g. a rational constructed at conductor 12 stays at 12);
// binary operations on mismatched conductors promote both sides to the lcm.
class CycNum {
public:
    CycNum();  // zero at conductor 1
    static CycNum from_rational(const Rational& r, unsigned long M = 1);
    // zeta_M^k (k may be negative; it is folded mod M).
    static CycNum root_of_unity(unsigned long M, long k);
    // Reduce sum_i coeffs[i] * zeta_M^i; coeffs may have any length.
    static CycNum from_powers(unsigned long M, std::vector<Rational> coeffs);

    unsigned long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // The value as a rational; throws NonRationalResult if there are
    // nonconstant coordinates.
    Rational as_rational() const;

    // Same value seen in Q(zeta_M2); requires conductor() | M2.
    CycNum promoted(unsigned long M2) const;

    CycNum operator-() const;
    CycNum operator+(const CycNum& rhs) const;
    CycNum operator-(const CycNum& rhs) const;
    CycNum operator*(const CycNum& rhs) const;
    CycNum operator*(const Rational& scalar) const;
    CycNum& operator+=(const CycNum& rhs);

    bool operator==(const CycNum& rhs) const;
    bool operator!=(const CycNum& rhs) const { return !(*this == rhs); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // the conductor's cyclotomic polynomial (with monic normalization of
    // every remainder to keep coefficient growth in check).
    CycNum inverse() const;

    CycNum pow(long k) const;  // negative k goes through inverse()

    // Complex embedding zeta_M -> exp(2*pi*i/M).
    std::complex<double> to_complex() const;

    std::string str() const;  // uses "z" for zeta_conductor

private:
    unsigned long conductor_;
    std::vector<Rational> c_;
};

// Accumulator for sums of the form  sum_k  scale_k * zeta_M^(e_k) * z_k
// with all z_k at conductors dividing M.  Terms are gathered as exponent
// buckets mod M and the whole sum is reduced mod the cyclotomic polynomial
// once, which is what makes large character sums affordable.
class CycAccum {
public:
    explicit CycAccum(unsigned long M);

    unsigned long conductor() const { return M_; }

    // Add scale * zeta_M^exponent.
    void add_monomial(long exponent, const Rational& scale);
    // Add scale * zeta_M^exponent * z; requires z.conductor() | M.
    void add(const CycNum& z, long exponent, const Rational& scale = Rational(1));

    CycNum result() const;

private:
    unsigned long M_;
    std::vector<Rational> v_;  // exponent-indexed, length M
};

// --- exact trigonometric values -------------------------------------------

enum class TrigKind { Sin, Cos, Cot };

// sin(m*pi/N), cos(m*pi/N), cot(m*pi/N) as elements of Q(zeta_{4N}).
// Sin and Cot require N not to divide m (the value would be 0 resp. a pole);
// violation throws PoleAtInteger.
CycNum trig_value(unsigned long N, long m, TrigKind kind);

// 1/sin(m*pi/N).  Same domain as Sin/Cot.  Computed without polynomial
// division: with y = zeta_K a primitive root of unity, 1/(y - 1) equals
// (1/K) * sum_{i=0}^{K-1} i*y^i, which turns the reciprocal into a plain
// exponent sum.
CycNum inv_sin(unsigned long N, long m);

std::complex<double> cyc_to_complex(const CycNum& z);

}  // namespace speczeta

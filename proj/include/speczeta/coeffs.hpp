#pragma once

#include <vector>

#include "speczeta/numbers.hpp"

namespace speczeta {

// Coefficients of the Laurent expansion of (sin x)^(-2n): entry [s] is
// c_{n,s}, the coefficient of x^(2n-2s) in (x/sin x)^(2n), for s = 0..n.
// Always c_{n,n} = 1.
std::vector<Rational> laurent_c(unsigned n);

// a_{n,i} = 2 sum_{l=1}^{i} (-1)^(n-l) t(n-l, n-i) Abar(2n, l), i = 1..n,
// with the t(0,0) = 1/2 table convention.  Entry [i-1] is a_{n,i}.
std::vector<Rational> coeff_a(unsigned n);

// b_{n,i} via its own u-sum, cross-checked against i * a_{n,i}; throws
// InternalIdentityViolation if the two routes ever disagree.
std::vector<Rational> coeff_b(unsigned n);

// Row n of diag(1!, 3!, ..., (2n-1)!) * C^(-1), solved by exact substitution
// on the lower-triangular system; an independent route to coeff_a.
std::vector<Rational> coeff_a_via_inverse(unsigned n);

// Componentwise check of row n of the matrix identity
// A * C = diag(1!, 3!, ..., (2n-1)!), with A from the Eulerian/Chebyshev sum
// and C from the Laurent series.  Failures are reported, never thrown.
struct ACCheck {
    unsigned s;
    Rational lhs;
    Rational rhs;
    bool pass;
};
struct ACReport {
    unsigned n;
    std::vector<ACCheck> checks;
    bool all_pass;
};
ACReport verify_AC_identity(unsigned n);

// Lower-triangular coefficient matrix of one of the three families
// (entries with column > row are zero; rows and columns run 1..n).
enum class CoeffFamily { A, B, C };
struct CoeffMatrix {
    unsigned n;
    CoeffFamily family;
    std::vector<std::vector<Rational>> rows;  // rows[i-1] has i entries

    const Rational& entry(unsigned i, unsigned s) const { return rows[i - 1][s - 1]; }
};
CoeffMatrix coeff_matrix(unsigned n, CoeffFamily family);

}  // namespace speczeta

#pragma once

#include <string>
#include <vector>

#include "speczeta/numbers.hpp"
#include "speczeta/polyq.hpp"

namespace speczeta {

// Truncated Laurent series over Q.  A value represents knowledge of every
// coefficient of exponent < truncation_order(); exponents at or above that
// are undetermined.  Exact polynomials/Laurent polynomials use the sentinel
// kExactOrder ("all further coefficients are genuinely zero").
//
// Stored coefficients run from valuation() upward; coefficients inside the
// known window that are not stored are zero.
class SeriesQ {
public:
    static constexpr int kExactOrder = 1 << 28;

    SeriesQ() : valuation_(0), trunc_(kExactOrder) {}  // exact zero

    static SeriesQ from_poly(const PolyQ& p, int trunc = kExactOrder);
    static SeriesQ monomial(int exp, const Rational& coeff = Rational(1),
                            int trunc = kExactOrder);
    // coeffs[i] is the coefficient of x^(valuation + i).
    static SeriesQ from_coeffs(int valuation, std::vector<Rational> coeffs,
                               int trunc);

    bool has_terms() const { return !coeffs_.empty(); }
    bool is_exact() const { return trunc_ == kExactOrder; }
    int truncation_order() const { return trunc_; }
    // Lowest exponent with nonzero coefficient; requires has_terms().
    int valuation() const;

    // Coefficient of x^exp.  Throws if exp >= truncation_order(), i.e. the
    // coefficient was lost to truncation.
    Rational coeff(int exp) const;

    SeriesQ operator-() const;
    SeriesQ operator+(const SeriesQ& rhs) const;
    SeriesQ operator-(const SeriesQ& rhs) const;
    SeriesQ operator*(const SeriesQ& rhs) const;
    SeriesQ operator*(const Rational& scalar) const;

    // Multiply by x^k (exact shift).
    SeriesQ shifted(int k) const;

    // Forget coefficients at exponents >= new_trunc.
    SeriesQ truncated(int new_trunc) const;

    // Multiplicative inverse as a Laurent series.  Requires a nonzero
    // leading coefficient (ZeroLeadingCoefficient otherwise) and a finite
    // truncation order — clip an exact series with truncated() first to
    // choose the working precision.
    SeriesQ reciprocal() const;

    SeriesQ pow(unsigned k) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();

    int valuation_;  // exponent of coeffs_[0]; meaningless when no terms
    std::vector<Rational> coeffs_;
    int trunc_;
};

}  // namespace speczeta

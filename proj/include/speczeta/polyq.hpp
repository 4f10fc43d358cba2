#pragma once

#include <string>
#include <utility>
#include <vector>

#include "speczeta/numbers.hpp"

namespace speczeta {

// Dense univariate polynomial over Q, coefficients stored ascending.
// Invariant: no trailing zero coefficients (the zero polynomial stores
// nothing and reports degree -1).
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(const Rational& constant);
    explicit PolyQ(std::vector<Rational> coeffs);  // ascending, normalized here

    static PolyQ monomial(std::size_t deg, const Rational& coeff = Rational(1));

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of x^i (zero beyond the stored range).
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;  // requires nonzero

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& rhs) const;
    PolyQ operator-(const PolyQ& rhs) const;
    PolyQ operator*(const PolyQ& rhs) const;
    PolyQ operator*(const Rational& scalar) const;

    bool operator==(const PolyQ& rhs) const { return coeffs_ == rhs.coeffs_; }

    // Euclidean division: returns (quotient, remainder) with
    // deg(remainder) < deg(divisor).  Throws DivisionByZero on zero divisor.
    std::pair<PolyQ, PolyQ> divmod(const PolyQ& divisor) const;

    Rational eval(const Rational& x) const;

    // Human-readable form, e.g. "x^2 - 1/2*x + 3".
    std::string str(const std::string& var = "x") const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

}  // namespace speczeta

#include "speczeta/polyq.hpp"

#include <sstream>

#include "speczeta/errors.hpp"

namespace speczeta {

namespace {
const Rational kZero(0);
}

PolyQ::PolyQ(const Rational& constant)
{
    if (constant != 0)
        coeffs_.push_back(constant);
}

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

PolyQ PolyQ::monomial(std::size_t deg, const Rational& coeff)
{
    PolyQ p;
    if (coeff != 0) {
        p.coeffs_.assign(deg + 1, Rational(0));
        p.coeffs_[deg] = coeff;
    }
    return p;
}

void PolyQ::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& PolyQ::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& PolyQ::leading() const
{
    if (coeffs_.empty())
        throw DivisionByZero("PolyQ::leading: zero polynomial");
    return coeffs_.back();
}

PolyQ PolyQ::operator-() const
{
    PolyQ r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& rhs) const
{
    PolyQ r;
    r.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        r.coeffs_[i] += rhs.coeffs_[i];
    r.normalize();
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& rhs) const
{
    return *this + (-rhs);
}

PolyQ PolyQ::operator*(const PolyQ& rhs) const
{
    if (is_zero() || rhs.is_zero())
        return PolyQ();
    PolyQ r;
    r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            if (rhs.coeffs_[j] != 0)
                r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    r.normalize();
    return r;
}

PolyQ PolyQ::operator*(const Rational& scalar) const
{
    if (scalar == 0)
        return PolyQ();
    PolyQ r(*this);
    for (auto& c : r.coeffs_)
        c *= scalar;
    return r;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const
{
    if (divisor.is_zero())
        throw DivisionByZero("PolyQ::divmod: division by zero polynomial");
    PolyQ quot;
    PolyQ rem(*this);
    const long dd = divisor.degree();
    if (rem.degree() >= dd)
        quot.coeffs_.assign(rem.degree() - dd + 1, Rational(0));
    while (rem.degree() >= dd) {
        const long shift = rem.degree() - dd;
        Rational factor  = rem.leading() / divisor.leading();
        quot.coeffs_[shift] = factor;
        // rem -= factor * x^shift * divisor (leading term cancels exactly)
        for (long i = 0; i <= dd; ++i)
            rem.coeffs_[shift + i] -= factor * divisor.coeffs_[i];
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

Rational PolyQ::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string PolyQ::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        Rational mag   = neg ? Rational(-c) : c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        const bool unit = (mag == 1) && i != 0;
        if (!unit)
            out << format_rational(mag);
        if (i > 0) {
            if (!unit)
                out << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace speczeta

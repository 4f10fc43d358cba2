#include "speczeta/seriesq.hpp"

#include <algorithm>
#include <sstream>

#include "speczeta/errors.hpp"

namespace speczeta {

namespace {

// trunc + shift without overflowing the exact sentinel.
int shift_trunc(int trunc, int k)
{
    if (trunc == SeriesQ::kExactOrder)
        return trunc;
    return trunc + k;
}

}  // namespace

SeriesQ SeriesQ::from_poly(const PolyQ& p, int trunc)
{
    std::vector<Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
    return from_coeffs(0, std::move(coeffs), trunc);
}

SeriesQ SeriesQ::monomial(int exp, const Rational& coeff, int trunc)
{
    return from_coeffs(exp, {coeff}, trunc);
}

SeriesQ SeriesQ::from_coeffs(int valuation, std::vector<Rational> coeffs,
                             int trunc)
{
    SeriesQ s;
    s.valuation_ = valuation;
    s.coeffs_    = std::move(coeffs);
    s.trunc_     = trunc;
    s.normalize();
    return s;
}

void SeriesQ::normalize()
{
    // Drop anything at or above the truncation order.
    if (trunc_ != kExactOrder) {
        const long keep = static_cast<long>(trunc_) - valuation_;
        if (keep <= 0)
            coeffs_.clear();
        else if (static_cast<long>(coeffs_.size()) > keep)
            coeffs_.resize(static_cast<std::size_t>(keep));
    }
    // Strip zero coefficients at both ends of the stored window.
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
        valuation_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        valuation_ = 0;
}

int SeriesQ::valuation() const
{
    if (coeffs_.empty())
        throw Error("SeriesQ::valuation: no known nonzero term");
    return valuation_;
}

Rational SeriesQ::coeff(int exp) const
{
    if (exp >= trunc_)
        throw Error("SeriesQ::coeff: exponent " + std::to_string(exp) +
                    " is beyond truncation order " + std::to_string(trunc_));
    const long i = static_cast<long>(exp) - valuation_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

SeriesQ SeriesQ::operator-() const
{
    SeriesQ r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

SeriesQ SeriesQ::operator+(const SeriesQ& rhs) const
{
    const int trunc = std::min(trunc_, rhs.trunc_);
    if (coeffs_.empty() && rhs.coeffs_.empty())
        return from_coeffs(0, {}, trunc);
    const int lo =
        coeffs_.empty()       ? rhs.valuation_
        : rhs.coeffs_.empty() ? valuation_
                              : std::min(valuation_, rhs.valuation_);
    const int hi_a = coeffs_.empty()
                         ? lo
                         : valuation_ + static_cast<int>(coeffs_.size());
    const int hi_b = rhs.coeffs_.empty()
                         ? lo
                         : rhs.valuation_ + static_cast<int>(rhs.coeffs_.size());
    const int hi = std::max(hi_a, hi_b);
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(valuation_ + static_cast<int>(i) - lo)] +=
            coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(rhs.valuation_ + static_cast<int>(i) -
                                     lo)] += rhs.coeffs_[i];
    return from_coeffs(lo, std::move(out), trunc);
}

SeriesQ SeriesQ::operator-(const SeriesQ& rhs) const
{
    return *this + (-rhs);
}

SeriesQ SeriesQ::operator*(const SeriesQ& rhs) const
{
    // Truncation of a product: a term of the result at exponent e mixes
    // unknown coefficients of one factor with the lowest term of the other
    // as soon as e >= trunc_a + val_b (or symmetrically), so the result is
    // known strictly below the smaller of those two bounds.
    int trunc = kExactOrder;
    if (trunc_ != kExactOrder)
        trunc = std::min(trunc,
                         shift_trunc(trunc_, rhs.coeffs_.empty()
                                                 ? 0
                                                 : rhs.valuation_));
    if (rhs.trunc_ != kExactOrder)
        trunc = std::min(trunc, shift_trunc(rhs.trunc_,
                                            coeffs_.empty() ? 0 : valuation_));
    if (coeffs_.empty() || rhs.coeffs_.empty())
        return from_coeffs(0, {}, trunc);
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                              Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            if (rhs.coeffs_[j] != 0)
                out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return from_coeffs(valuation_ + rhs.valuation_, std::move(out), trunc);
}

SeriesQ SeriesQ::operator*(const Rational& scalar) const
{
    SeriesQ r(*this);
    for (auto& c : r.coeffs_)
        c *= scalar;
    r.normalize();
    return r;
}

SeriesQ SeriesQ::shifted(int k) const
{
    SeriesQ r(*this);
    r.valuation_ += k;
    r.trunc_ = shift_trunc(r.trunc_, k);
    if (r.coeffs_.empty())
        r.valuation_ = 0;
    return r;
}

SeriesQ SeriesQ::truncated(int new_trunc) const
{
    SeriesQ r(*this);
    r.trunc_ = std::min(r.trunc_, new_trunc);
    r.normalize();
    return r;
}

SeriesQ SeriesQ::reciprocal() const
{
    if (coeffs_.empty())
        throw ZeroLeadingCoefficient(
            "SeriesQ::reciprocal: series has no nonzero term");
    if (trunc_ == kExactOrder)
        throw Error(
            "SeriesQ::reciprocal: choose a finite truncation order first "
            "(use truncated())");
    const int v  = valuation_;
    const long L = static_cast<long>(trunc_) - v;  // known relative length
    std::vector<Rational> b(static_cast<std::size_t>(L), Rational(0));
    const Rational& a0 = coeffs_[0];
    b[0]               = Rational(1) / a0;
    for (long k = 1; k < L; ++k) {
        Rational acc(0);
        const long jmax =
            std::min<long>(k, static_cast<long>(coeffs_.size()) - 1);
        for (long j = 1; j <= jmax; ++j)
            if (coeffs_[static_cast<std::size_t>(j)] != 0)
                acc += coeffs_[static_cast<std::size_t>(j)] *
                       b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -acc / a0;
    }
    return from_coeffs(-v, std::move(b), trunc_ - 2 * v);
}

SeriesQ SeriesQ::pow(unsigned k) const
{
    SeriesQ acc = from_coeffs(0, {Rational(1)}, kExactOrder);
    SeriesQ base(*this);
    while (k > 0) {
        if (k & 1u)
            acc = acc * base;
        k >>= 1u;
        if (k > 0)
            base = base * base;
    }
    return acc;
}

std::string SeriesQ::str(const std::string& var) const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const int e       = valuation_ + static_cast<int>(i);
        const Rational& c = coeffs_[i];
        const bool neg    = c < 0;
        Rational mag      = neg ? Rational(-c) : c;
        out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first           = false;
        const bool unit = (mag == 1) && e != 0;
        if (!unit)
            out << format_rational(mag);
        if (e != 0) {
            if (!unit)
                out << "*";
            out << var;
            if (e != 1)
                out << "^" << e;
        }
    }
    if (first)
        out << "0";
    if (trunc_ != kExactOrder)
        out << " + O(" << var << "^" << trunc_ << ")";
    return out.str();
}

}  // namespace speczeta

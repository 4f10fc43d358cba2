#include "speczeta/cyclotomic.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "speczeta/errors.hpp"

namespace speczeta {

// --- number theory ---------------------------------------------------------

unsigned long gcd_u(unsigned long a, unsigned long b)
{
    while (b != 0) {
        const unsigned long t = a % b;
        a                     = b;
        b                     = t;
    }
    return a;
}

unsigned long lcm_u(unsigned long a, unsigned long b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / gcd_u(a, b) * b;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n)
{
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1u);
    return out;
}

unsigned long euler_phi(unsigned long n)
{
    if (n == 0)
        return 0;
    unsigned long phi = n;
    for (const auto& [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

std::vector<unsigned long> divisors(unsigned long n)
{
    std::vector<unsigned long> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        unsigned long pk       = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- cyclotomic polynomials and reduction ----------------------------------

namespace {

std::mutex cache_mutex;

const PolyQ& cyclotomic_polynomial_locked(
    unsigned long M, std::unordered_map<unsigned long, std::unique_ptr<PolyQ>>& cache)
{
    auto it = cache.find(M);
    if (it != cache.end())
        return *it->second;
    // x^M - 1 divided by the cyclotomic polynomials of all proper divisors.
    std::vector<Rational> xm(M + 1, Rational(0));
    xm[0] = Rational(-1);
    xm[M] = Rational(1);
    PolyQ p{std::vector<Rational>(std::move(xm))};
    for (unsigned long d : divisors(M)) {
        if (d == M)
            continue;
        const PolyQ& phi_d = cyclotomic_polynomial_locked(d, cache);
        auto [q, r]        = p.divmod(phi_d);
        if (!r.is_zero())
            throw InternalIdentityViolation(
                "cyclotomic polynomial division left a remainder");
        p = std::move(q);
    }
    auto stored = std::make_unique<PolyQ>(std::move(p));
    const PolyQ& ref = *stored;
    cache.emplace(M, std::move(stored));
    return ref;
}

// Per-conductor data for fast reduction mod Phi_M: the relation
// zeta^deg = -(tail), with tail the sub-leading part of Phi_M.
struct ReduceInfo {
    std::size_t deg;
    std::vector<std::pair<std::size_t, Rational>> tail;  // nonzero entries
};

const ReduceInfo& reduce_info(unsigned long M)
{
    static std::unordered_map<unsigned long, std::unique_ptr<ReduceInfo>> cache;
    static std::mutex reduce_mutex;
    const PolyQ& phi = cyclotomic_polynomial(M);  // before taking our lock
    std::lock_guard<std::mutex> lock(reduce_mutex);
    auto it = cache.find(M);
    if (it != cache.end())
        return *it->second;
    auto info        = std::make_unique<ReduceInfo>();
    info->deg        = static_cast<std::size_t>(phi.degree());
    for (std::size_t i = 0; i < info->deg; ++i)
        if (phi.coeff(i) != 0)
            info->tail.emplace_back(i, phi.coeff(i));
    const ReduceInfo& ref = *info;
    cache.emplace(M, std::move(info));
    return ref;
}

// In-place reduction of an exponent-indexed vector to the power basis of
// Q(zeta_M): fold exponents mod M (zeta^M = 1), then eliminate exponents
// >= phi(M) using the cyclotomic relation.  Leaves v with length phi(M).
void reduce_mod_cyclotomic(std::vector<Rational>& v, unsigned long M)
{
    if (v.size() > M) {
        for (std::size_t j = v.size(); j-- > M;)
            if (v[j] != 0)
                v[j % M] += v[j];
        v.resize(M);
    }
    const ReduceInfo& info = reduce_info(M);
    for (std::size_t j = v.size(); j-- > info.deg;) {
        if (v[j] == 0)
            continue;
        const Rational c = v[j];
        for (const auto& [i, a] : info.tail)
            v[j - info.deg + i] -= c * a;
        v[j] = 0;
    }
    v.resize(info.deg, Rational(0));
}

}  // namespace

const PolyQ& cyclotomic_polynomial(unsigned long M)
{
    static std::unordered_map<unsigned long, std::unique_ptr<PolyQ>> cache;
    if (M == 0)
        throw Error("cyclotomic_polynomial: M must be positive");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_polynomial_locked(M, cache);
}

// --- CycNum -----------------------------------------------------------------

CycNum::CycNum() : conductor_(1), c_(1, Rational(0)) {}

CycNum CycNum::from_rational(const Rational& r, unsigned long M)
{
    CycNum z;
    z.conductor_ = M;
    z.c_.assign(euler_phi(M), Rational(0));
    z.c_[0] = r;
    return z;
}

CycNum CycNum::root_of_unity(unsigned long M, long k)
{
    const long m  = static_cast<long>(M);
    std::size_t e = static_cast<std::size_t>(((k % m) + m) % m);
    std::vector<Rational> v(e + 1, Rational(0));
    v[e] = Rational(1);
    return from_powers(M, std::move(v));
}

CycNum CycNum::from_powers(unsigned long M, std::vector<Rational> coeffs)
{
    if (M == 0)
        throw Error("CycNum: conductor must be positive");
    reduce_mod_cyclotomic(coeffs, M);
    CycNum z;
    z.conductor_ = M;
    z.c_         = std::move(coeffs);
    return z;
}

bool CycNum::is_zero() const
{
    for (const auto& c : c_)
        if (c != 0)
            return false;
    return true;
}

bool CycNum::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

Rational CycNum::as_rational() const
{
    if (!is_rational())
        throw NonRationalResult("CycNum::as_rational: value is not rational");
    return c_[0];
}

CycNum CycNum::promoted(unsigned long M2) const
{
    if (M2 == conductor_)
        return *this;
    if (M2 % conductor_ != 0)
        throw Error("CycNum::promoted: target conductor not a multiple");
    const unsigned long stride = M2 / conductor_;
    std::vector<Rational> v((c_.size() - 1) * stride + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            v[i * stride] = c_[i];
    return from_powers(M2, std::move(v));
}

CycNum CycNum::operator-() const
{
    CycNum r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

CycNum CycNum::operator+(const CycNum& rhs) const
{
    if (conductor_ != rhs.conductor_) {
        const unsigned long M = lcm_u(conductor_, rhs.conductor_);
        return promoted(M) + rhs.promoted(M);
    }
    CycNum r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] += rhs.c_[i];
    return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs)
{
    *this = *this + rhs;
    return *this;
}

CycNum CycNum::operator-(const CycNum& rhs) const
{
    return *this + (-rhs);
}

CycNum CycNum::operator*(const CycNum& rhs) const
{
    if (conductor_ != rhs.conductor_) {
        const unsigned long M = lcm_u(conductor_, rhs.conductor_);
        return promoted(M) * rhs.promoted(M);
    }
    std::vector<Rational> v(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            if (rhs.c_[j] != 0)
                v[i + j] += c_[i] * rhs.c_[j];
    }
    return from_powers(conductor_, std::move(v));
}

CycNum CycNum::operator*(const Rational& scalar) const
{
    CycNum r(*this);
    for (auto& c : r.c_)
        c *= scalar;
    return r;
}

bool CycNum::operator==(const CycNum& rhs) const
{
    if (conductor_ == rhs.conductor_)
        return c_ == rhs.c_;
    const unsigned long M = lcm_u(conductor_, rhs.conductor_);
    return promoted(M).c_ == rhs.promoted(M).c_;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw DivisionByZero("CycNum::inverse: zero element");
    if (is_rational())
        return from_rational(Rational(1) / c_[0], conductor_);
    // Extended Euclid against Phi_M, keeping every remainder monic so the
    // rational coefficients stay moderate.  Invariant: s * this == r (mod Phi).
    const PolyQ& phi = cyclotomic_polynomial(conductor_);
    PolyQ g{std::vector<Rational>(c_.begin(), c_.end())};
    Rational lead = g.leading();
    PolyQ r0      = phi;
    PolyQ s0;  // zero
    PolyQ r1 = g * (Rational(1) / lead);
    PolyQ s1(Rational(1) / lead);
    while (r1.degree() > 0) {
        auto [q, r2] = r0.divmod(r1);
        PolyQ s2     = s0 - q * s1;
        if (r2.is_zero())
            throw InternalIdentityViolation(
                "CycNum::inverse: nontrivial gcd with cyclotomic polynomial");
        const Rational scale = Rational(1) / r2.leading();
        r0                   = std::move(r1);
        s0                   = std::move(s1);
        r1                   = r2 * scale;
        s1                   = s2 * scale;
    }
    // r1 is the constant 1 after normalization, so s1 is the inverse.
    std::vector<Rational> v(s1.coeffs().begin(), s1.coeffs().end());
    return from_powers(conductor_, std::move(v));
}

CycNum CycNum::pow(long k) const
{
    if (k < 0)
        return inverse().pow(-k);
    CycNum acc  = from_rational(Rational(1), conductor_);
    CycNum base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1ul)
            acc = acc * base;
        e >>= 1ul;
        if (e > 0)
            base = base * base;
    }
    return acc;
}

std::complex<double> CycNum::to_complex() const
{
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        const double a = theta * static_cast<double>(i);
        acc += to_double(c_[i]) * std::complex<double>(std::cos(a), std::sin(a));
    }
    return acc;
}

std::string CycNum::str() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << "(" << format_rational(c_[i]) << ")";
        if (i > 0) {
            out << "*z";
            if (i > 1)
                out << "^" << i;
        }
    }
    if (first)
        out << "0";
    out << "  [z = zeta_" << conductor_ << "]";
    return out.str();
}

// --- CycAccum ----------------------------------------------------------------

CycAccum::CycAccum(unsigned long M) : M_(M), v_(M, Rational(0))
{
    if (M == 0)
        throw Error("CycAccum: conductor must be positive");
}

void CycAccum::add_monomial(long exponent, const Rational& scale)
{
    const long m        = static_cast<long>(M_);
    const std::size_t e = static_cast<std::size_t>(((exponent % m) + m) % m);
    v_[e] += scale;
}

void CycAccum::add(const CycNum& z, long exponent, const Rational& scale)
{
    if (M_ % z.conductor() != 0)
        throw Error("CycAccum::add: operand conductor does not divide target");
    const unsigned long stride = M_ / z.conductor();
    const long m               = static_cast<long>(M_);
    const std::size_t e = static_cast<std::size_t>(((exponent % m) + m) % m);
    const auto& c       = z.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        const std::size_t idx = (i * stride + e) % M_;
        if (scale == 1)
            v_[idx] += c[i];
        else
            v_[idx] += scale * c[i];
    }
}

CycNum CycAccum::result() const
{
    std::vector<Rational> v(v_);
    return CycNum::from_powers(M_, std::move(v));
}

// --- exact trigonometry --------------------------------------------------------

CycNum inv_sin(unsigned long N, long m)
{
    const long n = static_cast<long>(N);
    if (m % n == 0)
        throw PoleAtInteger("inv_sin: sin(m*pi/N) vanishes");
    // sin(m*pi/N) = zeta^(2m+N) * (zeta^(4m) - 1) / 2 with zeta = zeta_{4N},
    // and zeta^(4m) = zeta_N^m is a primitive K-th root of unity.
    const unsigned long mm = static_cast<unsigned long>(((m % n) + n) % n);
    const unsigned long K  = N / gcd_u(N, mm);
    CycAccum acc(4 * N);
    const Rational invK = ratio(2, static_cast<long>(K));
    for (unsigned long i = 1; i < K; ++i)
        acc.add_monomial(static_cast<long>(4 * mm * i) + 2 * m + n,
                         invK * static_cast<long>(i));
    return acc.result();
}

CycNum trig_value(unsigned long N, long m, TrigKind kind)
{
    const long n = static_cast<long>(N);
    switch (kind) {
    case TrigKind::Cos: {
        CycAccum acc(4 * N);
        acc.add_monomial(2 * m, ratio(1, 2));
        acc.add_monomial(-2 * m, ratio(1, 2));
        return acc.result();
    }
    case TrigKind::Sin: {
        if (m % n == 0)
            throw PoleAtInteger("trig_value: sin(m*pi/N) vanishes");
        CycAccum acc(4 * N);
        acc.add_monomial(2 * m - n, ratio(1, 2));
        acc.add_monomial(-2 * m - n, ratio(-1, 2));
        return acc.result();
    }
    case TrigKind::Cot: {
        if (m % n == 0)
            throw PoleAtInteger("trig_value: cot(m*pi/N) has a pole");
        return trig_value(N, m, TrigKind::Cos) * inv_sin(N, m);
    }
    }
    throw Error("trig_value: unknown kind");
}

std::complex<double> cyc_to_complex(const CycNum& z)
{
    return z.to_complex();
}

}  // namespace speczeta

#include "speczeta/lvalues.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <utility>

#include "speczeta/coeffs.hpp"
#include "speczeta/combinatorics.hpp"
#include "speczeta/errors.hpp"

namespace speczeta {

namespace {

// --- per-modulus tables of exact trigonometric powers ----------------------
//
// Every route below sums character values against rows of the form
// 1/sin^k(m pi/N) (optionally times cot or a cosine package), for m = 1..N-1.
// The rows are built once per (N, k) and shared across all characters mod N,
// which keeps full character sweeps cheap.

struct TrigTables {
    unsigned long N = 0;
    std::vector<CycNum> inv1;  // [m-1] = 1/sin(m pi/N)
    std::vector<CycNum> cot1;  // [m-1] = cot(m pi/N)
    // invpow[k-1][m-1] = 1/sin^k(m pi/N); deque keeps row references stable
    // while higher powers are appended.
    std::deque<std::vector<CycNum>> invpow;
    // closed_w[n][m-1] = sin^-n(m pi/N) * sum_l cos((n-2l) m pi/N) Abar(n,l),
    // the per-term weight of the closed Dirichlet form (n >= 2).
    std::map<unsigned, std::vector<CycNum>> closed_w;
    // twisted_w[n][m-1] = cot(m pi/N) / sin^2n(m pi/N).
    std::map<unsigned, std::vector<CycNum>> twisted_w;
};

std::recursive_mutex g_tables_mutex;

TrigTables& trig_tables(unsigned long N)
{
    static std::map<unsigned long, TrigTables> cache;
    std::lock_guard<std::recursive_mutex> lock(g_tables_mutex);
    TrigTables& t = cache[N];
    if (t.N == 0) {
        t.N = N;
        t.inv1.reserve(N - 1);
        t.cot1.reserve(N - 1);
        for (unsigned long m = 1; m < N; ++m) {
            t.inv1.push_back(inv_sin(N, m));
            t.cot1.push_back(trig_value(N, m, TrigKind::Cot));
        }
        t.invpow.push_back(t.inv1);
    }
    return t;
}

const std::vector<CycNum>& inv_pow_row(unsigned long N, unsigned k)
{
    std::lock_guard<std::recursive_mutex> lock(g_tables_mutex);
    TrigTables& t = trig_tables(N);
    while (t.invpow.size() < k) {
        const std::vector<CycNum>& prev = t.invpow.back();
        std::vector<CycNum> next;
        next.reserve(prev.size());
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next.push_back(prev[i] * t.inv1[i]);
        }
        t.invpow.push_back(std::move(next));
    }
    return t.invpow[k - 1];
}

const std::vector<CycNum>& cot_row(unsigned long N)
{
    std::lock_guard<std::recursive_mutex> lock(g_tables_mutex);
    return trig_tables(N).cot1;
}

const std::vector<CycNum>& closed_row(unsigned long N, unsigned n)
{
    std::lock_guard<std::recursive_mutex> lock(g_tables_mutex);
    TrigTables& t = trig_tables(N);
    auto it = t.closed_w.find(n);
    if (it == t.closed_w.end()) {
        const std::vector<CycNum>& ip = inv_pow_row(N, n);
        const EulerianTable ab = eulerian_table(n, /*circular=*/true);
        std::vector<CycNum> row;
        row.reserve(N - 1);
        for (unsigned long m = 1; m < N; ++m) {
            CycAccum acc(4 * N);
            for (unsigned l = 1; l + 1 <= n; ++l) {
                const Rational half = Rational(ab.values[l - 1]) / 2;
                const long d = (static_cast<long>(n) - 2 * static_cast<long>(l)) *
                               static_cast<long>(m);
                acc.add_monomial(2 * d, half);
                acc.add_monomial(-2 * d, half);
            }
            row.push_back(acc.result() * ip[m - 1]);
        }
        it = t.closed_w.emplace(n, std::move(row)).first;
    }
    return it->second;
}

const std::vector<CycNum>& twisted_row(unsigned long N, unsigned n)
{
    std::lock_guard<std::recursive_mutex> lock(g_tables_mutex);
    TrigTables& t = trig_tables(N);
    auto it = t.twisted_w.find(n);
    if (it == t.twisted_w.end()) {
        const std::vector<CycNum>& ip = inv_pow_row(N, 2 * n);
        std::vector<CycNum> row;
        row.reserve(N - 1);
        for (std::size_t i = 0; i < ip.size(); ++i) {
            row.push_back(t.cot1[i] * ip[i]);
        }
        it = t.twisted_w.emplace(n, std::move(row)).first;
    }
    return it->second;
}

// --- small caches keyed by character ---------------------------------------

using CharKey = std::pair<unsigned long, std::vector<unsigned long>>;

CharKey char_key(const DirichletCharacter& chi)
{
    return {chi.modulus, chi.exponents};
}

const CycNum& gauss_sum_cached(const DirichletCharacter& chi)
{
    static std::map<CharKey, CycNum> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, fresh] = cache.try_emplace(char_key(chi));
    if (fresh) {
        it->second = gauss_sum(chi);
    }
    return it->second;
}

// Character sum  sum_m chi(m) * row[m-1]  at conductor lcm(4N, order(chi)).
CycNum char_weighted_sum(const DirichletCharacter& chi, const std::vector<CycNum>& row)
{
    const unsigned long N = chi.modulus;
    const unsigned long r = chi.order;
    const unsigned long M = lcm_u(4 * N, r);
    const unsigned long stride = M / r;
    CycAccum acc(M);
    for (unsigned long m = 1; m < N; ++m) {
        const auto e = char_exponent(chi, static_cast<long>(m));
        if (!e) {
            continue;  // chi vanishes on non-units
        }
        acc.add(row[m - 1], static_cast<long>(*e * stride));
    }
    return acc.result();
}

void require_modulus(const DirichletCharacter& chi, const char* where)
{
    if (chi.modulus < 2) {
        throw Error(std::string(where) + ": modulus must be >= 2");
    }
}

void require_parity(unsigned n, const DirichletCharacter& chi, const char* where)
{
    if (chi.even != (n % 2 == 0)) {
        throw ParityMismatch(std::string(where) +
                             ": L(n, chi) has a classical closed form only when "
                             "chi(-1) = (-1)^n");
    }
}

}  // namespace

// --- SpecialValue -----------------------------------------------------------

SpecialValue SpecialValue::operator+(const SpecialValue& rhs) const
{
    if (pi_power != rhs.pi_power) {
        throw Error("SpecialValue: cannot add values with different powers of pi");
    }
    return {pi_power, coeff + rhs.coeff};
}

SpecialValue SpecialValue::operator*(const SpecialValue& rhs) const
{
    return {pi_power + rhs.pi_power, coeff * rhs.coeff};
}

SpecialValue SpecialValue::operator*(const Rational& scalar) const
{
    return {pi_power, coeff * scalar};
}

bool SpecialValue::operator==(const SpecialValue& rhs) const
{
    if (coeff.is_zero() && rhs.coeff.is_zero()) {
        return true;
    }
    return pi_power == rhs.pi_power && coeff == rhs.coeff;
}

std::string SpecialValue::str() const
{
    const std::string c =
        coeff.is_rational() ? format_rational(coeff.as_rational()) : coeff.str();
    if (pi_power == 0) {
        return c;
    }
    const std::string p =
        (pi_power == 1) ? "pi" : "pi^" + std::to_string(pi_power);
    return "(" + c + ") * " + p;
}

// --- spectral sums ----------------------------------------------------------

SpectralSumSpec SpectralSumSpec::make(long p, unsigned long q, unsigned n)
{
    if (q == 0) {
        throw Error("spectral sum: denominator q must be positive");
    }
    if (n == 0) {
        throw Error("spectral sum: order n must be >= 1");
    }
    if (p % static_cast<long>(q) == 0) {
        throw AlphaIsPole("spectral sum: alpha = 2 pi p/q is a pole (q divides p)");
    }
    const unsigned long ap = static_cast<unsigned long>(p < 0 ? -p : p);
    const unsigned long g = gcd_u(ap, q);
    return {p / static_cast<long>(g), q / g, n};
}

double SpectralSumSpec::alpha() const
{
    return 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
}

SpecialValue spectral_sum(const SpectralSumSpec& spec)
{
    const unsigned long q = spec.q;
    const long p = spec.p;
    const unsigned n = spec.n;
    CycNum coeff;
    if (n == 1) {
        coeff = trig_value(q, p, TrigKind::Cot) * ratio(1, 2);
    } else {
        const EulerianTable ab = eulerian_table(n, /*circular=*/true);
        CycAccum acc(4 * q);
        for (unsigned l = 1; l + 1 <= n; ++l) {
            const Rational half = Rational(ab.values[l - 1]) / 2;
            const long d = (static_cast<long>(n) - 2 * static_cast<long>(l)) * p;
            acc.add_monomial(2 * d, half);
            acc.add_monomial(-2 * d, half);
        }
        const Rational scale = ratio(1, pow_int(2, n) * factorial(n - 1));
        coeff = acc.result() * inv_sin(q, p).pow(static_cast<long>(n)) * scale;
    }
    return {0, coeff};
}

SpecialValue s_value(unsigned n)
{
    if (n < 1) {
        throw Error("s_value: n must be >= 1");
    }
    const SpecialValue base = spectral_sum(SpectralSumSpec::make(1, 4, n));
    const SpecialValue result{static_cast<int>(n),
                              base.coeff * ratio(1, pow_int(2, n))};
    if (n % 2 == 0) {
        const SpecialValue z = zeta_even(n / 2);
        const SpecialValue expect{static_cast<int>(n),
                                  z.coeff * (Rational(1) - ratio(1, pow_int(2, n)))};
        if (result != expect) {
            throw InternalIdentityViolation(
                "s_value: spectral route disagrees with (1 - 2^-n) zeta(n)");
        }
    } else {
        if (result != l_chi4_odd((n - 1) / 2)) {
            throw InternalIdentityViolation(
                "s_value: spectral route disagrees with L(n, chi_4)");
        }
    }
    return result;
}

// --- classical special values -----------------------------------------------

SpecialValue zeta_even(unsigned n)
{
    if (n < 1) {
        throw Error("zeta_even: n must be >= 1");
    }
    const std::vector<Rational> B = bernoulli_numbers(2 * n);
    Rational coeff = B[2 * n] * ratio(pow_int(2, 2 * n), 2 * factorial(2 * n));
    if (n % 2 == 0) {
        coeff = -coeff;  // sign (-1)^(n+1)
    }
    return {static_cast<int>(2 * n), CycNum::from_rational(coeff)};
}

SpecialValue l_chi4_odd(unsigned n)
{
    const std::vector<Integer> secants = secant_numbers(n);
    const Rational coeff =
        ratio(secants[n], pow_int(2, 2 * n + 2) * factorial(2 * n));
    return {static_cast<int>(2 * n + 1), CycNum::from_rational(coeff)};
}

SpecialValue dirichlet_L_closed(unsigned n, const DirichletCharacter& chi)
{
    if (n < 1) {
        throw Error("dirichlet_L_closed: n must be >= 1");
    }
    require_modulus(chi, "dirichlet_L_closed");
    require_parity(n, chi, "dirichlet_L_closed");
    const unsigned long N = chi.modulus;
    const std::vector<CycNum>& row = (n == 1) ? cot_row(N) : closed_row(N, n);
    const Rational scale = ratio(1, 2 * factorial(n - 1) * pow_int(N, n));
    const CycNum coeff = char_weighted_sum(chi, row) * scale;
    if (N == 2) {
        // The lone character mod 2 is principal, so the value must agree with
        // the Euler-product identity L(n) = (1 - 2^-n) zeta(n).
        const Rational expected = zeta_even(n / 2).coeff.as_rational() *
                                  (Rational(1) - ratio(1, pow_int(2, n)));
        if (!coeff.is_rational() || coeff.as_rational() != expected) {
            throw InternalIdentityViolation(
                "dirichlet_L_closed: N = 2 value fails the Euler-product check");
        }
    }
    return {static_cast<int>(n), coeff};
}

SpecialValue dirichlet_L_leopoldt(unsigned n, const DirichletCharacter& chi)
{
    if (n < 1) {
        throw Error("dirichlet_L_leopoldt: n must be >= 1");
    }
    if (!is_primitive(chi)) {
        throw NotPrimitive("dirichlet_L_leopoldt: the Gauss-sum formula needs a "
                           "primitive character");
    }
    require_parity(n, chi, "dirichlet_L_leopoldt");
    const unsigned long N = chi.modulus;
    const unsigned long r = chi.order;
    const DirichletCharacter chb = conjugate_char(chi);
    const PolyQ Bn = bernoulli_polynomial(n);
    CycAccum acc(r);
    for (unsigned long j = 1; j <= N; ++j) {
        const auto e = char_exponent(chb, static_cast<long>(j));
        if (!e) {
            continue;
        }
        acc.add_monomial(static_cast<long>(*e),
                         Bn.eval(ratio(static_cast<long>(j), static_cast<long>(N))));
    }
    // -chi(-1) G(chi) (2 pi i)^n / (2 N n!), with (2i)^n = 2^n zeta_4^n.
    const Rational sign = chi.even ? Rational(-1) : Rational(1);
    const Rational scale = sign * ratio(pow_int(2, n), 2 * N * factorial(n));
    const CycNum coeff = gauss_sum_cached(chi) * acc.result() *
                         CycNum::root_of_unity(4, static_cast<long>(n)) * scale;
    return {static_cast<int>(n), coeff.promoted(lcm_u(4 * N, coeff.conductor()))};
}

// --- cycle-graph spectral functions ------------------------------------------

Rational graph_zeta(unsigned n, unsigned long N)
{
    if (n < 1) {
        throw Error("graph_zeta: n must be >= 1");
    }
    if (N < 2) {
        throw Error("graph_zeta: N must be >= 2 (the 1-cycle has no spectrum)");
    }
    const std::vector<CycNum>& row = inv_pow_row(N, 2 * n);
    CycNum sum;
    for (const CycNum& v : row) {
        sum += v;
    }
    return sum.as_rational();  // NonRationalResult here would be a bug
}

Rational verlinde_zagier(unsigned g, unsigned long N)
{
    if (g < 1) {
        throw Error("verlinde_zagier: genus parameter must be >= 1");
    }
    if (N < 2) {
        throw Error("verlinde_zagier: N must be >= 2");
    }
    const std::vector<Rational> B = bernoulli_numbers(2 * g);
    const std::vector<Rational> c = laurent_c(g);
    Rational acc(0);
    for (unsigned s = 0; s <= g; ++s) {
        const Rational term = ratio(pow_int(2, 2 * s), factorial(2 * s)) *
                              B[2 * s] * c[s] * Rational(pow_int(N, 2 * s));
        if (s % 2 == 0) {
            acc -= term;  // sign (-1)^(s-1)
        } else {
            acc += term;
        }
    }
    return acc;
}

CycNum graph_L(unsigned n, const DirichletCharacter& chi, bool twisted)
{
    if (n < 1) {
        throw Error("graph_L: n must be >= 1");
    }
    require_modulus(chi, "graph_L");
    using Key = std::tuple<unsigned long, std::vector<unsigned long>, bool, unsigned>;
    static std::map<Key, CycNum> memo;
    static std::mutex mutex;
    const Key key{chi.modulus, chi.exponents, twisted, n};
    {
        std::lock_guard<std::mutex> lock(mutex);
        const auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
    }
    const std::vector<CycNum>& row =
        twisted ? twisted_row(chi.modulus, n) : inv_pow_row(chi.modulus, 2 * n);
    CycNum value = char_weighted_sum(chi, row);
    std::lock_guard<std::mutex> lock(mutex);
    return memo.emplace(key, std::move(value)).first->second;
}

SpecialValue L_from_graph(unsigned n, const DirichletCharacter& chi)
{
    if (n < 1) {
        throw Error("L_from_graph: n must be >= 1");
    }
    require_modulus(chi, "L_from_graph");
    const unsigned long N = chi.modulus;
    CycNum sum;
    if (chi.even) {
        const std::vector<Rational> a = coeff_a(n);
        for (unsigned i = 1; i <= n; ++i) {
            sum += graph_L(i, chi, /*twisted=*/false) * a[i - 1];
        }
        const Rational scale =
            ratio(1, 2 * factorial(2 * n - 1) * pow_int(N, 2 * n));
        return {static_cast<int>(2 * n), sum * scale};
    }
    const std::vector<Rational> b = coeff_b(n);
    for (unsigned i = 1; i <= n; ++i) {
        sum += graph_L(i, chi, /*twisted=*/true) * b[i - 1];
    }
    const Rational scale = ratio(1, factorial(2 * n) * pow_int(N, 2 * n + 1));
    return {static_cast<int>(2 * n + 1), sum * scale};
}

CycNum graph_from_L(unsigned n, const DirichletCharacter& chi)
{
    if (n < 1) {
        throw Error("graph_from_L: n must be >= 1");
    }
    require_modulus(chi, "graph_from_L");
    const unsigned long N = chi.modulus;
    const std::vector<Rational> c = laurent_c(n);
    CycNum sum;
    if (chi.even) {
        for (unsigned i = 1; i <= n; ++i) {
            // 2 c_{n,i} (N/pi)^2i L(2i, chi); the powers of pi cancel exactly.
            const SpecialValue L = dirichlet_L_closed(2 * i, chi);
            sum += L.coeff * (c[i] * Rational(pow_int(N, 2 * i)) * 2);
        }
    } else {
        for (unsigned i = 1; i <= n; ++i) {
            const SpecialValue L = dirichlet_L_closed(2 * i + 1, chi);
            const Rational scale = Rational(2 * i) / Rational(n) * c[i] *
                                   Rational(pow_int(N, 2 * i + 1));
            sum += L.coeff * scale;
        }
    }
    return sum.promoted(lcm_u(4 * N, sum.conductor()));
}

SpecialValue zeta_from_spectral(unsigned n, unsigned long N)
{
    if (n < 1) {
        throw Error("zeta_from_spectral: n must be >= 1");
    }
    if (N < 2) {
        throw Error("zeta_from_spectral: N must be >= 2");
    }
    const std::vector<Rational> a = coeff_a(n);
    Rational sum(0);
    for (unsigned i = 1; i <= n; ++i) {
        sum += a[i - 1] * graph_zeta(i, N);
    }
    const Integer denom = 2 * factorial(2 * n - 1) * (pow_int(N, 2 * n) - 1);
    return {static_cast<int>(2 * n), CycNum::from_rational(sum / Rational(denom))};
}

CycNum graph_L_via_bernoulli(unsigned n, const DirichletCharacter& chi)
{
    if (n < 1) {
        throw Error("graph_L_via_bernoulli: n must be >= 1");
    }
    require_modulus(chi, "graph_L_via_bernoulli");
    if (!is_primitive(chi)) {
        throw NotPrimitive("graph_L_via_bernoulli: the inverse-Gauss-sum formula "
                           "needs a primitive character");
    }
    const unsigned long N = chi.modulus;
    const unsigned long r = chi.order;
    const DirichletCharacter chb = conjugate_char(chi);
    const std::vector<Rational> c = laurent_c(n);
    std::vector<PolyQ> bernoulli;  // bernoulli[i] = B_{2i}(x) resp. B_{2i+1}(x)
    bernoulli.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        bernoulli.push_back(bernoulli_polynomial(chi.even ? 2 * i : 2 * i + 1));
    }
    CycAccum acc(r);
    for (unsigned long j = 1; j <= N; ++j) {
        const auto e = char_exponent(chb, static_cast<long>(j));
        if (!e) {
            continue;
        }
        const Rational x = ratio(static_cast<long>(j), static_cast<long>(N));
        Rational w(0);
        for (unsigned i = 1; i <= n; ++i) {
            Rational term;
            if (chi.even) {
                // (-1)^(i-1) 2^2i B_{2i}(j/N)/(2i)! c_{n,i} N^2i
                term = ratio(pow_int(2, 2 * i), factorial(2 * i)) *
                       bernoulli[i].eval(x) * c[i] * Rational(pow_int(N, 2 * i));
                if (i % 2 == 0) {
                    term = -term;
                }
            } else {
                // (-1)^i 2^(2i+1) B_{2i+1}(j/N)/(2i+1)! i c_{n,i} N^(2i+1)
                // (the zeta_4 from (2 sqrt(-1))^(2i+1) is factored out below)
                term = ratio(pow_int(2, 2 * i + 1), factorial(2 * i + 1)) *
                       bernoulli[i].eval(x) * Rational(i) * c[i] *
                       Rational(pow_int(N, 2 * i + 1));
                if (i % 2 == 1) {
                    term = -term;
                }
            }
            w += term;
        }
        acc.add_monomial(static_cast<long>(*e), w);
    }
    CycNum value = gauss_sum_cached(chb).inverse() * acc.result();
    if (!chi.even) {
        // Global factor -(1/n) zeta_4; the sign compensates for
        // G(chi) G(conj chi) = chi(-1) N, which is -N for odd chi.
        value = value * CycNum::root_of_unity(4, 1) * ratio(-1, static_cast<long>(n));
    }
    return value.promoted(lcm_u(4 * N, value.conductor()));
}

// --- character means ----------------------------------------------------------

SpecialValue mean_L_closed_form(unsigned n, unsigned long N, Parity parity)
{
    if (n < 1) {
        throw Error("mean_L_closed_form: n must be >= 1");
    }
    if (N < 3) {
        // N <= 2 has no odd characters and a degenerate even average.
        throw Error("mean_L_closed_form: N must be >= 3");
    }
    if (parity == Parity::Even) {
        const std::vector<Rational> a = coeff_a(n);
        CycNum sum;
        for (unsigned i = 0; i < n; ++i) {
            sum += inv_pow_row(N, 2 * n - 2 * i)[0] * a[n - i - 1];
        }
        const Rational scale = ratio(1, factorial(2 * n - 1) * pow_int(N, 2 * n));
        return {static_cast<int>(2 * n), sum * scale};
    }
    if (n == 1) {
        return {1, cot_row(N)[0] * ratio(1, static_cast<long>(N))};
    }
    const unsigned k = n - 1;
    const std::vector<Rational> b = coeff_b(k);
    CycNum sum;
    for (unsigned i = 0; i < k; ++i) {
        sum += inv_pow_row(N, 2 * k - 2 * i + 1)[0] * b[k - i - 1];
    }
    sum = sum * trig_value(N, 1, TrigKind::Cos);
    const Rational scale = ratio(2, factorial(2 * k) * pow_int(N, 2 * k + 1));
    return {static_cast<int>(2 * k + 1), sum * scale};
}

SpecialValue mean_L_bruteforce(unsigned n, unsigned long N, Parity parity)
{
    if (n < 1) {
        throw Error("mean_L_bruteforce: n must be >= 1");
    }
    if (N < 3) {
        throw Error("mean_L_bruteforce: N must be >= 3");
    }
    const unsigned s = (parity == Parity::Even) ? 2 * n : 2 * n - 1;
    CycNum sum;
    for (const DirichletCharacter& chi : characters(N)) {
        if (chi.even != (parity == Parity::Even)) {
            continue;
        }
        sum += dirichlet_L_closed(s, chi).coeff;
    }
    const Rational scale = ratio(2, static_cast<long>(euler_phi(N)));
    return {static_cast<int>(s), sum * scale};
}

}  // namespace speczeta

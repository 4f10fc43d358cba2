#include "speczeta/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "speczeta/errors.hpp"
#include "speczeta/seriesq.hpp"

namespace speczeta {

unsigned CircularPermutation::descents() const
{
    const unsigned n = size();
    unsigned d       = 0;
    for (unsigned i = 0; i < n; ++i)
        if (arrangement[i] > arrangement[(i + 1) % n])
            ++d;
    return d;
}

Integer eulerian(unsigned n, long l)
{
    if (n < 1)
        throw Error("eulerian: n must be positive");
    if (l <= 0 || l > static_cast<long>(n))
        return 0;
    Integer acc(0);
    for (long i = 0; i <= l; ++i) {
        Integer term = binomial(n + 1, static_cast<unsigned long>(i)) *
                       pow_int(Integer(l - i), n);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Integer circular_eulerian(unsigned n, long l)
{
    if (n < 2)
        throw Error("circular_eulerian: n must be at least 2");
    return eulerian(n - 1, l);
}

namespace {

// Count circular descents of the word (n, w[0], ..., w[n-2]) read cyclically.
unsigned descents_with_n_first(const std::vector<unsigned>& w, unsigned n)
{
    unsigned d = (n > w[0]) ? 1u : 0u;  // pair (n, w[0]); always a descent
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            ++d;
    if (w.back() > n)
        ++d;  // wrap pair (w[n-2], n); never a descent
    return d;
}

void check_bruteforce_size(unsigned n)
{
    if (n < 2)
        throw Error("circular enumeration: n must be at least 2");
    if (n > 10)
        throw InstanceTooLarge(
            "circular enumeration: n > 10 means more than 9! permutations");
}

// Histogram of circular descent counts over all words with first letter
// fixed to n and the given second letter.
void histogram_for_branch(unsigned n, unsigned second,
                          std::vector<unsigned long>& hist)
{
    std::vector<unsigned> rest;
    for (unsigned v = 1; v < n; ++v)
        if (v != second)
            rest.push_back(v);
    std::vector<unsigned> w(n - 1);
    w[0] = second;
    do {
        std::copy(rest.begin(), rest.end(), w.begin() + 1);
        ++hist[descents_with_n_first(w, n) - 1];
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

std::vector<Integer> circular_descent_histogram_serial(unsigned n)
{
    check_bruteforce_size(n);
    std::vector<unsigned long> hist(n - 1, 0);
    for (unsigned second = 1; second < n; ++second)
        histogram_for_branch(n, second, hist);
    return std::vector<Integer>(hist.begin(), hist.end());
}

std::vector<Integer> circular_descent_histogram(unsigned n)
{
    check_bruteforce_size(n);
    std::vector<unsigned long> hist(n - 1, 0);
    // Partition the (n-1)! words by their second letter; threads merge local
    // histograms at the end.
#pragma omp parallel
    {
        std::vector<unsigned long> local(n - 1, 0);
#pragma omp for schedule(dynamic) nowait
        for (int second = 1; second < static_cast<int>(n); ++second)
            histogram_for_branch(n, static_cast<unsigned>(second), local);
#pragma omp critical(speczeta_hist_merge)
        for (std::size_t i = 0; i < hist.size(); ++i)
            hist[i] += local[i];
    }
    return std::vector<Integer>(hist.begin(), hist.end());
}

Integer circular_eulerian_bruteforce(unsigned n, long l)
{
    check_bruteforce_size(n);
    if (l <= 0 || l >= static_cast<long>(n))
        return 0;
    return circular_descent_histogram(n)[static_cast<std::size_t>(l - 1)];
}

Integer class_number_M(unsigned n, long m)
{
    if (n < 2)
        throw Error("class_number_M: n must be at least 2");
    const long ln = static_cast<long>(n);
    if ((m - ln) % 2 != 0 || m > ln - 2 || m < -(ln - 2))
        return 0;
    return circular_eulerian(n, (ln - m) / 2);
}

EulerianTable eulerian_table(unsigned n, bool circular)
{
    EulerianTable t{n, circular, {}};
    const unsigned lmax = circular ? n - 1 : n;
    for (unsigned l = 1; l <= lmax; ++l)
        t.values.push_back(circular ? circular_eulerian(n, l) : eulerian(n, l));
    return t;
}

std::vector<Rational> bernoulli_numbers(unsigned k_max)
{
    std::vector<Rational> B(k_max + 1, Rational(0));
    B[0] = Rational(1);
    for (unsigned k = 1; k <= k_max; ++k) {
        Rational acc(0);
        for (unsigned j = 0; j < k; ++j)
            if (B[j] != 0)
                acc += Rational(binomial(k + 1, j)) * B[j];
        B[k] = -acc / Rational(k + 1);
    }
    return B;
}

PolyQ bernoulli_polynomial(unsigned n)
{
    const auto B = bernoulli_numbers(n);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned j = 0; j <= n; ++j)
        coeffs[n - j] = Rational(binomial(n, j)) * B[j];
    return PolyQ(std::move(coeffs));
}

std::vector<Integer> secant_numbers(unsigned k_max)
{
    // cos(t) = sum (-1)^k t^(2k)/(2k)!, known through t^(2*k_max+1).
    std::vector<Rational> cos_coeffs(2 * k_max + 1, Rational(0));
    for (unsigned k = 0; k <= k_max; ++k) {
        Rational c = ratio(1, 1) / Rational(factorial(2 * k));
        cos_coeffs[2 * k] = (k % 2 == 0) ? c : -c;
    }
    const SeriesQ sec =
        SeriesQ::from_coeffs(0, std::move(cos_coeffs),
                             static_cast<int>(2 * k_max + 1))
            .reciprocal();
    std::vector<Integer> out;
    out.reserve(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        Rational e = sec.coeff(static_cast<int>(2 * k)) * Rational(factorial(2 * k));
        if (e.get_den() != 1)
            throw InternalIdentityViolation(
                "secant_numbers: non-integer coefficient");
        out.push_back(e.get_num());
    }
    return out;
}

Rational chebyshev_coeff(unsigned k, long i, ChebKind kind)
{
    if (i < 0 || i > static_cast<long>(k))
        return Rational(0);
    const unsigned long ui = static_cast<unsigned long>(i);
    if (kind == ChebKind::T && k == 0)
        return ratio(1, 2);  // the table's special value t(0,0)
    Integer mag = pow_int(Integer(2), 2 * ui) * binomial(k + ui, k - ui);
    Rational r(mag);
    if (kind == ChebKind::T)
        r *= ratio(static_cast<long>(k), static_cast<long>(k + ui));
    if ((k - ui) % 2 != 0)
        r = -r;
    return r;
}

namespace {

// cos(d * pi/2) for integer d: cycles through 1, 0, -1, 0.
long cos_quarter(long d)
{
    switch (((d % 4) + 4) % 4) {
    case 0:
        return 1;
    case 2:
        return -1;
    default:
        return 0;
    }
}

// sqrt(2) * cos((d + 1/2) * pi/2) for integer d: cycles through 1, -1, -1, 1.
long cos_quarter_half(long d)
{
    switch (((d % 4) + 4) % 4) {
    case 0:
    case 3:
        return 1;
    default:
        return -1;
    }
}

}  // namespace

Rational bernoulli_via_eulerian(unsigned n)
{
    if (n < 1)
        throw Error("bernoulli_via_eulerian: n must be positive");
    const long ln = static_cast<long>(n);
    Integer acc(0);
    for (long l = 1; l <= 2 * ln - 1; ++l) {
        const long c = cos_quarter(ln - l);
        if (c != 0)
            acc += Integer(c) * circular_eulerian(2 * n, l);
    }
    // B_{2n} = (-1)^(n+1) n / (2^(3n-2) (2^(2n)-1)) * acc
    Integer den = pow_int(Integer(2), 3 * n - 2) *
                  (pow_int(Integer(2), 2 * n) - 1);
    Rational r = ratio(Integer(n) * acc, den);
    return (n % 2 == 0) ? -r : r;
}

Rational secant_via_eulerian(unsigned n)
{
    if (n < 1)
        throw Error("secant_via_eulerian: n must be positive");
    const long ln = static_cast<long>(n);
    // Positive convention: (2n)-th secant number = (sqrt2 / 2^n) * sum_l
    // cos((n-l+1/2) pi/2) Abar(2n+1, l), with sqrt2*cos(...) in {+-1}.
    Integer acc(0);
    for (long l = 1; l <= 2 * ln; ++l)
        acc += Integer(cos_quarter_half(ln - l)) * circular_eulerian(2 * n + 1, l);
    Rational r = ratio(acc, pow_int(Integer(2), n));
    if (r.get_den() != 1)
        throw NonIntegerResult(
            "secant_via_eulerian: expected an integer, got " +
            format_rational(r));
    return r;
}

}  // namespace speczeta

#include "speczeta/coeffs.hpp"

#include "speczeta/combinatorics.hpp"
#include "speczeta/errors.hpp"
#include "speczeta/seriesq.hpp"

namespace speczeta {

std::vector<Rational> laurent_c(unsigned n)
{
    if (n < 1)
        throw Error("laurent_c: n must be positive");
    // sin(x)/x through x^(2n), then (x/sin x)^(2n): exactly enough known
    // coefficients to read off c_{n,0}..c_{n,n}.
    const int trunc = static_cast<int>(2 * n) + 1;
    std::vector<Rational> sc(2 * n + 1, Rational(0));
    for (unsigned k = 0; 2 * k <= 2 * n; ++k) {
        Rational c = ratio(1, 1) / Rational(factorial(2 * k + 1));
        sc[2 * k]  = (k % 2 == 0) ? c : -c;
    }
    const SeriesQ x_over_sin =
        SeriesQ::from_coeffs(0, std::move(sc), trunc).reciprocal();
    const SeriesQ p = x_over_sin.pow(2 * n);
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (unsigned s = 0; s <= n; ++s)
        out.push_back(p.coeff(static_cast<int>(2 * n - 2 * s)));
    return out;
}

std::vector<Rational> coeff_a(unsigned n)
{
    if (n < 1)
        throw Error("coeff_a: n must be positive");
    std::vector<Rational> out;
    out.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        Rational acc(0);
        for (unsigned l = 1; l <= i; ++l) {
            Rational term = chebyshev_coeff(n - l, static_cast<long>(n) - i,
                                            ChebKind::T) *
                            Rational(circular_eulerian(2 * n, l));
            if ((n - l) % 2 != 0)
                term = -term;
            acc += term;
        }
        out.push_back(acc * 2);
    }
    return out;
}

std::vector<Rational> coeff_b(unsigned n)
{
    if (n < 1)
        throw Error("coeff_b: n must be positive");
    const auto a = coeff_a(n);
    std::vector<Rational> out;
    out.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        Rational acc(0);
        for (unsigned l = 1; l <= i; ++l) {
            Rational term = chebyshev_coeff(n - l, static_cast<long>(n) - i,
                                            ChebKind::U) *
                            Rational(circular_eulerian(2 * n + 1, l));
            if ((n - l) % 2 != 0)
                term = -term;
            acc += term;
        }
        if (acc != Rational(i) * a[i - 1])
            throw InternalIdentityViolation(
                "coeff_b: u-sum route disagrees with i*a_{n,i} at n=" +
                std::to_string(n) + ", i=" + std::to_string(i));
        out.push_back(acc);
    }
    return out;
}

std::vector<Rational> coeff_a_via_inverse(unsigned n)
{
    if (n < 1)
        throw Error("coeff_a_via_inverse: n must be positive");
    // Solve row n of A * C = diag(1!, 3!, ..., (2n-1)!) for A, using the
    // unit diagonal of C: a_{n,n} = (2n-1)! and for s < n
    //   a_{n,s} = -sum_{i=s+1}^{n} a_{n,i} c_{i,s}.
    std::vector<std::vector<Rational>> c(n + 1);
    for (unsigned i = 1; i <= n; ++i)
        c[i] = laurent_c(i);
    std::vector<Rational> a(n + 1, Rational(0));
    a[n] = Rational(factorial(2 * n - 1));
    for (unsigned s = n; s-- > 1;) {
        Rational acc(0);
        for (unsigned i = s + 1; i <= n; ++i)
            acc += a[i] * c[i][s];
        a[s] = -acc;
    }
    return std::vector<Rational>(a.begin() + 1, a.end());
}

ACReport verify_AC_identity(unsigned n)
{
    if (n < 1)
        throw Error("verify_AC_identity: n must be positive");
    const auto a = coeff_a(n);
    std::vector<std::vector<Rational>> c(n + 1);
    for (unsigned i = 1; i <= n; ++i)
        c[i] = laurent_c(i);
    ACReport report{n, {}, true};
    for (unsigned s = 1; s <= n; ++s) {
        Rational lhs(0);
        for (unsigned i = s; i <= n; ++i)
            lhs += a[i - 1] * c[i][s];
        const Rational rhs =
            (s == n) ? Rational(factorial(2 * n - 1)) : Rational(0);
        const bool pass = (lhs == rhs);
        report.checks.push_back({s, lhs, rhs, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

CoeffMatrix coeff_matrix(unsigned n, CoeffFamily family)
{
    if (n < 1)
        throw Error("coeff_matrix: n must be positive");
    CoeffMatrix m{n, family, {}};
    for (unsigned i = 1; i <= n; ++i) {
        switch (family) {
        case CoeffFamily::A:
            m.rows.push_back(coeff_a(i));
            break;
        case CoeffFamily::B:
            m.rows.push_back(coeff_b(i));
            break;
        case CoeffFamily::C: {
            // Matrix columns run 1..i; the sequence entry for s = 0 is not
            // part of the triangular system.
            auto row = laurent_c(i);
            m.rows.emplace_back(row.begin() + 1, row.end());
            break;
        }
        }
    }
    return m;
}

}  // namespace speczeta

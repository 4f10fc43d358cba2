#include <doctest.h>

#include "speczeta/coeffs.hpp"
#include "speczeta/numbers.hpp"

using namespace speczeta;

TEST_CASE("Laurent coefficients of (sin x)^(-2n)")
{
    CHECK(laurent_c(1) == std::vector<Rational>{ratio(1, 3), Rational(1)});
    CHECK(laurent_c(2) ==
          std::vector<Rational>{ratio(11, 45), ratio(2, 3), Rational(1)});
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(laurent_c(n).back() == 1);
}

TEST_CASE("a-coefficients from the Eulerian/Chebyshev sum")
{
    CHECK(coeff_a(1) == std::vector<Rational>{Rational(1)});
    CHECK(coeff_a(2) == std::vector<Rational>{Rational(-4), Rational(6)});
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(coeff_a(n).back() == Rational(factorial(2 * n - 1)));
}

TEST_CASE("b-coefficients: the u-sum route equals i*a internally")
{
    CHECK(coeff_b(1) == std::vector<Rational>{Rational(1)});
    CHECK(coeff_b(2) == std::vector<Rational>{Rational(-4), Rational(12)});
    for (unsigned n = 1; n <= 12; ++n) {
        const auto a = coeff_a(n);
        const auto b = coeff_b(n);  // throws if its two routes disagree
        for (unsigned i = 1; i <= n; ++i)
            CHECK(b[i - 1] == Rational(i) * a[i - 1]);
    }
}

TEST_CASE("A*C = diag(1!, 3!, ...) row checks")
{
    for (unsigned n = 1; n <= 12; ++n) {
        const auto report = verify_AC_identity(n);
        CHECK(report.all_pass);
        CHECK(report.checks.size() == n);
        for (const auto& c : report.checks) {
            CHECK(c.pass);
            CHECK(c.rhs ==
                  (c.s == n ? Rational(factorial(2 * n - 1)) : Rational(0)));
        }
    }
}

TEST_CASE("a-coefficients via the inverse of C")
{
    CHECK(coeff_a_via_inverse(1) == std::vector<Rational>{Rational(1)});
    CHECK(coeff_a_via_inverse(2) ==
          std::vector<Rational>{Rational(-4), Rational(6)});
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(coeff_a_via_inverse(n) == coeff_a(n));
}

TEST_CASE("coefficient matrices")
{
    const auto A = coeff_matrix(4, CoeffFamily::A);
    const auto B = coeff_matrix(4, CoeffFamily::B);
    const auto C = coeff_matrix(4, CoeffFamily::C);
    for (unsigned i = 1; i <= 4; ++i) {
        CHECK(A.rows[i - 1].size() == i);
        CHECK(A.entry(i, i) == Rational(factorial(2 * i - 1)));
        CHECK(B.entry(i, i) == Rational(i) * Rational(factorial(2 * i - 1)));
        CHECK(C.entry(i, i) == 1);
    }
}

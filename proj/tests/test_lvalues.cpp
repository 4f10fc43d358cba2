#include <vector>

#include "doctest.h"
#include "speczeta/errors.hpp"
#include "speczeta/lvalues.hpp"

using namespace speczeta;

namespace {

SpecialValue pi_rat(int pi_power, const Rational& r)
{
    return {pi_power, CycNum::from_rational(r)};
}

DirichletCharacter find_char(unsigned long N, bool even, bool principal)
{
    for (const DirichletCharacter& chi : characters(N)) {
        if (chi.even == even && is_principal(chi) == principal) {
            return chi;
        }
    }
    FAIL("no character mod ", N, " with the requested parity/principality");
    return {};
}

const DirichletCharacter chi4 = find_char(4, /*even=*/false, /*principal=*/false);

}  // namespace

TEST_CASE("spectral sums at rational angles")
{
    // alpha = pi/2 (p/q = 1/4): the sum over 1/(2k pi + pi/2) is 1/2.
    const SpecialValue s1 = spectral_sum(SpectralSumSpec::make(1, 4, 1));
    CHECK(s1 == pi_rat(0, ratio(1, 2)));

    // alpha = pi, n = 2: 1/(4 sin^2(pi/2)) = 1/4.
    const SpecialValue s2 = spectral_sum(SpectralSumSpec::make(1, 2, 2));
    CHECK(s2 == pi_rat(0, ratio(1, 4)));

    // alpha = pi, n = 1: (1/2)cot(pi/2) = 0.
    const SpecialValue s3 = spectral_sum(SpectralSumSpec::make(1, 2, 1));
    CHECK(s3.coeff.is_zero());

    // The spec is stored in lowest terms, and equal angles give equal values.
    const SpectralSumSpec reduced = SpectralSumSpec::make(2, 8, 2);
    CHECK(reduced.p == 1);
    CHECK(reduced.q == 4);
    CHECK(spectral_sum(reduced) == spectral_sum(SpectralSumSpec::make(1, 4, 2)));

    // Negative numerators fold cleanly: alpha and -alpha give equal values
    // for even n and opposite values for n = 1.
    CHECK(spectral_sum(SpectralSumSpec::make(-1, 4, 2)) ==
          spectral_sum(SpectralSumSpec::make(1, 4, 2)));
    CHECK(spectral_sum(SpectralSumSpec::make(-1, 4, 1)).coeff ==
          -spectral_sum(SpectralSumSpec::make(1, 4, 1)).coeff);

    CHECK_THROWS_AS(SpectralSumSpec::make(3, 3, 2), AlphaIsPole);
    CHECK_THROWS_AS(SpectralSumSpec::make(0, 5, 1), AlphaIsPole);
    CHECK_THROWS_AS(SpectralSumSpec::make(1, 0, 1), Error);
}

TEST_CASE("classical zeta and L(chi_4) values")
{
    CHECK(zeta_even(1) == pi_rat(2, ratio(1, 6)));
    CHECK(zeta_even(2) == pi_rat(4, ratio(1, 90)));
    CHECK(zeta_even(3) == pi_rat(6, ratio(1, 945)));
    CHECK(zeta_even(6) == pi_rat(12, ratio(691, 638512875)));

    CHECK(l_chi4_odd(0) == pi_rat(1, ratio(1, 4)));
    CHECK(l_chi4_odd(1) == pi_rat(3, ratio(1, 32)));
    CHECK(l_chi4_odd(2) == pi_rat(5, ratio(5, 1536)));
    CHECK(l_chi4_odd(3) == pi_rat(7, ratio(61, 184320)));
}

TEST_CASE("S(n) = sum 1/(4k+1)^n")
{
    CHECK(s_value(1) == pi_rat(1, ratio(1, 4)));
    CHECK(s_value(2) == pi_rat(2, ratio(1, 8)));
    CHECK(s_value(3) == pi_rat(3, ratio(1, 32)));
    CHECK(s_value(4) == pi_rat(4, ratio(1, 96)));
    // Larger orders exercise the internal cross-checks against
    // (1 - 2^-n) zeta(n) and L(n, chi_4).
    for (unsigned n = 5; n <= 10; ++n) {
        CHECK_NOTHROW(s_value(n));
    }
}

TEST_CASE("closed-form Dirichlet L-values")
{
    CHECK(dirichlet_L_closed(1, chi4) == pi_rat(1, ratio(1, 4)));
    CHECK(dirichlet_L_closed(3, chi4) == l_chi4_odd(1));
    CHECK(dirichlet_L_closed(5, chi4) == l_chi4_odd(2));

    const DirichletCharacter mod2 = find_char(2, true, true);
    CHECK(dirichlet_L_closed(2, mod2) == pi_rat(2, ratio(1, 8)));
    CHECK(dirichlet_L_closed(4, mod2) == pi_rat(4, ratio(1, 96)));

    // Principal character mod 3: Euler product (1 - 3^-2) zeta(2) = 4 pi^2/27.
    const DirichletCharacter mod3 = find_char(3, true, true);
    CHECK(dirichlet_L_closed(2, mod3) == pi_rat(2, ratio(4, 27)));

    // Quadratic character mod 3: L(1) = pi/(3 sqrt 3), an irrational
    // cyclotomic coefficient; check through the numeric embedding.
    const DirichletCharacter quad3 = find_char(3, false, false);
    const SpecialValue l1 = dirichlet_L_closed(1, quad3);
    CHECK(l1.pi_power == 1);
    CHECK(cyc_to_complex(l1.coeff).real() ==
          doctest::Approx(1.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(cyc_to_complex(l1.coeff).imag() == doctest::Approx(0.0).epsilon(1e-13));

    CHECK_THROWS_AS(dirichlet_L_closed(2, chi4), ParityMismatch);
    CHECK_THROWS_AS(dirichlet_L_closed(1, mod3), ParityMismatch);
}

TEST_CASE("Leopoldt route agrees with the trigonometric route")
{
    CHECK(dirichlet_L_leopoldt(1, chi4) == pi_rat(1, ratio(1, 4)));

    // The primitive character mod 1 gives the Riemann zeta values.
    const DirichletCharacter triv = characters(1).at(0);
    CHECK(dirichlet_L_leopoldt(2, triv) == zeta_even(1));
    CHECK(dirichlet_L_leopoldt(4, triv) == zeta_even(2));

    const DirichletCharacter even5 = find_char(5, true, false);
    CHECK(is_primitive(even5));
    CHECK(dirichlet_L_leopoldt(2, even5) == dirichlet_L_closed(2, even5));

    const DirichletCharacter quad3 = find_char(3, false, false);
    CHECK(dirichlet_L_leopoldt(3, quad3) == dirichlet_L_closed(3, quad3));

    CHECK_THROWS_AS(dirichlet_L_leopoldt(2, find_char(4, true, true)), NotPrimitive);
    CHECK_THROWS_AS(dirichlet_L_leopoldt(2, chi4), ParityMismatch);

    // Sweep every primitive character of every modulus up to 12.
    for (unsigned long N = 3; N <= 12; ++N) {
        for (const DirichletCharacter& chi : characters(N)) {
            if (!is_primitive(chi)) {
                continue;
            }
            for (unsigned n = chi.even ? 2 : 1; n <= 4; n += 2) {
                CAPTURE(N);
                CAPTURE(n);
                CHECK(dirichlet_L_closed(n, chi) == dirichlet_L_leopoldt(n, chi));
            }
        }
    }
}

TEST_CASE("cycle-graph zeta values and Verlinde numbers")
{
    CHECK(graph_zeta(1, 2) == Rational(1));
    CHECK(graph_zeta(1, 3) == ratio(8, 3));
    CHECK(graph_zeta(1, 4) == Rational(5));
    CHECK(graph_zeta(2, 2) == Rational(1));

    CHECK(verlinde_zagier(1, 3) == ratio(8, 3));
    CHECK(verlinde_zagier(2, 2) == Rational(1));
    for (unsigned g = 1; g <= 6; ++g) {
        CHECK(verlinde_zagier(g, 2) == Rational(1));
    }
    for (unsigned long N = 2; N <= 12; ++N) {
        CHECK(verlinde_zagier(1, N) == ratio(static_cast<long>(N * N) - 1, 3));
        for (unsigned g = 1; g <= 4; ++g) {
            CAPTURE(g);
            CAPTURE(N);
            CHECK(verlinde_zagier(g, N) == graph_zeta(g, N));
        }
    }
}

TEST_CASE("graph L-functions: hand values and parity vanishing")
{
    CHECK(graph_L(1, chi4, /*twisted=*/false).is_zero());
    CHECK(graph_L(1, chi4, /*twisted=*/true) == CycNum::from_rational(Rational(4)));

    const DirichletCharacter mod3 = find_char(3, true, true);
    CHECK(graph_L(1, mod3, false) == CycNum::from_rational(ratio(8, 3)));
    CHECK(graph_L(1, mod3, true).is_zero());

    for (unsigned long N = 2; N <= 16; ++N) {
        for (const DirichletCharacter& chi : characters(N)) {
            for (unsigned n = 1; n <= 2; ++n) {
                CAPTURE(N);
                CAPTURE(n);
                if (chi.even) {
                    CHECK(graph_L(n, chi, true).is_zero());
                } else {
                    CHECK(graph_L(n, chi, false).is_zero());
                }
            }
        }
    }
}

TEST_CASE("L-values from graph L-values and back")
{
    CHECK(L_from_graph(1, chi4) == l_chi4_odd(1));
    CHECK(L_from_graph(1, find_char(2, true, true)) == pi_rat(2, ratio(1, 8)));

    const DirichletCharacter even5 = find_char(5, true, false);
    CHECK(L_from_graph(2, even5) == dirichlet_L_leopoldt(4, even5));

    CHECK(graph_from_L(1, find_char(2, true, true)) ==
          CycNum::from_rational(Rational(1)));
    CHECK(graph_from_L(1, chi4) == CycNum::from_rational(Rational(4)));

    for (unsigned long N = 2; N <= 10; ++N) {
        for (const DirichletCharacter& chi : characters(N)) {
            for (unsigned n = 1; n <= 3; ++n) {
                CAPTURE(N);
                CAPTURE(n);
                const unsigned s = chi.even ? 2 * n : 2 * n + 1;
                CHECK(L_from_graph(n, chi) == dirichlet_L_closed(s, chi));
                CHECK(graph_from_L(n, chi) == graph_L(n, chi, !chi.even));
            }
        }
    }
}

TEST_CASE("zeta values recovered from cycle-graph spectra")
{
    CHECK(zeta_from_spectral(1, 2) == zeta_even(1));
    CHECK(zeta_from_spectral(1, 3) == zeta_even(1));
    CHECK(zeta_from_spectral(2, 5) == zeta_even(2));
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned long N = 2; N <= 8; ++N) {
            CAPTURE(n);
            CAPTURE(N);
            CHECK(zeta_from_spectral(n, N) == zeta_even(n));
        }
    }
}

TEST_CASE("graph L-values via Bernoulli polynomials")
{
    CHECK(graph_L_via_bernoulli(1, chi4) == CycNum::from_rational(Rational(4)));

    const DirichletCharacter even5 = find_char(5, true, false);
    CHECK(graph_L_via_bernoulli(1, even5) == graph_L(1, even5, false));

    CHECK_THROWS_AS(graph_L_via_bernoulli(1, find_char(4, true, true)), NotPrimitive);

    for (unsigned long N = 3; N <= 12; ++N) {
        for (const DirichletCharacter& chi : characters(N)) {
            if (!is_primitive(chi)) {
                continue;
            }
            for (unsigned n = 1; n <= 3; ++n) {
                CAPTURE(N);
                CAPTURE(n);
                CHECK(graph_L_via_bernoulli(n, chi) == graph_L(n, chi, !chi.even));
            }
        }
    }
}

TEST_CASE("character means of L-values")
{
    CHECK(mean_L_closed_form(1, 4, Parity::Odd) == pi_rat(1, ratio(1, 4)));
    CHECK(mean_L_closed_form(1, 3, Parity::Even) == pi_rat(2, ratio(4, 27)));

    for (unsigned long N = 3; N <= 10; ++N) {
        for (unsigned n = 1; n <= 2; ++n) {
            for (const Parity parity : {Parity::Even, Parity::Odd}) {
                CAPTURE(N);
                CAPTURE(n);
                CHECK(mean_L_closed_form(n, N, parity) ==
                      mean_L_bruteforce(n, N, parity));
            }
        }
    }

    CHECK_THROWS_AS(mean_L_closed_form(1, 2, Parity::Even), Error);
    CHECK_THROWS_AS(mean_L_bruteforce(1, 2, Parity::Odd), Error);
}

TEST_CASE("character-weighted spectral sums assemble Dirichlet L-values")
{
    // L(n, chi) = (2^(n-1) pi^n / N^n) sum_m chi(m) spectral_sum(2 m pi/N, n).
    for (unsigned long N = 3; N <= 8; ++N) {
        for (const DirichletCharacter& chi : characters(N)) {
            for (unsigned n = chi.even ? 2 : 1; n <= 3; n += 2) {
                CAPTURE(N);
                CAPTURE(n);
                CycNum sum;
                for (unsigned long m = 1; m < N; ++m) {
                    const CycNum cv = char_eval(chi, static_cast<long>(m));
                    if (cv.is_zero()) {
                        continue;
                    }
                    const auto spec =
                        SpectralSumSpec::make(static_cast<long>(m), N, n);
                    sum += cv * spectral_sum(spec).coeff;
                }
                const Rational scale =
                    ratio(pow_int(2, n - 1), pow_int(N, n));
                const SpecialValue assembled{static_cast<int>(n), sum * scale};
                CHECK(assembled == dirichlet_L_closed(n, chi));
            }
        }
    }
}

TEST_CASE("SpecialValue arithmetic")
{
    const SpecialValue a = pi_rat(2, ratio(1, 6));
    const SpecialValue b = pi_rat(2, ratio(1, 3));
    CHECK((a + b) == pi_rat(2, ratio(1, 2)));
    CHECK((a * b) == pi_rat(4, ratio(1, 18)));
    CHECK((a * ratio(3, 1)) == pi_rat(2, ratio(1, 2)));
    CHECK_THROWS_AS(a + pi_rat(3, ratio(1, 6)), Error);
    // Zero compares equal across pi-powers.
    CHECK(pi_rat(2, Rational(0)) == pi_rat(4, Rational(0)));
    CHECK(zeta_even(1).str() == "(1/6) * pi^2");
}

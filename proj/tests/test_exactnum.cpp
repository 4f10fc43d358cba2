#include <doctest.h>

#include <complex>

#include "speczeta/cyclotomic.hpp"
#include "speczeta/errors.hpp"
#include "speczeta/numbers.hpp"
#include "speczeta/polyq.hpp"
#include "speczeta/seriesq.hpp"

using namespace speczeta;

TEST_CASE("rational helpers")
{
    CHECK(ratio(6, -4) == ratio(-3, 2));
    CHECK(format_rational(ratio(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK(parse_rational("-3/2").value() == ratio(-3, 2));
    CHECK(parse_rational("42").value() == Rational(42));
    CHECK(parse_rational("6/4").value() == ratio(3, 2));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
    CHECK(!parse_rational("1/2/3").has_value());
    CHECK_THROWS_AS(ratio(1, 0), DivisionByZero);
    CHECK(pow_rat(ratio(-2, 3), -2) == ratio(9, 4));
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
}

TEST_CASE("polynomial arithmetic and division")
{
    const PolyQ p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    const PolyQ q({Rational(1), Rational(1)});                // x + 1
    auto [quot, rem] = p.divmod(q);
    CHECK(quot == PolyQ({Rational(-1), Rational(1)}));
    CHECK(rem.is_zero());
    CHECK(p.eval(ratio(1, 2)) == ratio(-3, 4));
    CHECK((p * q).degree() == 3);
    CHECK((p - p).is_zero());
    CHECK(p.str() == "x^2 - 1");
    CHECK_THROWS_AS(p.divmod(PolyQ()), DivisionByZero);

    // Division with a remainder: x^3 = (x^2+1) * x - x.
    const PolyQ cube  = PolyQ::monomial(3);
    const PolyQ xx1   = PolyQ({Rational(1), Rational(0), Rational(1)});
    auto [q2, r2]     = cube.divmod(xx1);
    CHECK(q2 == PolyQ::monomial(1));
    CHECK(r2 == PolyQ::monomial(1, Rational(-1)));
}

TEST_CASE("series multiplication tracks truncation")
{
    // (1 - x + O(x^5)) * (1 + x) is known exactly through x^4.
    const SeriesQ a = SeriesQ::from_coeffs(0, {Rational(1), Rational(-1)}, 5);
    const SeriesQ b =
        SeriesQ::from_poly(PolyQ({Rational(1), Rational(1)}));
    const SeriesQ ab = a * b;
    CHECK(ab.truncation_order() == 5);
    CHECK(ab.coeff(0) == 1);
    CHECK(ab.coeff(1) == 0);
    CHECK(ab.coeff(2) == -1);
    CHECK_THROWS_AS(ab.coeff(5), Error);
}

TEST_CASE("series reciprocal: geometric series")
{
    // 1/(1 - x) = 1 + x + x^2 + ... through the known window.
    const SeriesQ s = SeriesQ::from_coeffs(0, {Rational(1), Rational(-1)}, 5);
    const SeriesQ r = s.reciprocal();
    for (int k = 0; k < 5; ++k)
        CHECK(r.coeff(k) == 1);
    // Laurent valuation: 1/(x^2 - x^3) starts at x^(-2).
    const SeriesQ t =
        SeriesQ::from_coeffs(2, {Rational(1), Rational(-1)}, 6).reciprocal();
    CHECK(t.valuation() == -2);
    CHECK(t.coeff(-2) == 1);
    CHECK(t.coeff(-1) == 1);
    CHECK(t.truncation_order() == 2);
    CHECK_THROWS_AS(SeriesQ().reciprocal(), ZeroLeadingCoefficient);
}

TEST_CASE("series pow on exact Laurent monomials")
{
    const SeriesQ m = SeriesQ::monomial(-1).pow(3);
    CHECK(m.valuation() == -3);
    CHECK(m.coeff(-3) == 1);
    CHECK(m.is_exact());
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == PolyQ({Rational(-1), Rational(1)}));
    CHECK(cyclotomic_polynomial(2) == PolyQ({Rational(1), Rational(1)}));
    CHECK(cyclotomic_polynomial(4) == PolyQ({Rational(1), Rational(0), Rational(1)}));
    // Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(12) ==
          PolyQ({Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)}));
    for (unsigned long M : {9ul, 16ul, 36ul, 100ul})
        CHECK(cyclotomic_polynomial(M).degree() ==
              static_cast<long>(euler_phi(M)));
    // Phi_105 is the first with a coefficient of magnitude 2.
    const PolyQ& p105 = cyclotomic_polynomial(105);
    CHECK(p105.coeff(7) == -2);
}

TEST_CASE("number theory helpers")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(100) == 40);
    CHECK(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
    CHECK(lcm_u(76, 18) == 684);
}

TEST_CASE("cyclotomic field arithmetic")
{
    // zeta_5 satisfies 1 + z + z^2 + z^3 + z^4 = 0.
    CycNum z = CycNum::root_of_unity(5, 1);
    CycNum s = CycNum::from_rational(Rational(1), 5);
    for (int k = 1; k <= 4; ++k)
        s += z.pow(k);
    CHECK(s.is_zero());

    // Inverse round-trips, both by Euclid and as a power.
    CycNum w   = z + CycNum::from_rational(ratio(1, 2), 5);
    CycNum one = CycNum::from_rational(Rational(1), 5);
    CHECK(w * w.inverse() == one);
    CHECK(z.inverse() == z.pow(4));
    CHECK(z.pow(-3) == z.pow(2));
    CHECK_THROWS_AS(CycNum().inverse(), DivisionByZero);

    // Promotion keeps values: zeta_3 seen in Q(zeta_12).
    CycNum z3 = CycNum::root_of_unity(3, 1);
    CHECK(z3.promoted(12) == CycNum::root_of_unity(12, 4));
    CHECK(z3.promoted(12) + CycNum::root_of_unity(12, 8) ==
          CycNum::from_rational(Rational(-1), 12));  // zeta_3 + zeta_3^2 = -1

    // Rationality detection.
    CHECK((z * z.pow(4)).as_rational() == 1);
    CHECK_THROWS_AS(z.as_rational(), NonRationalResult);
}

TEST_CASE("exact trig values in Q(zeta_4N)")
{
    // sin(pi/2) = 1, cos(pi/3) = 1/2, cot(pi/4) = 1.
    CHECK(trig_value(2, 1, TrigKind::Sin).as_rational() == 1);
    CHECK(trig_value(3, 1, TrigKind::Cos).as_rational() == ratio(1, 2));
    CHECK(trig_value(4, 1, TrigKind::Cot).as_rational() == 1);
    CHECK_THROWS_AS(trig_value(3, 3, TrigKind::Sin), PoleAtInteger);
    CHECK_THROWS_AS(trig_value(5, 0, TrigKind::Cot), PoleAtInteger);

    // sin^2 + cos^2 = 1 and inv_sin * sin = 1 across a grid.
    for (unsigned long N : {3ul, 5ul, 8ul, 12ul})
        for (long m = 1; m < static_cast<long>(N); ++m) {
            const CycNum s = trig_value(N, m, TrigKind::Sin);
            const CycNum c = trig_value(N, m, TrigKind::Cos);
            CHECK(s * s + c * c ==
                  CycNum::from_rational(Rational(1), 4 * N));
            CHECK(s * inv_sin(N, m) ==
                  CycNum::from_rational(Rational(1), 4 * N));
            CHECK(inv_sin(N, m) == s.inverse());
            CHECK(trig_value(N, m, TrigKind::Cot) == c * s.inverse());
        }

    // Negative and out-of-range m fold correctly: sin(-x) = -sin(x),
    // sin(x + 2pi) = sin(x).
    CHECK(trig_value(5, -2, TrigKind::Sin) ==
          -trig_value(5, 2, TrigKind::Sin));
    CHECK(trig_value(5, 13, TrigKind::Sin) ==
          trig_value(5, 3, TrigKind::Sin));

    // Numeric embedding agrees with libm.
    for (long m = 1; m < 7; ++m) {
        const auto v = cyc_to_complex(trig_value(7, m, TrigKind::Sin));
        CHECK(std::abs(v.real() - std::sin(m * std::numbers::pi / 7)) < 1e-12);
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("root-of-unity reciprocal identity")
{
    // 1/(zeta_K - 1) = (1/K) sum i zeta_K^i, the identity behind inv_sin.
    for (unsigned long K : {2ul, 3ul, 7ul, 12ul}) {
        const CycNum z   = CycNum::root_of_unity(K, 1);
        const CycNum one = CycNum::from_rational(Rational(1), K);
        CycAccum acc(K);
        for (unsigned long i = 1; i < K; ++i)
            acc.add_monomial(static_cast<long>(i),
                             ratio(static_cast<long>(i), static_cast<long>(K)));
        CHECK((z - one) * acc.result() == one);
    }
}

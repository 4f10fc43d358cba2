#include "speczeta/numbers.hpp"

#include "speczeta/errors.hpp"

namespace speczeta {

Rational ratio(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DivisionByZero("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational ratio(long num, long den)
{
    return ratio(Integer(num), Integer(den));
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer pow_int(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rat(const Rational& base, long exp)
{
    if (exp == 0)
        return Rational(1);
    if (base == 0) {
        if (exp < 0)
            throw DivisionByZero("pow_rat: 0 raised to a negative power");
        return Rational(0);
    }
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Integer num          = pow_int(base.get_num(), e);
    Integer den          = pow_int(base.get_den(), e);
    return exp < 0 ? ratio(den, num) : ratio(num, den);
}

double to_double(const Rational& q)
{
    return mpq_get_d(q.get_mpq_t());
}

std::string format_rational(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    const auto slash   = text.find('/');
    const auto is_int  = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text))
                return std::nullopt;
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            return std::nullopt;
        Integer d(den);
        if (d == 0)
            return std::nullopt;
        return ratio(Integer(num), d);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace speczeta

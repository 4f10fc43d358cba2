#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace speczeta {

// Exact arithmetic is backed by GMP throughout.  Rational values are kept in
// canonical form (coprime numerator/denominator, positive denominator); all
// helpers below preserve that invariant.
using Integer  = mpz_class;
using Rational = mpq_class;

// Canonical p/q.  The two-argument mpq_class constructor does *not*
// canonicalize, so raw construction from a pair must go through here.
Rational ratio(const Integer& num, const Integer& den);
Rational ratio(long num, long den);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer pow_int(const Integer& base, unsigned long exp);

// base^exp with exp of either sign; negative exp requires base != 0.
Rational pow_rat(const Rational& base, long exp);

double to_double(const Rational& q);

// "p/q", or just "p" for integers.  parse_rational accepts exactly that
// grammar (optional sign, nonzero denominator) and canonicalizes.
std::string format_rational(const Rational& q);
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace speczeta

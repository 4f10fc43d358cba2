#pragma once

#include <optional>
#include <vector>

#include "speczeta/cyclotomic.hpp"
#include "speczeta/numbers.hpp"

namespace speczeta {

// (Z/N)^x as an internal direct product of cyclic factors: generators[i]
// has multiplicative order orders[i] mod N, and the products of generator
// powers hit every unit exactly once.
struct UnitGroupStructure {
    unsigned long modulus;
    std::vector<unsigned long> generators;
    std::vector<unsigned long> orders;
};

// CRT decomposition over the prime powers dividing N: an odd p^k gives one
// cyclic factor on a primitive root, 4 gives <-1>, and 2^k (k >= 3) gives
// <-1> x <5>.  Cached per modulus.
const UnitGroupStructure& unit_group_structure(unsigned long N);

// A Dirichlet character mod N, stored by its exponents on the unit-group
// generators.  chi(generators[i]) = zeta_{orders[i]}^{exponents[i]}.
struct DirichletCharacter {
    unsigned long modulus;
    std::vector<unsigned long> exponents;
    unsigned long order;  // multiplicative order of chi
    bool even;            // chi(-1) == 1
};

// All phi(N) characters mod N in lexicographic order of exponent tuples.
std::vector<DirichletCharacter> characters(unsigned long N);

// The exponent e with chi(m) = zeta_{order}^e, or nullopt when gcd(m,N) > 1.
// Discrete logs come from a cached exhaustive table per modulus.
std::optional<unsigned long> char_exponent(const DirichletCharacter& chi, long m);

// chi(m) as an element of Q(zeta_order) (zero included).
CycNum char_eval(const DirichletCharacter& chi, long m);

bool is_principal(const DirichletCharacter& chi);
// Smallest f | N with chi trivial on every unit congruent to 1 mod f.
unsigned long conductor(const DirichletCharacter& chi);
bool is_primitive(const DirichletCharacter& chi);

// The complex-conjugate character (all exponents negated).
DirichletCharacter conjugate_char(const DirichletCharacter& chi);

// G(chi) = sum_{a=1}^{N} chi(a) zeta_N^a in Q(zeta_lcm(N, order)).  For a
// primitive character the result is checked against G(chi) G(conj chi) =
// chi(-1) N before being returned.
CycNum gauss_sum(const DirichletCharacter& chi);

}  // namespace speczeta

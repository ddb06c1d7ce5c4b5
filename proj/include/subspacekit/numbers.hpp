#ifndef SUBSPACEKIT_NUMBERS_HPP
#define SUBSPACEKIT_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subspacekit/errors.hpp"

namespace subspacekit {

// Every quantity in the toolkit is exact: arbitrary-precision integers and
// rationals. cpp_rational keeps values canonical (reduced, denominator > 0).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return numerator(x); }
inline Int den(const Rat& x) { return denominator(x); }

// "p/q" or a plain integer literal.
Rat parse_rational(const std::string& text);
Int parse_integer(const std::string& text);
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// x^e for integer e (negative e inverts; requires x != 0 then).
Rat pow_rat(const Rat& x, const Int& e);

// floor of the q-th root of n >= 0
Int iroot_floor(const Int& n, unsigned q);

// exact q-th root when one exists in Z (resp. Q); negative inputs allowed
// for odd q
std::optional<Int> exact_iroot(const Int& n, unsigned q);
std::optional<Rat> exact_qth_root(const Rat& x, unsigned q);
bool is_qth_power(const Rat& x, unsigned q);

inline constexpr long default_factor_bound = 1000000;

struct Factorization {
    // (prime, exponent), primes strictly increasing
    std::vector<std::pair<Int, int>> factors;
};

// Deterministic trial division up to `bound`. Inputs here are desk-scale;
// a composite cofactor that survives all divisors <= bound raises
// factorization_bound instead of silently guessing.
Factorization factorize(Int n, const Int& bound = default_factor_bound);

// Primality by the same trial division; inconclusive beyond bound^2.
bool is_prime(const Int& n, const Int& bound = default_factor_bound);

// Multiplicity of the prime p in n != 0.
Int int_valuation(Int n, const Int& p);

// Closest rational to x with denominator <= max_den (continued fractions).
Rat limit_denominator(const Rat& x, const Int& max_den);

// Nearest integer, halves away from zero.
Int round_to_int(const Rat& x);

} // namespace subspacekit

#endif

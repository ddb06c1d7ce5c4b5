#ifndef SUBSPACEKIT_HEIGHTS_HPP
#define SUBSPACEKIT_HEIGHTS_HPP

#include <vector>

#include "subspacekit/places.hpp"

namespace subspacekit {

// Coordinates of a point of projective space over Q; height computations
// require at least one nonzero coordinate.
using RationalVector = std::vector<Rat>;

// Exponent v with a = p^v * (unit at p); a != 0, p prime.
Int valuation(const Rat& a, const Int& p);

// |a| at the given place, as an exact rational. |0| = 0 everywhere; at a
// finite place p the norm of a nonzero a is p^(-valuation).
Rat norm_at(const Rat& a, const Place& place);

// H(y/x) = max{|x|, |y|} for y/x in lowest terms.
Int height_rational(const Rat& xi);

// Product of sup-norms over all places. Only finitely many places contribute
// a factor != 1: the infinite place and the primes dividing some coordinate.
// Scaling-invariant; equals max|x_i| on coprime integer coordinates.
Rat height_vector(const RationalVector& x, const Int& factor_bound = default_factor_bound);

// true iff the reduced denominator of xi involves only primes from S
bool is_s_integer(const Rat& xi, const PlaceSet& s, const Int& factor_bound = default_factor_bound);

// S-integer whose inverse is also an S-integer
bool is_s_unit(const Rat& xi, const PlaceSet& s, const Int& factor_bound = default_factor_bound);

// The exact product of |a|_p over the infinite place and every prime dividing
// numerator or denominator. Always 1; exported so the identity is checkable.
Rat product_formula_check(const Rat& a, const Int& factor_bound = default_factor_bound);

// primes dividing numerator or denominator of a nonzero rational
std::vector<Int> support_primes(const Rat& a, const Int& factor_bound = default_factor_bound);

} // namespace subspacekit

#endif

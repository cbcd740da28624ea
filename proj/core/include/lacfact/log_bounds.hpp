#ifndef LACFACT_LOG_BOUNDS_HPP
#define LACFACT_LOG_BOUNDS_HPP

#include "lacfact/numeric.hpp"

namespace lacfact {

// Certified rational enclosure of a natural logarithm: lower <= ln(x) <= upper.
// Every quantity that feeds a gap threshold is rounded in the direction that
// keeps the threshold an over-approximation, so downstream ceilings stay sound.
struct LnBounds {
  BigRat lower;
  BigRat upper;
};

// Enclosure of ln 2.
const LnBounds& ln2_bounds();

// Enclosure of ln(x) for rational x >= 1. Throws std::domain_error otherwise.
LnBounds ln_bounds(const BigRat& x);
LnBounds ln_bounds(const BigNat& x);

// Nearest dyadic with `bits` fractional bits, rounded toward +/- infinity.
BigRat dyadic_round_up(const BigRat& x, unsigned long bits);
BigRat dyadic_round_down(const BigRat& x, unsigned long bits);

}  // namespace lacfact

#endif

#ifndef LACFACT_DENSE_FACTOR_HPP
#define LACFACT_DENSE_FACTOR_HPP

#include <utility>
#include <vector>

#include "lacfact/dense_poly.hpp"

namespace lacfact {

// Complete factorization over Q: unit * prod poly^mult == input exactly.
// Factors are primitive integer, irreducible over Q, canonically signed and
// sorted; both routines re-multiply and compare before returning.
struct DenseFactorization1 {
  BigRat unit;
  std::vector<std::pair<DensePoly1, unsigned long>> factors;
};
struct DenseFactorization2 {
  BigRat unit;
  std::vector<std::pair<DensePoly2, unsigned long>> factors;
};

DenseFactorization1 factor_univariate(const DensePoly1& f);
DenseFactorization2 factor_bivariate(const DensePoly2& f);

}  // namespace lacfact

#endif

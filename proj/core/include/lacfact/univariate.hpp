#ifndef LACFACT_UNIVARIATE_HPP
#define LACFACT_UNIVARIATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "lacfact/dense_poly.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

struct UnivariateFactor {
  DensePoly1 poly;  // primitive integer, irreducible, canonical sign
  unsigned long multiplicity = 0;
  bool cyclotomic = false;
};

struct UnivariateFactorList {
  BigNat z_multiplicity;
  std::vector<UnivariateFactor> factors;
  // Candidates and pieces that could not be checked at the dense limit.
  // Nonempty means the factor list may be incomplete.
  std::vector<std::string> untested;
};

// Indices n with phi(n) <= d whose cyclotomic polynomial divides f, with
// multiplicities (consecutive derivatives of f divisible, capped at one
// less than the term count). f must be univariate in v with its v-power
// stripped. Candidates whose fold size exceeds the dense limit are recorded
// in `untested` when a sink is supplied.
std::vector<std::pair<unsigned long, unsigned long>> cyclotomic_factors(
    const SparsePoly& f, Var v, unsigned long d, unsigned long dense_limit,
    std::vector<std::string>* untested = nullptr);

// All irreducible factors of degree <= d of a sparse univariate polynomial,
// with multiplicities, in time polynomial in the sparse encoding: cyclotomic
// factors by exponent folding, everything else by gap splitting plus dense
// factorization of the pieces. Works for any exponent size; only the piece
// spreads must fit the dense limit.
UnivariateFactorList find_low_degree_factors(const SparsePoly& f, Var v, unsigned long d,
                                             unsigned long dense_limit);

}  // namespace lacfact

#endif

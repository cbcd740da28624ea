#ifndef LACFACT_BINOMIAL_HPP
#define LACFACT_BINOMIAL_HPP

#include <string>
#include <vector>

#include "lacfact/dense_poly.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

// Reduction of f by x^alpha - z y^beta (form1) or x^alpha y^beta - z (form2):
// every term lands in one slice keyed by its (x mod alpha, adjusted y)
// residue, carrying a univariate polynomial in z.
enum class BinomialForm { form1, form2 };

struct BinomialSlice {
  unsigned long i = 0;  // x-exponent of the slice monomial, < alpha
  BigNat j;             // y-exponent (after lift normalization for form2)
  SparsePoly g;         // slice polynomial in z, stored in the x variable
};

struct BinomialRemainder {
  BinomialForm form = BinomialForm::form1;
  unsigned long alpha = 1;
  unsigned long beta = 1;
  // form2 only: the remainder is y^(-y_lift) times the stored slices, so that
  // stored y-exponents are naturals.
  BigNat y_lift;
  std::vector<BinomialSlice> slices;  // sorted by (i, j); term counts sum to t
};

BinomialRemainder remainder_slices(const SparsePoly& f, unsigned long alpha, unsigned long beta,
                                   BinomialForm form);

// The bivariate factor corresponding to a z-factor q of the remainder:
// form1: y^(beta deg q) q(x^alpha y^-beta), total degree max(alpha,beta)*deg q;
// form2: q(x^alpha y^beta), total degree (alpha+beta)*deg q.
// Canonical primitive representative. Throws DegreeExceededError when the
// total degree lands above d.
DensePoly2 reconstruct_factor(const DensePoly1& q, unsigned long alpha, unsigned long beta,
                              BinomialForm form, unsigned long d);

struct BinomialFactor {
  DensePoly2 poly;  // irreducible, collinear support
  unsigned long multiplicity = 0;
  bool cyclotomic = false;
};

struct BinomialSearchResult {
  std::vector<BinomialFactor> factors;
  std::vector<std::string> untested;
};

// All irreducible factors of f of degree <= d whose support is collinear
// (products of binomials over the algebraic closure, pure-variable factors
// included), with exact multiplicities: scans coprime exponent pairs in both
// forms, factors every slice, and intersects with minimum multiplicity.
// Expects the trivial x/y monomial content already stripped.
BinomialSearchResult binomial_factor_search(const SparsePoly& f, unsigned long d,
                                            unsigned long dense_limit);

}  // namespace lacfact

#endif

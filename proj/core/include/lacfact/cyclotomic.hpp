#ifndef LACFACT_CYCLOTOMIC_HPP
#define LACFACT_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "lacfact/dense_poly.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

// All n >= 1 with phi(n) <= d. Sieves n <= 2d^2, which covers everything
// since phi(n) >= sqrt(n/2).
std::vector<unsigned long> phi_inverse_candidates(unsigned long d);

unsigned long euler_phi(unsigned long n);

// The n-th cyclotomic polynomial, degree phi(n). Cached across calls.
DensePoly1 cyclotomic_poly(unsigned long n);

// n such that q equals the n-th cyclotomic polynomial, if any.
std::optional<unsigned long> cyclotomic_index(const DensePoly1& q);

// A product of cyclotomic polynomials up to a rational constant (constants
// count as the empty product). Kronecker: such polynomials are exactly those
// whose roots all lie on the unit circle, and repeated division by candidate
// cyclotomics decides it.
bool is_cyclotomic_product(const DensePoly1& q);

// When the support of p is collinear (monomials and binomials included),
// the univariate polynomial read off along the support line, with parameter
// normalized to start at zero; nullopt otherwise.
std::optional<DensePoly1> support_line_poly(const DensePoly2& p);

// Whether p is a product of binomials (including monomials) whose
// coefficients are roots of unity: support collinear and the polynomial
// along the support line is (up to sign) a product of cyclotomics.
bool is_torsion_form(const DensePoly2& p);

// f mod (v^n - 1), computed on the sparse encoding by folding exponents
// mod n. f must be univariate in v.
DensePoly1 reduce_mod_cyclotomic_support(const SparsePoly& f, Var v, unsigned long n);

}  // namespace lacfact

#endif

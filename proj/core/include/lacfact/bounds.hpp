#ifndef LACFACT_BOUNDS_HPP
#define LACFACT_BOUNDS_HPP

#include "lacfact/dense_poly.hpp"
#include "lacfact/numeric.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

struct BoundReport {
  unsigned long n = 1;  // degree bound on the factors counted
  BigRat h1_upper;
  BigNat degree;  // total degree of f
  BigRat bound_rational;
  BigRat bound_absolute;
};

// Upper bound on the number of irreducible factors of degree <= n over Q,
// counted with multiplicity and excluding torsion forms:
// 5^6 * n^3 * h1 * ln^3(8 n degree), logs rounded upward.
BigRat factor_count_bound_rational(unsigned long n, const BigRat& h1_upper, const BigNat& degree);

// Same count over the algebraic closure:
// 10^14 * n^8 * h1 * ln^5(max(16, n * degree)), logs rounded upward.
BigRat factor_count_bound_absolute(unsigned long n, const BigRat& h1_upper, const BigNat& degree);

BoundReport bound_report(unsigned long n, const BigRat& h1_upper, const BigNat& degree);

// a x + b y + c with nonzero coprime integer coefficients, a > 0.
struct LinearCandidate {
  BigInt a, b, c;
};

// Validates and canonicalizes (flips all three signs if a < 0). Throws
// InvalidCandidateError on a zero coefficient or gcd(a, b, c) != 1.
LinearCandidate make_linear_candidate(BigInt a, BigInt b, BigInt c);

DensePoly2 linear_poly(const LinearCandidate& p);

// Certified lower bound on the height lambda of a x + b y + c, hence on the
// gap density it supports. Exactly 0.1911 when |a| = |b| = |c| = 1 (Zagier's
// constant, truncated downward); otherwise half a downward bound on
// ln max(|a|, |b|, |c|).
BigRat adaptive_mu_lower(const LinearCandidate& p);

// Divisibility test with the candidate-specific gap length
// ceil(compute_c(f) / adaptive_mu_lower(p)), usually far below the general
// certified gap. True iff the candidate divides every densified piece.
bool test_linear_factor_adaptive(const SparsePoly& f, const LinearCandidate& p,
                                 unsigned long dense_limit = 2000);

}  // namespace lacfact

#endif

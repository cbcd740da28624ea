#include <algorithm>

#include "lacfact/bounds.hpp"
#include "lacfact/gap.hpp"
#include "lacfact/log_bounds.hpp"

namespace lacfact {

BigRat factor_count_bound_rational(unsigned long n, const BigRat& h1_upper,
                                   const BigNat& degree) {
  if (n < 1 || degree < 1) throw std::invalid_argument("bound requires n >= 1 and degree >= 1");
  if (sgn(h1_upper) < 0) throw std::invalid_argument("h1 bound must be nonnegative");
  if (sgn(h1_upper) == 0) return BigRat(0);
  BigNat arg = 8 * BigNat(n) * degree;
  BigRat ln3 = rat_pow_ui(ln_bounds(BigRat(arg)).upper, 3);
  BigNat n3 = BigNat(n) * n * n;
  return BigRat(15625) * BigRat(n3) * h1_upper * ln3;
}

BigRat factor_count_bound_absolute(unsigned long n, const BigRat& h1_upper,
                                   const BigNat& degree) {
  if (n < 1 || degree < 1) throw std::invalid_argument("bound requires n >= 1 and degree >= 1");
  if (sgn(h1_upper) < 0) throw std::invalid_argument("h1 bound must be nonnegative");
  if (sgn(h1_upper) == 0) return BigRat(0);
  BigNat arg = BigNat(n) * degree;
  if (arg < 16) arg = 16;
  BigRat ln5 = rat_pow_ui(ln_bounds(BigRat(arg)).upper, 5);
  BigNat n8 = pow_ui(BigInt(n), 8);
  return BigRat(pow_ui(BigInt(10), 14)) * BigRat(n8) * h1_upper * ln5;
}

BoundReport bound_report(unsigned long n, const BigRat& h1_upper, const BigNat& degree) {
  BoundReport r;
  r.n = n;
  r.h1_upper = h1_upper;
  r.degree = degree;
  r.bound_rational = factor_count_bound_rational(n, h1_upper, degree);
  r.bound_absolute = factor_count_bound_absolute(n, h1_upper, degree);
  return r;
}

LinearCandidate make_linear_candidate(BigInt a, BigInt b, BigInt c) {
  if (sgn(a) == 0 || sgn(b) == 0 || sgn(c) == 0)
    throw InvalidCandidateError("linear candidate coefficients must all be nonzero");
  if (gcd(gcd(a, b), c) != 1)
    throw InvalidCandidateError("linear candidate coefficients must be coprime");
  if (sgn(a) < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {std::move(a), std::move(b), std::move(c)};
}

DensePoly2 linear_poly(const LinearCandidate& p) {
  return DensePoly2::from_rows({{BigRat(p.c), BigRat(p.a)}, {BigRat(p.b)}});
}

BigRat adaptive_mu_lower(const LinearCandidate& p) {
  if (sgn(p.a) == 0 || sgn(p.b) == 0 || sgn(p.c) == 0)
    throw InvalidCandidateError("linear candidate coefficients must all be nonzero");
  BigInt m = BigInt(abs(p.a));
  BigInt bb = BigInt(abs(p.b));
  BigInt cc = BigInt(abs(p.c));
  if (bb > m) m = bb;
  if (cc > m) m = cc;
  if (m == 1) return BigRat(1911, 10000);
  return ln_bounds(BigRat(m)).lower / 2;
}

bool test_linear_factor_adaptive(const SparsePoly& f, const LinearCandidate& p,
                                 unsigned long dense_limit) {
  if (f.is_zero()) throw ZeroPolynomialError();
  BigNat delta = ceil_rat(compute_c(f) / adaptive_mu_lower(p));
  DensePoly2 pd = linear_poly(p);
  for (const auto& piece : decompose(f, delta, delta).pieces) {
    DensePoly2 dense = densify_bivariate(piece.piece, dense_limit).poly;
    if (!exact_divide(dense, pd)) return false;
  }
  return true;
}

}  // namespace lacfact

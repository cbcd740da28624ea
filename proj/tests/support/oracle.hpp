#ifndef LACFACT_TESTS_ORACLE_HPP
#define LACFACT_TESTS_ORACLE_HPP

// Shared helpers for the test binaries: a high precision logarithm oracle
// that shares no code with the library's interval log, and small random
// generators for sparse/dense polynomials.

#include <cstdint>
#include <random>
#include <vector>

#include "lacfact/dense_poly.hpp"
#include "lacfact/numeric.hpp"
#include "lacfact/sparse_poly.hpp"

namespace testsupport {

using lacfact::BigInt;
using lacfact::BigNat;
using lacfact::BigRat;
using lacfact::SparsePoly;
using lacfact::Term;

// ln(1 + w) by the Mercator series, |w| <= 1/2, truncation error under
// 2^-(bits+8). Deliberately a different series and reduction than the
// library (which uses atanh on [1,2)) so a shared mistake is unlikely.
inline BigRat mercator_ln1p(const BigRat& w, unsigned long bits) {
  // |tail after N terms| <= |w|^(N+1) / ((N+1)(1-|w|)); with |w| <= 1/2 each
  // term shrinks by at least half, so N = bits + 16 is plenty.
  unsigned long n = bits + 16;
  BigRat sum = 0;
  BigRat pw = w;
  for (unsigned long k = 1; k <= n; ++k) {
    if (k % 2 == 1)
      sum += pw / BigRat(k);
    else
      sum -= pw / BigRat(k);
    pw *= w;
  }
  return sum;
}

// ln(x) for rational x >= 1 within 2^-bits. Reduction: x = 2^m * (3/2)^s * r
// with r in [1, 4/3), then Mercator on r - 1 in [0, 1/3).
inline BigRat oracle_ln(const BigRat& x, unsigned long bits = 160) {
  static const BigRat ln32 = mercator_ln1p(BigRat(1, 2), 200);   // ln(3/2)
  static const BigRat ln43 = mercator_ln1p(BigRat(1, 3), 200);   // ln(4/3)
  static const BigRat ln2 = ln32 + ln43;
  BigRat r = x;
  long m = 0;
  while (cmp(r, 2) >= 0) {
    r /= 2;
    ++m;
  }
  int s = 0;
  if (cmp(r, BigRat(3, 2)) >= 0) {
    r *= BigRat(2, 3);
    s = 1;
  }
  return m * ln2 + s * ln32 + mercator_ln1p(r - 1, bits);
}

inline BigRat oracle_ln(unsigned long x, unsigned long bits = 160) {
  return oracle_ln(BigRat(x), bits);
}

inline BigRat rat_abs(const BigRat& q) { return sgn(q) < 0 ? BigRat(-q) : q; }

// Uniform natural below 2^bits.
inline BigNat random_nat_bits(std::mt19937_64& rng, unsigned long bits) {
  BigNat r = 0;
  unsigned long full = bits / 64;
  for (unsigned long i = 0; i < full; ++i) {
    r <<= 64;
    r += BigNat(rng());
  }
  unsigned long rest = bits % 64;
  if (rest) {
    r <<= rest;
    r += BigNat(rng() >> (64 - rest));
  }
  return r;
}

inline long random_in(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// t distinct-exponent terms, coefficients in [-cmax, cmax] \ {0}, exponents
// below 2^exp_bits in each variable.
inline SparsePoly random_sparse(std::mt19937_64& rng, std::size_t t, long cmax,
                                unsigned long exp_bits) {
  std::vector<Term> terms;
  terms.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    long c = random_in(rng, 1, cmax);
    if (rng() & 1) c = -c;
    terms.push_back({BigRat(c), random_nat_bits(rng, exp_bits), random_nat_bits(rng, exp_bits)});
  }
  return SparsePoly::from_terms(std::move(terms));
}

inline lacfact::DensePoly1 random_dense1(std::mt19937_64& rng, long deg, long cmax) {
  std::vector<BigRat> c(static_cast<std::size_t>(deg) + 1);
  for (auto& q : c) q = BigRat(random_in(rng, -cmax, cmax));
  if (sgn(c.back()) == 0) c.back() = 1;
  return lacfact::DensePoly1::from_coeffs(std::move(c));
}

inline lacfact::DensePoly2 random_dense2(std::mt19937_64& rng, long degx, long degy, long cmax) {
  std::vector<std::vector<BigRat>> rows(static_cast<std::size_t>(degy) + 1);
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(degx) + 1);
    for (auto& q : row) q = BigRat(random_in(rng, -cmax, cmax));
  }
  if (sgn(rows.back().back()) == 0) rows.back().back() = 1;
  return lacfact::DensePoly2::from_rows(std::move(rows));
}

}  // namespace testsupport

#endif

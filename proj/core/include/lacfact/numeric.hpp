#ifndef LACFACT_NUMERIC_HPP
#define LACFACT_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lacfact {

// Arbitrary precision scalars. BigNat values are mpz_class kept >= 0 by the
// operations that produce them; the alias documents intent at interfaces.
using BigNat = mpz_class;
using BigInt = mpz_class;
using BigRat = mpq_class;

struct ZeroPolynomialError : std::invalid_argument {
  ZeroPolynomialError() : std::invalid_argument("operation undefined for the zero polynomial") {}
};

struct DenseLimitExceeded : std::runtime_error {
  BigNat spread;
  unsigned long limit;
  DenseLimitExceeded(BigNat spread_, unsigned long limit_)
      : std::runtime_error("exponent spread " + spread_.get_str() +
                           " exceeds dense limit " + std::to_string(limit_)),
        spread(std::move(spread_)),
        limit(limit_) {}
};

struct DegreeExceededError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidCandidateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of bits in |n|, i.e. floor(log2 |n|) + 1 for n != 0, and 0 for n = 0.
inline unsigned long bit_length(const BigInt& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// floor(log2 n) for n >= 1, with the convention floor(log2 0) = 0.
inline unsigned long floor_log2(const BigNat& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRat rat_pow_ui(const BigRat& base, unsigned long e) {
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;
}

// ceil(num/den) for den > 0.
inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigInt ceil_rat(const BigRat& q) {
  return ceil_div(q.get_num(), q.get_den());
}

inline BigRat make_rat(BigInt num, BigInt den) {
  BigRat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

}  // namespace lacfact

#endif

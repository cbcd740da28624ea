#include "lacfact/log_bounds.hpp"

#include <stdexcept>

namespace lacfact {

namespace {

constexpr unsigned long kSeriesTerms = 40;
constexpr unsigned long kCompactBits = 192;
// Mantissas are rounded to this many bits before the series; the enclosure
// widens by ~2^-96, far below what any gap or bound computation can notice.
constexpr unsigned long kMantissaBits = 96;

// ln(r) for r in [1, 2) via 2*atanh(u) with u = (r-1)/(r+1) in [0, 1/3].
// Returns the exact partial sum as the lower endpoint and adds a closed-form
// tail bound for the upper one; both ends then get compacted to dyadics so the
// enclosure stays small after repeated multiplication downstream.
LnBounds atanh_series(const BigRat& r) {
  BigRat u = (r - 1) / (r + 1);
  if (sgn(u) == 0) return {BigRat(0), BigRat(0)};
  BigRat u2 = u * u;
  BigRat term = u;
  BigRat sum = 0;
  for (unsigned long j = 0; j < kSeriesTerms; ++j) {
    sum += term / BigRat(2 * j + 1);
    term *= u2;
  }
  sum *= 2;
  // term now holds u^(2J+1); tail = 2*sum_{j>=J} u^(2j+1)/(2j+1)
  //                                <= 2*u^(2J+1)/((2J+1)(1-u^2)).
  BigRat tail = 2 * term / (BigRat(2 * kSeriesTerms + 1) * (1 - u2));
  return {dyadic_round_down(sum, kCompactBits),
          dyadic_round_up(sum + tail, kCompactBits)};
}

}  // namespace

BigRat dyadic_round_up(const BigRat& x, unsigned long bits) {
  BigInt scale = pow_ui(2, bits);
  return make_rat(ceil_div(x.get_num() * scale, x.get_den()), scale);
}

BigRat dyadic_round_down(const BigRat& x, unsigned long bits) {
  BigInt scale = pow_ui(2, bits);
  return make_rat(floor_div(x.get_num() * scale, x.get_den()), scale);
}

const LnBounds& ln2_bounds() {
  static const LnBounds bounds = atanh_series(BigRat(2));
  return bounds;
}

LnBounds ln_bounds(const BigRat& x) {
  if (cmp(x, 1) < 0) throw std::domain_error("ln_bounds requires x >= 1");
  if (cmp(x, 1) == 0) return {BigRat(0), BigRat(0)};
  // Write x = 2^m * r with r in [1, 2); m >= 0 since x >= 1.
  long m = static_cast<long>(bit_length(x.get_num())) -
           static_cast<long>(bit_length(x.get_den()));
  BigRat r = m >= 0 ? BigRat(x / make_rat(pow_ui(2, m), 1))
                    : BigRat(x * make_rat(pow_ui(2, -m), 1));
  if (cmp(r, 1) < 0) {
    --m;
    r *= 2;
  } else if (cmp(r, 2) >= 0) {
    ++m;
    r /= 2;
  }
  // Compact the mantissa before the series so the cost stays independent of
  // the bit length of x; ln is monotone, so rounding both ways still encloses.
  BigRat rlo = dyadic_round_down(r, kMantissaBits);
  BigRat rhi = dyadic_round_up(r, kMantissaBits);
  if (cmp(rlo, 1) < 0) rlo = 1;
  LnBounds flo = atanh_series(rlo);
  LnBounds fhi = rlo == rhi ? flo : atanh_series(rhi);
  const LnBounds& l2 = ln2_bounds();
  return {dyadic_round_down(m * l2.lower + flo.lower, kCompactBits),
          dyadic_round_up(m * l2.upper + fhi.upper, kCompactBits)};
}

LnBounds ln_bounds(const BigNat& x) { return ln_bounds(BigRat(x)); }

}  // namespace lacfact

#include <algorithm>

#include "lacfact/gap.hpp"
#include "lacfact/log_bounds.hpp"

namespace lacfact {

BigRat compute_c(const SparsePoly& f) {
  BigNat norm = l1_norm(primitive_part(f).primitive);
  return BigRat(bit_length(norm)) * ln2_bounds().upper;
}

BigNat delta_rational(unsigned long d, const BigRat& c, const BigNat& pad) {
  if (sgn(c) == 0) return pad;
  BigRat ln16d = ln_bounds(BigRat(16) * BigRat(d)).upper;
  BigRat value = BigRat(15625) * BigRat(d) * ln16d * ln16d * ln16d * c;
  return ceil_rat(value) + pad;
}

BigNat delta_absolute(unsigned long d, const BigRat& c) {
  if (sgn(c) == 0) return BigNat(0);
  BigRat ln_d2 = ln_bounds(BigRat(d) + 2).upper;
  BigRat value = BigRat(pow_ui(2, 70)) * BigRat(d) * rat_pow_ui(ln_d2, 5) * c;
  return ceil_rat(value);
}

namespace {

// Exponent jump at or above the gap starts a new run.
template <typename Key>
std::vector<std::vector<Term>> split_on(const std::vector<Term>& terms, const BigNat& gap,
                                        Key key) {
  std::vector<std::vector<Term>> runs;
  for (const Term& t : terms) {
    if (runs.empty() || key(t) - key(runs.back().back()) >= gap) runs.push_back({});
    runs.back().push_back(t);
  }
  return runs;
}

}  // namespace

GapDecomposition decompose(const SparsePoly& f, const BigNat& delta_x, const BigNat& delta_y) {
  if (f.is_zero()) throw ZeroPolynomialError();
  GapDecomposition out;
  out.delta_x = delta_x;
  out.delta_y = delta_y;
  // Terms are already sorted by (ey, ex).
  auto groups = split_on(f.terms(), delta_y, [](const Term& t) { return t.ey; });
  for (auto& group : groups) {
    std::sort(group.begin(), group.end(),
              [](const Term& a, const Term& b) { return a.ex < b.ex; });
    for (auto& run : split_on(group, delta_x, [](const Term& t) { return t.ex; })) {
      GapPiece piece;
      piece.gamma = run.front().ex;
      piece.delta_off = run.front().ey;
      for (const Term& t : run) piece.delta_off = std::min(piece.delta_off, t.ey);
      std::vector<Term> shifted;
      shifted.reserve(run.size());
      for (const Term& t : run)
        shifted.push_back({t.coeff, t.ex - piece.gamma, t.ey - piece.delta_off});
      piece.piece = SparsePoly::from_terms(std::move(shifted));
      out.pieces.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace lacfact

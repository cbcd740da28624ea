#ifndef LACFACT_GAP_HPP
#define LACFACT_GAP_HPP

#include <vector>

#include "lacfact/numeric.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

enum class GapMode { rational, absolute };

struct GapParameters {
  unsigned long d = 1;  // degree bound for the factors sought
  BigRat c;             // certified upper bound on h1(f), natural-log units
  BigNat delta;         // gap length
  GapMode mode = GapMode::rational;
};

// An upper bound on h1(f) = ln of the l1 norm of the primitive form of f:
// bitlength of the norm times an upper rational bound on ln 2.
BigRat compute_c(const SparsePoly& f);

// ceil(5^6 * d * ln^3(16 d) * c) + pad, every intermediate rounded upward.
// Exponent gaps of at least this length split divisibility by any degree <= d
// irreducible that is not a torsion form. `pad` widens the budget for
// derivative passes.
BigNat delta_rational(unsigned long d, const BigRat& c, const BigNat& pad = BigNat(0));

// ceil(2^70 * d * ln^5(d + 2) * c), rounded upward. The analogous gap length
// for factors over the algebraic closure; exposed as a calculator.
BigNat delta_absolute(unsigned long d, const BigRat& c);

struct GapPiece {
  BigNat gamma;      // x-offset
  BigNat delta_off;  // y-offset
  SparsePoly piece;  // min_exponents == (0, 0)
};

// f = sum of x^gamma_i y^delta_off_i piece_i, split so that distinct pieces
// are separated by at least delta_y in y, or, within a common y-cluster, by
// at least delta_x in x.
struct GapDecomposition {
  std::vector<GapPiece> pieces;
  BigNat delta_x;
  BigNat delta_y;
};

// Two-stage split: first on sorted y-exponent jumps >= delta_y, then within
// each group on sorted x-exponent jumps >= delta_x. A jump exactly equal to
// the gap length starts a new piece.
GapDecomposition decompose(const SparsePoly& f, const BigNat& delta_x, const BigNat& delta_y);

}  // namespace lacfact

#endif

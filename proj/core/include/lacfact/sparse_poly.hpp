#ifndef LACFACT_SPARSE_POLY_HPP
#define LACFACT_SPARSE_POLY_HPP

#include <utility>
#include <vector>

#include "lacfact/numeric.hpp"

namespace lacfact {

enum class Var { x, y };

inline Var other_var(Var v) { return v == Var::x ? Var::y : Var::x; }

// One monomial: coeff * x^ex * y^ey. Exponents are unbounded naturals; the
// whole point of the sparse layer is that nothing ever materializes an array
// of size ex or ey.
struct Term {
  BigRat coeff;
  BigNat ex;
  BigNat ey;
};

// Canonical term order: (ey, ex) lexicographic ascending.
int compare_exponents(const Term& a, const Term& b);

// Sparse polynomial over Q in canonical form: terms sorted by (ey, ex)
// ascending, no zero coefficients, no repeated exponent pairs. The zero
// polynomial is the empty term list.
class SparsePoly {
 public:
  SparsePoly() = default;

  // Collapses duplicates, drops zeros, sorts. Accepts any raw term list.
  static SparsePoly from_terms(std::vector<Term> raw);
  static SparsePoly constant(const BigRat& c);
  static SparsePoly monomial(const BigRat& c, const BigNat& ex, const BigNat& ey);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_constant() const;

  // Largest exponent of v among the terms; zero polynomial throws.
  BigNat degree(Var v) const;
  BigNat total_degree() const;  // max over terms of ex + ey

  bool is_univariate_in(Var v) const;  // all exponents of the other variable are 0
  bool is_integer() const;             // all denominators are 1

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly scaled(const BigRat& c) const;

  // Multiply by x^dx * y^dy.
  SparsePoly shifted_up(const BigNat& dx, const BigNat& dy) const;
  // Divide by x^dx * y^dy; every term must reach that far down.
  SparsePoly shifted_down(const BigNat& dx, const BigNat& dy) const;

  SparsePoly derivative(Var v) const;
  SparsePoly swap_vars() const;

  // (min ex, min ey) over all terms; the monomial content's exponents.
  std::pair<BigNat, BigNat> min_exponents() const;

  bool operator==(const SparsePoly& o) const;

 private:
  std::vector<Term> terms_;
};

// Deterministic total order for sorting polynomial lists.
int compare(const SparsePoly& a, const SparsePoly& b);

// f = content * primitive with primitive integer, coefficient gcd 1, and a
// positive coefficient on the canonical-order last term. The sign travels
// with the content.
struct PrimitiveForm {
  BigRat content;
  SparsePoly primitive;
};
PrimitiveForm primitive_part(const SparsePoly& f);

// Coefficient norms of an integer-coefficient polynomial.
BigNat max_abs_coeff(const SparsePoly& f);
BigNat l1_norm(const SparsePoly& f);

// Size of the sparse encoding in bits: per term the coefficient digits and
// sign plus the binary digits of both exponents, counting floor(log2 0) as 0.
BigNat sparse_length(const SparsePoly& f);

// Splits f = sum_j v^j * c_j(other var). Pairs (j, c_j) ascending in j, each
// c_j nonzero and univariate in the other variable.
std::vector<std::pair<BigNat, SparsePoly>> coefficients_in(const SparsePoly& f, Var v);

}  // namespace lacfact

#endif

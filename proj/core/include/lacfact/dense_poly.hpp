#ifndef LACFACT_DENSE_POLY_HPP
#define LACFACT_DENSE_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lacfact/numeric.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

// Dense univariate polynomial over Q; coefficient i belongs to v^i for an
// unnamed variable v. Trimmed: the last stored coefficient is nonzero.
class DensePoly1 {
 public:
  DensePoly1() = default;
  static DensePoly1 from_coeffs(std::vector<BigRat> c);
  static DensePoly1 constant(const BigRat& c);
  static DensePoly1 monomial(const BigRat& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // Degree as a signed count; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return c_; }
  const BigRat& leading() const;
  BigRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }

  DensePoly1 operator-() const;
  friend DensePoly1 operator+(const DensePoly1& a, const DensePoly1& b);
  friend DensePoly1 operator-(const DensePoly1& a, const DensePoly1& b);
  friend DensePoly1 operator*(const DensePoly1& a, const DensePoly1& b);
  DensePoly1 scaled(const BigRat& s) const;
  DensePoly1 shifted_up(std::size_t k) const;  // multiply by v^k

  DensePoly1 derivative() const;
  BigRat evaluate(const BigRat& v) const;

  bool operator==(const DensePoly1& o) const { return c_ == o.c_; }

 private:
  std::vector<BigRat> c_;
};

// Dense bivariate polynomial over Q; rows()[j] holds the x-coefficients of
// the y^j slice. Trimmed in both directions.
class DensePoly2 {
 public:
  DensePoly2() = default;
  static DensePoly2 from_rows(std::vector<std::vector<BigRat>> rows);
  static DensePoly2 constant(const BigRat& c);
  // Embed a univariate polynomial as a polynomial in the chosen variable.
  static DensePoly2 embed(const DensePoly1& p, Var v);

  bool is_zero() const { return rows_.empty(); }
  long degree_x() const;
  long degree_y() const { return static_cast<long>(rows_.size()) - 1; }
  long total_degree() const;
  const std::vector<std::vector<BigRat>>& rows() const { return rows_; }
  BigRat coeff(std::size_t i, std::size_t j) const;  // x^i y^j

  DensePoly2 operator-() const;
  friend DensePoly2 operator+(const DensePoly2& a, const DensePoly2& b);
  friend DensePoly2 operator-(const DensePoly2& a, const DensePoly2& b);
  friend DensePoly2 operator*(const DensePoly2& a, const DensePoly2& b);
  DensePoly2 scaled(const BigRat& s) const;
  DensePoly2 shifted_up(std::size_t dx, std::size_t dy) const;

  DensePoly2 derivative(Var v) const;
  DensePoly2 swap_vars() const;
  DensePoly1 evaluate_y(const BigRat& b) const;
  DensePoly1 evaluate_x(const BigRat& a) const;

  bool operator==(const DensePoly2& o) const { return rows_ == o.rows_; }

 private:
  std::vector<std::vector<BigRat>> rows_;
};

int compare(const DensePoly1& a, const DensePoly1& b);
int compare(const DensePoly2& a, const DensePoly2& b);

// Quotient when the division is exact over Q, nullopt otherwise.
std::optional<DensePoly1> exact_divide(const DensePoly1& a, const DensePoly1& b);
std::optional<DensePoly2> exact_divide(const DensePoly2& a, const DensePoly2& b);

// Largest e with p^e | f; p nonconstant, f nonzero.
unsigned long multiplicity_in(const DensePoly1& f, const DensePoly1& p);
unsigned long multiplicity_in(const DensePoly2& f, const DensePoly2& p);

// f = content * primitive: primitive has integer coefficients with gcd 1 and
// a positive coefficient on the canonical-order last term (highest y, then
// highest x).
struct PrimitiveForm1 {
  BigRat content;
  DensePoly1 primitive;
};
struct PrimitiveForm2 {
  BigRat content;
  DensePoly2 primitive;
};
PrimitiveForm1 primitive_part(const DensePoly1& f);
PrimitiveForm2 primitive_part(const DensePoly2& f);

// Primitive-integer gcd with the canonical positive sign; gcd(0, g) = |g|.
DensePoly1 gcd(const DensePoly1& a, const DensePoly1& b);
DensePoly2 gcd(const DensePoly2& a, const DensePoly2& b);

// Squarefree decomposition f = content * prod part^mult with the parts
// primitive, squarefree, pairwise coprime, in increasing multiplicity order.
std::vector<std::pair<DensePoly1, unsigned long>> squarefree_decompose(const DensePoly1& f);
std::vector<std::pair<DensePoly2, unsigned long>> squarefree_decompose(const DensePoly2& f);

// Sparse <-> dense bridges. Densification strips the minimal monomial first
// and refuses spreads above `limit` in any one variable, since the output
// size is the product of the spreads, not the sparse encoding length.
struct Densified1 {
  BigNat shift;
  DensePoly1 poly;
};
struct Densified2 {
  BigNat shift_x;
  BigNat shift_y;
  DensePoly2 poly;
};
Densified1 densify_univariate(const SparsePoly& f, Var v, unsigned long limit);
Densified2 densify_bivariate(const SparsePoly& f, unsigned long limit);

SparsePoly to_sparse(const DensePoly1& p, Var v);
SparsePoly to_sparse(const DensePoly2& p);
DensePoly1 to_dense1(const SparsePoly& f, Var v);  // exponents must be small
DensePoly2 to_dense2(const SparsePoly& f);

}  // namespace lacfact

#endif

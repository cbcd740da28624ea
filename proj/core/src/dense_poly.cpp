#include "lacfact/dense_poly.hpp"

#include <algorithm>
#include <cassert>

namespace lacfact {

namespace {

void trim1(std::vector<BigRat>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

void trim2(std::vector<std::vector<BigRat>>& rows) {
  for (auto& r : rows) trim1(r);
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

}  // namespace

DensePoly1 DensePoly1::from_coeffs(std::vector<BigRat> c) {
  trim1(c);
  DensePoly1 p;
  p.c_ = std::move(c);
  return p;
}

DensePoly1 DensePoly1::constant(const BigRat& c) { return from_coeffs({c}); }

DensePoly1 DensePoly1::monomial(const BigRat& c, std::size_t k) {
  std::vector<BigRat> v(k + 1, BigRat(0));
  v[k] = c;
  return from_coeffs(std::move(v));
}

const BigRat& DensePoly1::leading() const {
  if (c_.empty()) throw ZeroPolynomialError();
  return c_.back();
}

DensePoly1 DensePoly1::operator-() const {
  DensePoly1 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

DensePoly1 operator+(const DensePoly1& a, const DensePoly1& b) {
  std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return DensePoly1::from_coeffs(std::move(c));
}

DensePoly1 operator-(const DensePoly1& a, const DensePoly1& b) { return a + (-b); }

DensePoly1 operator*(const DensePoly1& a, const DensePoly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return DensePoly1::from_coeffs(std::move(c));
}

DensePoly1 DensePoly1::scaled(const BigRat& s) const {
  if (sgn(s) == 0) return {};
  DensePoly1 r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

DensePoly1 DensePoly1::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigRat> c(k, BigRat(0));
  c.insert(c.end(), c_.begin(), c_.end());
  return from_coeffs(std::move(c));
}

DensePoly1 DensePoly1::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = BigRat(static_cast<long>(i)) * c_[i];
  return from_coeffs(std::move(c));
}

BigRat DensePoly1::evaluate(const BigRat& v) const {
  BigRat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
  return r;
}

DensePoly2 DensePoly2::from_rows(std::vector<std::vector<BigRat>> rows) {
  trim2(rows);
  DensePoly2 p;
  p.rows_ = std::move(rows);
  return p;
}

DensePoly2 DensePoly2::constant(const BigRat& c) { return from_rows({{c}}); }

DensePoly2 DensePoly2::embed(const DensePoly1& p, Var v) {
  if (p.is_zero()) return {};
  if (v == Var::x) return from_rows({p.coeffs()});
  std::vector<std::vector<BigRat>> rows;
  rows.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rows.push_back({c});
  return from_rows(std::move(rows));
}

long DensePoly2::degree_x() const {
  long d = -1;
  for (const auto& r : rows_) d = std::max(d, static_cast<long>(r.size()) - 1);
  return d;
}

long DensePoly2::total_degree() const {
  long d = -1;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t i = 0; i < rows_[j].size(); ++i)
      if (sgn(rows_[j][i]) != 0) d = std::max(d, static_cast<long>(i + j));
  return d;
}

BigRat DensePoly2::coeff(std::size_t i, std::size_t j) const {
  if (j >= rows_.size() || i >= rows_[j].size()) return BigRat(0);
  return rows_[j][i];
}

DensePoly2 DensePoly2::operator-() const {
  DensePoly2 r = *this;
  for (auto& row : r.rows_)
    for (auto& c : row) c = -c;
  return r;
}

DensePoly2 operator+(const DensePoly2& a, const DensePoly2& b) {
  std::vector<std::vector<BigRat>> rows(std::max(a.rows_.size(), b.rows_.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto* ra = j < a.rows_.size() ? &a.rows_[j] : nullptr;
    const auto* rb = j < b.rows_.size() ? &b.rows_[j] : nullptr;
    rows[j].assign(std::max(ra ? ra->size() : 0, rb ? rb->size() : 0), BigRat(0));
    if (ra)
      for (std::size_t i = 0; i < ra->size(); ++i) rows[j][i] = (*ra)[i];
    if (rb)
      for (std::size_t i = 0; i < rb->size(); ++i) rows[j][i] += (*rb)[i];
  }
  return DensePoly2::from_rows(std::move(rows));
}

DensePoly2 operator-(const DensePoly2& a, const DensePoly2& b) { return a + (-b); }

DensePoly2 operator*(const DensePoly2& a, const DensePoly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t ax = 0, bx = 0;
  for (const auto& r : a.rows_) ax = std::max(ax, r.size());
  for (const auto& r : b.rows_) bx = std::max(bx, r.size());
  std::vector<std::vector<BigRat>> rows(a.rows_.size() + b.rows_.size() - 1);
  for (auto& r : rows) r.assign(ax + bx - 1, BigRat(0));
  for (std::size_t ja = 0; ja < a.rows_.size(); ++ja)
    for (std::size_t ia = 0; ia < a.rows_[ja].size(); ++ia) {
      if (sgn(a.rows_[ja][ia]) == 0) continue;
      for (std::size_t jb = 0; jb < b.rows_.size(); ++jb)
        for (std::size_t ib = 0; ib < b.rows_[jb].size(); ++ib)
          rows[ja + jb][ia + ib] += a.rows_[ja][ia] * b.rows_[jb][ib];
    }
  return DensePoly2::from_rows(std::move(rows));
}

DensePoly2 DensePoly2::scaled(const BigRat& s) const {
  if (sgn(s) == 0) return {};
  DensePoly2 r = *this;
  for (auto& row : r.rows_)
    for (auto& c : row) c *= s;
  return r;
}

DensePoly2 DensePoly2::shifted_up(std::size_t dx, std::size_t dy) const {
  if (is_zero()) return {};
  std::vector<std::vector<BigRat>> rows(dy);
  for (const auto& r : rows_) {
    std::vector<BigRat> row(dx, BigRat(0));
    row.insert(row.end(), r.begin(), r.end());
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(rows));
}

DensePoly2 DensePoly2::derivative(Var v) const {
  std::vector<std::vector<BigRat>> rows;
  if (v == Var::y) {
    for (std::size_t j = 1; j < rows_.size(); ++j) {
      std::vector<BigRat> row = rows_[j];
      for (auto& c : row) c *= BigRat(static_cast<long>(j));
      rows.push_back(std::move(row));
    }
  } else {
    for (const auto& r : rows_) {
      std::vector<BigRat> row;
      for (std::size_t i = 1; i < r.size(); ++i) row.push_back(BigRat(static_cast<long>(i)) * r[i]);
      rows.push_back(std::move(row));
    }
  }
  return from_rows(std::move(rows));
}

DensePoly2 DensePoly2::swap_vars() const {
  std::size_t nx = 0;
  for (const auto& r : rows_) nx = std::max(nx, r.size());
  std::vector<std::vector<BigRat>> rows(nx);
  for (auto& r : rows) r.assign(rows_.size(), BigRat(0));
  for (std::size_t j = 0; j < rows_.size(); ++j)
    for (std::size_t i = 0; i < rows_[j].size(); ++i) rows[i][j] = rows_[j][i];
  return from_rows(std::move(rows));
}

DensePoly1 DensePoly2::evaluate_y(const BigRat& b) const {
  DensePoly1 r;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    r = r.scaled(b) + DensePoly1::from_coeffs(*it);
  return r;
}

DensePoly1 DensePoly2::evaluate_x(const BigRat& a) const {
  std::vector<BigRat> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(DensePoly1::from_coeffs(r).evaluate(a));
  return DensePoly1::from_coeffs(std::move(c));
}

int compare(const DensePoly1& a, const DensePoly1& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (long i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

int compare(const DensePoly2& a, const DensePoly2& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree() ? -1 : 1;
  if (a.degree_y() != b.degree_y()) return a.degree_y() < b.degree_y() ? -1 : 1;
  if (a.degree_x() != b.degree_x()) return a.degree_x() < b.degree_x() ? -1 : 1;
  for (long j = a.degree_y(); j >= 0; --j)
    for (long i = a.degree_x(); i >= 0; --i) {
      int c = cmp(a.coeff(i, j), b.coeff(i, j));
      if (c != 0) return c;
    }
  return 0;
}

std::optional<DensePoly1> exact_divide(const DensePoly1& a, const DensePoly1& b) {
  if (b.is_zero()) throw ZeroPolynomialError();
  if (a.is_zero()) return DensePoly1();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigRat> rem = a.coeffs();
  std::vector<BigRat> q(a.degree() - b.degree() + 1, BigRat(0));
  const auto& bc = b.coeffs();
  for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
    BigRat f = rem[k + b.degree()] / bc.back();
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= f * bc[i];
  }
  for (const auto& c : rem)
    if (sgn(c) != 0) return std::nullopt;
  return DensePoly1::from_coeffs(std::move(q));
}

std::optional<DensePoly2> exact_divide(const DensePoly2& a, const DensePoly2& b) {
  if (b.is_zero()) throw ZeroPolynomialError();
  if (a.is_zero()) return DensePoly2();
  // Long division in x over Q[y]: each step needs the current x-leading
  // coefficient to be an exact Q[y]-multiple of b's.
  long nb = b.degree_x();
  std::vector<DensePoly1> acol(a.degree_x() + 1), bcol(nb + 1);
  for (long i = 0; i <= a.degree_x(); ++i) {
    std::vector<BigRat> col;
    for (long j = 0; j <= a.degree_y(); ++j) col.push_back(a.coeff(i, j));
    acol[i] = DensePoly1::from_coeffs(std::move(col));
  }
  for (long i = 0; i <= nb; ++i) {
    std::vector<BigRat> col;
    for (long j = 0; j <= b.degree_y(); ++j) col.push_back(b.coeff(i, j));
    bcol[i] = DensePoly1::from_coeffs(std::move(col));
  }
  long na = static_cast<long>(acol.size()) - 1;
  if (na < nb) return std::nullopt;
  std::vector<DensePoly1> q(na - nb + 1);
  for (long k = na - nb; k >= 0; --k) {
    if (acol[k + nb].is_zero()) continue;
    auto f = exact_divide(acol[k + nb], bcol[nb]);
    if (!f) return std::nullopt;
    q[k] = *f;
    for (long i = 0; i <= nb; ++i) acol[k + i] = acol[k + i] - *f * bcol[i];
  }
  for (const auto& col : acol)
    if (!col.is_zero()) return std::nullopt;
  std::vector<std::vector<BigRat>> rows;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (long j = 0; j <= q[i].degree(); ++j) {
      if (rows.size() <= static_cast<std::size_t>(j)) rows.resize(j + 1);
      if (rows[j].size() <= i) rows[j].resize(i + 1, BigRat(0));
      rows[j][i] = q[i].coeffs()[j];
    }
  return DensePoly2::from_rows(std::move(rows));
}

unsigned long multiplicity_in(const DensePoly1& f, const DensePoly1& p) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (p.degree() < 1) throw InvalidCandidateError("multiplicity of a constant");
  unsigned long m = 0;
  DensePoly1 cur = f;
  for (;;) {
    auto q = exact_divide(cur, p);
    if (!q) return m;
    cur = std::move(*q);
    ++m;
  }
}

unsigned long multiplicity_in(const DensePoly2& f, const DensePoly2& p) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (p.total_degree() < 1) throw InvalidCandidateError("multiplicity of a constant");
  unsigned long m = 0;
  DensePoly2 cur = f;
  for (;;) {
    auto q = exact_divide(cur, p);
    if (!q) return m;
    cur = std::move(*q);
    ++m;
  }
}

PrimitiveForm1 primitive_part(const DensePoly1& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  BigInt den_lcm = 1;
  for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  BigInt num_gcd = 0;
  for (const auto& c : f.coeffs()) num_gcd = gcd(num_gcd, c.get_num() * (den_lcm / c.get_den()));
  if (sgn(f.leading()) < 0) num_gcd = -num_gcd;
  BigRat content = make_rat(num_gcd, den_lcm);
  return {content, f.scaled(BigRat(1) / content)};
}

PrimitiveForm2 primitive_part(const DensePoly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  BigInt den_lcm = 1;
  for (const auto& row : f.rows())
    for (const auto& c : row) den_lcm = lcm(den_lcm, c.get_den());
  BigInt num_gcd = 0;
  for (const auto& row : f.rows())
    for (const auto& c : row) num_gcd = gcd(num_gcd, c.get_num() * (den_lcm / c.get_den()));
  // Canonical-order last term: highest y row, then its highest x entry.
  if (sgn(f.rows().back().back()) < 0) num_gcd = -num_gcd;
  BigRat content = make_rat(num_gcd, den_lcm);
  return {content, f.scaled(BigRat(1) / content)};
}

Densified1 densify_univariate(const SparsePoly& f, Var v, unsigned long limit) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (!f.is_univariate_in(v))
    throw InvalidCandidateError("densify_univariate needs a univariate input");
  auto [mx, my] = f.min_exponents();
  const BigNat& base = v == Var::x ? mx : my;
  BigNat spread = f.degree(v) - base;
  if (cmp(spread, limit) > 0) throw DenseLimitExceeded(spread, limit);
  std::vector<BigRat> c(spread.get_ui() + 1, BigRat(0));
  for (const auto& t : f.terms()) {
    BigNat e = (v == Var::x ? t.ex : t.ey) - base;
    c[e.get_ui()] = t.coeff;
  }
  return {base, DensePoly1::from_coeffs(std::move(c))};
}

Densified2 densify_bivariate(const SparsePoly& f, unsigned long limit) {
  if (f.is_zero()) throw ZeroPolynomialError();
  auto [mx, my] = f.min_exponents();
  BigNat sx = f.degree(Var::x) - mx;
  BigNat sy = f.degree(Var::y) - my;
  if (cmp(sx, limit) > 0) throw DenseLimitExceeded(sx, limit);
  if (cmp(sy, limit) > 0) throw DenseLimitExceeded(sy, limit);
  std::vector<std::vector<BigRat>> rows(sy.get_ui() + 1);
  for (auto& r : rows) r.assign(sx.get_ui() + 1, BigRat(0));
  for (const auto& t : f.terms()) {
    BigNat i = t.ex - mx, j = t.ey - my;
    rows[j.get_ui()][i.get_ui()] = t.coeff;
  }
  return {mx, my, DensePoly2::from_rows(std::move(rows))};
}

SparsePoly to_sparse(const DensePoly1& p, Var v) {
  std::vector<Term> terms;
  for (long i = 0; i <= p.degree(); ++i) {
    if (sgn(p.coeffs()[i]) == 0) continue;
    Term t{p.coeffs()[i], BigNat(0), BigNat(0)};
    (v == Var::x ? t.ex : t.ey) = i;
    terms.push_back(std::move(t));
  }
  return SparsePoly::from_terms(std::move(terms));
}

SparsePoly to_sparse(const DensePoly2& p) {
  std::vector<Term> terms;
  for (long j = 0; j <= p.degree_y(); ++j)
    for (long i = 0; i <= p.degree_x(); ++i) {
      BigRat c = p.coeff(i, j);
      if (sgn(c) != 0) terms.push_back({std::move(c), BigNat(i), BigNat(j)});
    }
  return SparsePoly::from_terms(std::move(terms));
}

DensePoly1 to_dense1(const SparsePoly& f, Var v) {
  if (f.is_zero()) return {};
  if (!f.is_univariate_in(v)) throw InvalidCandidateError("to_dense1 needs a univariate input");
  std::vector<BigRat> c(f.degree(v).get_ui() + 1, BigRat(0));
  for (const auto& t : f.terms()) c[(v == Var::x ? t.ex : t.ey).get_ui()] = t.coeff;
  return DensePoly1::from_coeffs(std::move(c));
}

DensePoly2 to_dense2(const SparsePoly& f) {
  if (f.is_zero()) return {};
  std::vector<std::vector<BigRat>> rows(f.degree(Var::y).get_ui() + 1);
  for (auto& r : rows) r.assign(f.degree(Var::x).get_ui() + 1, BigRat(0));
  for (const auto& t : f.terms()) rows[t.ey.get_ui()][t.ex.get_ui()] = t.coeff;
  return DensePoly2::from_rows(std::move(rows));
}

}  // namespace lacfact

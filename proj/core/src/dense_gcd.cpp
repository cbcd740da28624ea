#include <cassert>

#include "lacfact/dense_poly.hpp"

// Euclidean remainder chains with primitive-part normalization after every
// step; contents in Q[y] are peeled off up front so the bivariate chain runs
// on x-primitive operands (the gcd of primitives is primitive).

namespace lacfact {

namespace {

DensePoly1 rational_rem(const DensePoly1& a, const DensePoly1& b) {
  DensePoly1 r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigRat f = r.leading() / b.leading();
    r = r - b.scaled(f).shifted_up(r.degree() - b.degree());
  }
  return r;
}

// x-major view: column i is the Q[y] coefficient of x^i.
std::vector<DensePoly1> x_major(const DensePoly2& p) {
  std::vector<DensePoly1> cols(p.degree_x() + 1);
  for (long i = 0; i <= p.degree_x(); ++i) {
    std::vector<BigRat> c;
    for (long j = 0; j <= p.degree_y(); ++j) c.push_back(p.coeff(i, j));
    cols[i] = DensePoly1::from_coeffs(std::move(c));
  }
  return cols;
}

DensePoly2 from_x_major(const std::vector<DensePoly1>& cols) {
  std::vector<std::vector<BigRat>> rows;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (long j = 0; j <= cols[i].degree(); ++j) {
      if (rows.size() <= static_cast<std::size_t>(j)) rows.resize(j + 1);
      if (rows[j].size() <= i) rows[j].resize(i + 1, BigRat(0));
      rows[j][i] = cols[i].coeffs()[j];
    }
  return DensePoly2::from_rows(std::move(rows));
}

void trim_cols(std::vector<DensePoly1>& cols) {
  while (!cols.empty() && cols.back().is_zero()) cols.pop_back();
}

// gcd over Q[y] of all x-coefficients, primitive integer normalized.
DensePoly1 content_x(const std::vector<DensePoly1>& cols) {
  DensePoly1 c;
  for (const auto& col : cols) {
    c = gcd(c, col);
    if (c.degree() == 0) break;
  }
  return c;
}

std::vector<DensePoly1> divide_cols(const std::vector<DensePoly1>& cols, const DensePoly1& d) {
  std::vector<DensePoly1> out(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].is_zero()) continue;
    auto q = exact_divide(cols[i], d);
    assert(q);
    out[i] = std::move(*q);
  }
  return out;
}

// Remainder of a by b in x over the fraction field Q(y), cleared back to
// polynomial columns by pseudo-scaling with b's leading y-coefficient:
// r <- lead(b)*r - lead(r)*x^shift*b, which cancels the top column exactly.
std::vector<DensePoly1> pseudo_rem(std::vector<DensePoly1> r, const std::vector<DensePoly1>& b) {
  const DensePoly1& lead = b.back();
  while (r.size() >= b.size()) {
    DensePoly1 top = r.back();
    std::size_t shift = r.size() - b.size();
    for (auto& c : r) c = c * lead;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] = r[shift + i] - top * b[i];
    assert(r.back().is_zero());
    r.pop_back();
    trim_cols(r);
  }
  return r;
}

}  // namespace

DensePoly1 gcd(const DensePoly1& a, const DensePoly1& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return primitive_part(b).primitive;
  if (b.is_zero()) return primitive_part(a).primitive;
  DensePoly1 A = primitive_part(a).primitive;
  DensePoly1 B = primitive_part(b).primitive;
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    DensePoly1 r = rational_rem(A, B);
    A = std::move(B);
    B = r.is_zero() ? DensePoly1() : primitive_part(r).primitive;
  }
  return A;
}

DensePoly2 gcd(const DensePoly2& a, const DensePoly2& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return primitive_part(b).primitive;
  if (b.is_zero()) return primitive_part(a).primitive;
  auto ca = x_major(a);
  auto cb = x_major(b);
  DensePoly1 conta = content_x(ca);
  DensePoly1 contb = content_x(cb);
  DensePoly1 contg = gcd(conta, contb);
  auto A = divide_cols(ca, conta);
  auto B = divide_cols(cb, contb);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    auto r = pseudo_rem(A, B);
    A = std::move(B);
    B.clear();
    if (!r.empty()) {
      DensePoly1 c = content_x(r);
      B = divide_cols(r, c);
    }
  }
  DensePoly2 g = from_x_major(A);
  if (A.size() == 1) g = DensePoly2::constant(BigRat(1));  // primitives share no x-free part
  DensePoly2 result = g * DensePoly2::embed(contg, Var::y);
  return primitive_part(result).primitive;
}

namespace {

bool is_trivial(const DensePoly1& p) { return p.degree() <= 0; }
bool is_trivial(const DensePoly2& p) { return p.total_degree() <= 0; }

template <class Poly, class Deriv>
std::vector<std::pair<Poly, unsigned long>> yun(const Poly& f, Deriv deriv) {
  std::vector<std::pair<Poly, unsigned long>> out;
  Poly fp = deriv(f);
  Poly g = gcd(f, fp);
  Poly v = *exact_divide(f, g);
  Poly w = *exact_divide(fp, g);
  for (unsigned long i = 1;; ++i) {
    Poly z = w - deriv(v);
    Poly h = gcd(v, z);
    if (h.is_zero()) break;
    auto vn = exact_divide(v, h);
    auto wn = exact_divide(z, h);
    assert(vn && wn);
    if (!is_trivial(h)) out.push_back({h, i});
    v = std::move(*vn);
    w = std::move(*wn);
    if (is_trivial(v)) break;
  }
  return out;
}

}  // namespace

std::vector<std::pair<DensePoly1, unsigned long>> squarefree_decompose(const DensePoly1& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  DensePoly1 p = primitive_part(f).primitive;
  if (p.degree() == 0) return {};
  return yun(p, [](const DensePoly1& q) { return q.derivative(); });
}

std::vector<std::pair<DensePoly2, unsigned long>> squarefree_decompose(const DensePoly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  DensePoly2 p = primitive_part(f).primitive;
  std::vector<std::pair<DensePoly2, unsigned long>> out;
  if (p.total_degree() == 0) return out;
  // Factors with no x at all live in the Q[y] content; handle them with the
  // univariate routine, then run Yun in x on the x-primitive rest.
  auto cols = x_major(p);
  DensePoly1 cont = content_x(cols);
  if (cont.degree() > 0) {
    for (auto& [part, mult] : squarefree_decompose(cont))
      out.push_back({DensePoly2::embed(part, Var::y), mult});
  }
  DensePoly2 pp = from_x_major(divide_cols(cols, cont));
  if (pp.degree_x() > 0) {
    auto parts = yun(pp, [](const DensePoly2& q) { return q.derivative(Var::x); });
    for (auto& [part, mult] : parts) out.push_back({primitive_part(part).primitive, mult});
  }
  return out;
}

}  // namespace lacfact

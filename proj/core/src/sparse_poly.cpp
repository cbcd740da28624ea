#include "lacfact/sparse_poly.hpp"

#include <algorithm>
#include <cassert>

namespace lacfact {

int compare_exponents(const Term& a, const Term& b) {
  int c = cmp(a.ey, b.ey);
  if (c != 0) return c;
  return cmp(a.ex, b.ex);
}

SparsePoly SparsePoly::from_terms(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return compare_exponents(a, b) < 0; });
  SparsePoly f;
  for (auto& t : raw) {
    if (!f.terms_.empty() && compare_exponents(f.terms_.back(), t) == 0) {
      f.terms_.back().coeff += t.coeff;
      if (sgn(f.terms_.back().coeff) == 0) f.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

SparsePoly SparsePoly::constant(const BigRat& c) {
  return monomial(c, BigNat(0), BigNat(0));
}

SparsePoly SparsePoly::monomial(const BigRat& c, const BigNat& ex, const BigNat& ey) {
  SparsePoly f;
  if (sgn(c) != 0) f.terms_.push_back({c, ex, ey});
  return f;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && sgn(terms_[0].ex) == 0 && sgn(terms_[0].ey) == 0);
}

BigNat SparsePoly::degree(Var v) const {
  if (terms_.empty()) throw ZeroPolynomialError();
  if (v == Var::y) return terms_.back().ey;  // canonical order is ey-major
  BigNat d = 0;
  for (const auto& t : terms_)
    if (cmp(t.ex, d) > 0) d = t.ex;
  return d;
}

BigNat SparsePoly::total_degree() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  BigNat d = 0;
  for (const auto& t : terms_) {
    BigNat s = t.ex + t.ey;
    if (cmp(s, d) > 0) d = std::move(s);
  }
  return d;
}

bool SparsePoly::is_univariate_in(Var v) const {
  for (const auto& t : terms_)
    if (sgn(v == Var::x ? t.ey : t.ex) != 0) return false;
  return true;
}

bool SparsePoly::is_integer() const {
  for (const auto& t : terms_)
    if (cmp(t.coeff.get_den(), 1) != 0) return false;
  return true;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  // Merge of two canonically sorted lists.
  SparsePoly r;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    int c = ia == a.terms_.end()   ? 1
            : ib == b.terms_.end() ? -1
                                   : compare_exponents(*ia, *ib);
    if (c < 0) {
      r.terms_.push_back(*ia++);
    } else if (c > 0) {
      r.terms_.push_back(*ib++);
    } else {
      BigRat s = ia->coeff + ib->coeff;
      if (sgn(s) != 0) r.terms_.push_back({std::move(s), ia->ex, ia->ey});
      ++ia;
      ++ib;
    }
  }
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      prod.push_back({ta.coeff * tb.coeff, ta.ex + tb.ex, ta.ey + tb.ey});
  return SparsePoly::from_terms(std::move(prod));
}

SparsePoly SparsePoly::scaled(const BigRat& c) const {
  if (sgn(c) == 0) return SparsePoly();
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

SparsePoly SparsePoly::shifted_up(const BigNat& dx, const BigNat& dy) const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) {
    t.ex += dx;
    t.ey += dy;
  }
  return r;
}

SparsePoly SparsePoly::shifted_down(const BigNat& dx, const BigNat& dy) const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) {
    assert(cmp(t.ex, dx) >= 0 && cmp(t.ey, dy) >= 0);
    t.ex -= dx;
    t.ey -= dy;
  }
  return r;
}

SparsePoly SparsePoly::derivative(Var v) const {
  SparsePoly r;
  for (const auto& t : terms_) {
    const BigNat& e = v == Var::x ? t.ex : t.ey;
    if (sgn(e) == 0) continue;
    Term d = t;
    d.coeff *= BigRat(e);
    (v == Var::x ? d.ex : d.ey) = e - 1;
    r.terms_.push_back(std::move(d));
  }
  // x-derivatives keep (ey, ex) order; nothing to re-sort either way since
  // both coordinates shift uniformly within each ey class.
  return r;
}

SparsePoly SparsePoly::swap_vars() const {
  std::vector<Term> raw = terms_;
  for (auto& t : raw) std::swap(t.ex, t.ey);
  return from_terms(std::move(raw));
}

std::pair<BigNat, BigNat> SparsePoly::min_exponents() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  BigNat mx = terms_[0].ex, my = terms_[0].ey;
  for (const auto& t : terms_) {
    if (cmp(t.ex, mx) < 0) mx = t.ex;
    if (cmp(t.ey, my) < 0) my = t.ey;
  }
  return {mx, my};
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (compare_exponents(terms_[i], o.terms_[i]) != 0) return false;
    if (cmp(terms_[i].coeff, o.terms_[i].coeff) != 0) return false;
  }
  return true;
}

int compare(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return 0;
    return a.is_zero() ? -1 : 1;
  }
  int c = cmp(a.total_degree(), b.total_degree());
  if (c != 0) return c;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    c = compare_exponents(ta[i], tb[i]);
    if (c != 0) return c;
    c = cmp(ta[i].coeff, tb[i].coeff);
    if (c != 0) return c;
  }
  return 0;
}

PrimitiveForm primitive_part(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  BigInt den_lcm = 1;
  for (const auto& t : f.terms()) den_lcm = lcm(den_lcm, t.coeff.get_den());
  BigInt num_gcd = 0;
  for (const auto& t : f.terms())
    num_gcd = gcd(num_gcd, t.coeff.get_num() * (den_lcm / t.coeff.get_den()));
  // num_gcd > 0; flip the sign onto the content so the canonical-order last
  // term of the primitive part ends up positive.
  if (sgn(f.terms().back().coeff) < 0) num_gcd = -num_gcd;
  BigRat content = make_rat(num_gcd, den_lcm);
  PrimitiveForm out{content, f.scaled(BigRat(1) / content)};
  return out;
}

BigNat max_abs_coeff(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  assert(f.is_integer());
  BigNat m = 0;
  for (const auto& t : f.terms()) {
    BigNat a = abs(t.coeff.get_num());
    if (cmp(a, m) > 0) m = std::move(a);
  }
  return m;
}

BigNat l1_norm(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  assert(f.is_integer());
  BigNat s = 0;
  for (const auto& t : f.terms()) s += abs(t.coeff.get_num());
  return s;
}

BigNat sparse_length(const SparsePoly& f) {
  BigNat total = 0;
  for (const auto& t : f.terms()) {
    total += floor_log2(BigNat(abs(t.coeff.get_num())));
    total += floor_log2(t.coeff.get_den());
    total += 2;  // coefficient sign and digit base line
    total += floor_log2(t.ex);
    total += floor_log2(t.ey);
    total += 2;  // exponent digit base lines
  }
  return total;
}

std::vector<std::pair<BigNat, SparsePoly>> coefficients_in(const SparsePoly& f, Var v) {
  std::vector<std::pair<BigNat, SparsePoly>> out;
  std::vector<std::pair<BigNat, std::vector<Term>>> groups;
  for (const auto& t : f.terms()) {
    const BigNat& e = v == Var::x ? t.ex : t.ey;
    Term reduced = t;
    (v == Var::x ? reduced.ex : reduced.ey) = 0;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return cmp(g.first, e) == 0; });
    if (it == groups.end()) {
      groups.push_back({e, {std::move(reduced)}});
    } else {
      it->second.push_back(std::move(reduced));
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return cmp(a.first, b.first) < 0; });
  out.reserve(groups.size());
  for (auto& g : groups)
    out.push_back({std::move(g.first), SparsePoly::from_terms(std::move(g.second))});
  return out;
}

}  // namespace lacfact

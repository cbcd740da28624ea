#include <algorithm>
#include <cassert>

#include "lacfact/dense_factor.hpp"

// Bivariate factorization over Q. After the squarefree split, each part is
// specialized at an integer point y = b where the leading x-coefficient
// survives and the image stays squarefree, the univariate factors are lifted
// y-adically (linear steps with Bezout data fixed at y = 0), and subsets are
// recombined by exact trial division. The lift precision K is chosen so that
// lc_x(G) * (monic product over a true cluster) equals the true factor times
// a polynomial cofactor on the nose, with no truncation loss.

namespace lacfact {

namespace {

// y-major series view: s[k] is the x-polynomial on y^k.
using Series = std::vector<DensePoly1>;

Series series_from(const DensePoly2& p, std::size_t cap) {
  Series s;
  for (const auto& row : p.rows()) {
    if (s.size() == cap) break;
    s.push_back(DensePoly1::from_coeffs(row));
  }
  return s;
}

DensePoly2 series_to_poly(const Series& s) {
  std::vector<std::vector<BigRat>> rows;
  rows.reserve(s.size());
  for (const auto& c : s) rows.push_back(c.coeffs());
  return DensePoly2::from_rows(std::move(rows));
}

Series series_mul(const Series& a, const Series& b, std::size_t cap) {
  std::size_t len = std::min(cap, a.size() + b.size() - 1);
  Series c(len);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] = c[i + j] + a[i] * b[j];
  }
  return c;
}

// Coefficients of 1/l as a power series to order K; l(0) != 0.
std::vector<BigRat> series_inverse(const DensePoly1& l, std::size_t K) {
  std::vector<BigRat> inv(K);
  inv[0] = BigRat(1) / l.coeff(0);
  for (std::size_t k = 1; k < K; ++k) {
    BigRat acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += l.coeff(i) * inv[k - i];
    inv[k] = -acc / l.coeff(0);
  }
  return inv;
}

// Leading x-coefficient of p as a polynomial in y.
DensePoly1 leading_x(const DensePoly2& p) {
  std::size_t dx = static_cast<std::size_t>(p.degree_x());
  std::vector<BigRat> c(p.rows().size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = p.coeff(dx, j);
  return DensePoly1::from_coeffs(std::move(c));
}

// Substitute y -> y + b.
DensePoly2 shift_y(const DensePoly2& p, const BigRat& b) {
  DensePoly2 lin = DensePoly2::from_rows({{b}, {BigRat(1)}});
  DensePoly2 acc;
  for (std::size_t j = p.rows().size(); j-- > 0;) {
    acc = acc * lin + DensePoly2::from_rows({p.rows()[j]});
  }
  return acc;
}

// Split p into its Q[y]-content (gcd of the x-major columns) and the quotient.
std::pair<DensePoly1, DensePoly2> split_content_y(const DensePoly2& p) {
  long dx = p.degree_x();
  std::vector<DensePoly1> cols;
  for (long i = 0; i <= dx; ++i) {
    std::vector<BigRat> c(p.rows().size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = p.coeff(i, j);
    cols.push_back(DensePoly1::from_coeffs(std::move(c)));
  }
  DensePoly1 cont;
  for (const auto& c : cols) {
    cont = gcd(cont, c);
    if (cont.degree() == 0) break;
  }
  if (cont.degree() < 1) return {DensePoly1::constant(BigRat(1)), p};
  for (auto& c : cols) {
    auto q = exact_divide(c, cont);
    assert(q);
    c = *q;
  }
  std::size_t height = 0;
  for (const auto& c : cols) height = std::max(height, c.coeffs().size());
  std::vector<std::vector<BigRat>> rows(height);
  for (std::size_t j = 0; j < height; ++j) {
    rows[j].resize(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) rows[j][i] = cols[i].coeff(j);
  }
  return {cont, DensePoly2::from_rows(std::move(rows))};
}

DensePoly2 primitive_x(const DensePoly2& p) { return split_content_y(p).second; }

// Split p into its Q[x]-content (gcd of the y-major rows) and the quotient.
std::pair<DensePoly1, DensePoly2> split_content_x(const DensePoly2& p) {
  DensePoly1 cont;
  for (const auto& row : p.rows()) {
    cont = gcd(cont, DensePoly1::from_coeffs(row));
    if (cont.degree() == 0) break;
  }
  if (cont.degree() < 1) return {DensePoly1::constant(BigRat(1)), p};
  std::vector<std::vector<BigRat>> rows;
  rows.reserve(p.rows().size());
  for (const auto& row : p.rows()) {
    auto q = exact_divide(DensePoly1::from_coeffs(row), cont);
    assert(q);
    rows.push_back(q->coeffs());
  }
  return {cont, DensePoly2::from_rows(std::move(rows))};
}

std::pair<DensePoly1, DensePoly1> divmod(const DensePoly1& a, const DensePoly1& b) {
  DensePoly1 q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    BigRat f = r.leading() / b.leading();
    std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
    DensePoly1 t = DensePoly1::monomial(f, k);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

// Inverse of a modulo m over Q; inputs coprime.
DensePoly1 q_invmod(const DensePoly1& a, const DensePoly1& m) {
  DensePoly1 r0 = m, r1 = divmod(a, m).second;
  DensePoly1 t0, t1 = DensePoly1::constant(BigRat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    DensePoly1 t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  assert(r0.degree() == 0);
  return t0.scaled(BigRat(1) / r0.coeff(0));
}

struct Probe {
  BigRat b;
  std::vector<DensePoly1> factors;  // irreducible factors of g(x, b)
};

// Factor a primitive, x-primitive, squarefree polynomial with positive x- and
// y-degree.
std::vector<DensePoly2> factor_squarefree_xy(const DensePoly2& g) {
  std::size_t n = static_cast<std::size_t>(g.degree_x());
  if (n == 1) return {g};
  DensePoly1 lcx = leading_x(g);

  std::optional<Probe> best;
  int seen = 0;
  for (long step = 0; seen < 3; ++step) {
    BigRat b((step + 1) / 2 * ((step % 2) ? -1 : 1));
    if (sgn(lcx.evaluate(b)) == 0) continue;
    DensePoly1 gb = g.evaluate_y(b);
    if (gcd(gb, gb.derivative()).degree() != 0) continue;
    ++seen;
    DenseFactorization1 fac = factor_univariate(gb);
    Probe probe{b, {}};
    for (const auto& [q, m] : fac.factors) {
      assert(m == 1);
      probe.factors.push_back(q);
    }
    if (probe.factors.size() == 1) return {g};  // irreducible specialization
    if (!best || probe.factors.size() < best->factors.size()) best = std::move(probe);
  }

  DensePoly2 G = shift_y(g, best->b);
  DensePoly1 l = leading_x(G);
  std::size_t K = static_cast<std::size_t>(G.degree_y() + l.degree()) + 1;

  // ghat = lc^-1 * G as a series, monic of x-degree n.
  std::vector<BigRat> linv = series_inverse(l, K);
  Series rowsG = series_from(G, K);
  Series ghat(K);
  for (std::size_t k = 0; k < K; ++k) {
    DensePoly1 acc;
    for (std::size_t i = 0; i <= k && i < linv.size(); ++i) {
      if (k - i < rowsG.size()) acc = acc + rowsG[k - i].scaled(linv[i]);
    }
    ghat[k] = std::move(acc);
    assert(k == 0 || ghat[k].degree() < static_cast<long>(n));
  }

  std::size_t r = best->factors.size();
  std::vector<DensePoly1> h(r);   // the factors at y = 0, monic
  std::vector<DensePoly1> sig(r); // sigma_i * prod_{j != i} h_j = 1 mod h_i
  std::vector<Series> H(r);
  for (std::size_t i = 0; i < r; ++i) {
    h[i] = best->factors[i].scaled(BigRat(1) / best->factors[i].leading());
    H[i] = {h[i]};
  }
  for (std::size_t i = 0; i < r; ++i) {
    DensePoly1 tau = DensePoly1::constant(BigRat(1));
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) tau = divmod(tau * h[j], h[i]).second;
    sig[i] = q_invmod(tau, h[i]);
  }

  for (std::size_t k = 1; k < K; ++k) {
    Series prod = H[0];
    for (std::size_t i = 1; i < r; ++i) prod = series_mul(prod, H[i], k + 1);
    DensePoly1 e = ghat[k] - (k < prod.size() ? prod[k] : DensePoly1());
    if (e.is_zero()) {
      for (auto& Hi : H) Hi.push_back(DensePoly1());
      continue;
    }
    for (std::size_t i = 0; i < r; ++i) H[i].push_back(divmod(sig[i] * e, h[i]).second);
  }

  std::vector<DensePoly2> shifted_out;
  DensePoly2 Gcur = primitive_part(G).primitive;
  std::vector<std::size_t> live(r);
  for (std::size_t i = 0; i < r; ++i) live[i] = i;
  Series lser;
  for (const auto& c : l.coeffs()) lser.push_back(DensePoly1::constant(c));

  auto try_subsets = [&](std::size_t size) -> bool {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      Series cand = lser;
      for (std::size_t i : idx) cand = series_mul(cand, H[live[i]], K);
      DensePoly2 cp = primitive_part(primitive_x(series_to_poly(cand))).primitive;
      if (auto quot = exact_divide(Gcur, cp)) {
        shifted_out.push_back(cp);
        Gcur = primitive_part(*quot).primitive;
        std::vector<std::size_t> remaining;
        for (std::size_t i = 0, k2 = 0; i < live.size(); ++i) {
          if (k2 < idx.size() && idx[k2] == i)
            ++k2;
          else
            remaining.push_back(live[i]);
        }
        live = std::move(remaining);
        return true;
      }
      long pos = static_cast<long>(size) - 1;
      while (pos >= 0 && idx[pos] == live.size() - size + pos) --pos;
      if (pos < 0) return false;
      ++idx[pos];
      for (std::size_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  };

  std::size_t size = 1;
  while (2 * size <= live.size()) {
    if (try_subsets(size))
      size = 1;
    else
      ++size;
  }
  if (Gcur.degree_x() >= 1) shifted_out.push_back(Gcur);

  std::vector<DensePoly2> out;
  out.reserve(shifted_out.size());
  for (const auto& F : shifted_out) out.push_back(primitive_part(shift_y(F, -best->b)).primitive);
  return out;
}

DensePoly1 pure_y(const DensePoly2& p) {
  std::vector<BigRat> c;
  for (const auto& row : p.rows()) c.push_back(row.empty() ? BigRat(0) : row[0]);
  return DensePoly1::from_coeffs(std::move(c));
}

}  // namespace

DenseFactorization2 factor_bivariate(const DensePoly2& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  DenseFactorization2 out;
  for (const auto& [part, mult] : squarefree_decompose(f)) {
    if (part.degree_x() == 0) {
      DenseFactorization1 sub = factor_univariate(pure_y(part));
      for (const auto& [q, m] : sub.factors)
        out.factors.push_back({DensePoly2::embed(q, Var::y), mult * m});
    } else if (part.degree_y() == 0) {
      DenseFactorization1 sub = factor_univariate(DensePoly1::from_coeffs(part.rows()[0]));
      for (const auto& [q, m] : sub.factors)
        out.factors.push_back({DensePoly2::embed(q, Var::x), mult * m});
    } else {
      // Peel off content in either variable first; the xy path needs a part
      // that is primitive with respect to both.
      auto [cy, py] = split_content_y(part);
      auto [cx, w] = split_content_x(py);
      if (cy.degree() >= 1)
        for (const auto& [q, m] : factor_univariate(cy).factors)
          out.factors.push_back({DensePoly2::embed(q, Var::y), mult * m});
      if (cx.degree() >= 1)
        for (const auto& [q, m] : factor_univariate(cx).factors)
          out.factors.push_back({DensePoly2::embed(q, Var::x), mult * m});
      if (w.degree_x() >= 1)
        for (auto& irred : factor_squarefree_xy(w)) out.factors.push_back({irred, mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  DensePoly2 recon = DensePoly2::constant(BigRat(1));
  for (const auto& [q, m] : out.factors)
    for (unsigned long i = 0; i < m; ++i) recon = recon * q;
  out.unit = f.rows().back().back() / recon.rows().back().back();
  if (!(recon.scaled(out.unit) == f))
    throw std::logic_error("bivariate factorization failed its reconstruction check");
  return out;
}

}  // namespace lacfact

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "lacfact/dense_factor.hpp"

// Univariate factorization over Q: squarefree split, then factor each part
// modulo a small prime, lift the modular factors until their coefficients are
// pinned by a Landau-Mignotte style bound, and recombine subsets with exact
// trial division. Everything is deterministic: primes are probed in a fixed
// ascending order and subsets enumerated lexicographically.

namespace lacfact {

namespace {

// ---- arithmetic mod a small odd prime (p < 2^31 so products fit in 64 bits)

using FpPoly = std::vector<std::uint64_t>;  // coefficient i of v^i, trimmed

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_deg(const FpPoly& a) { return static_cast<long>(a.size()) - 1; }

std::uint64_t fp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) { return fp_pow(a, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(c);
  return c;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  fp_trim(a);
  return a;
}

FpPoly fp_scale(FpPoly a, std::uint64_t s, std::uint64_t p) {
  for (auto& c : a) c = c * (s % p) % p;
  fp_trim(a);
  return a;
}

FpPoly fp_monic(const FpPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return fp_scale(a, fp_inv(a.back(), p), p);
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
  std::uint64_t linv = fp_inv(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    std::uint64_t f = a.back() * linv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
    fp_trim(a);
  }
  return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& b, std::uint64_t p) {
  FpPoly q(a.size() - b.size() + 1, 0);
  std::uint64_t linv = fp_inv(b.back(), p);
  while (fp_deg(a) >= fp_deg(b)) {
    std::uint64_t f = a.back() * linv % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
    fp_trim(a);
  }
  assert(a.empty());
  fp_trim(q);
  return q;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& a, std::uint64_t p) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * (i % p) % p);
  fp_trim(d);
  return d;
}

// x^e mod g by square-and-multiply.
FpPoly fp_xpow_mod(std::uint64_t e, const FpPoly& g, std::uint64_t p) {
  FpPoly result{1};
  FpPoly base{0, 1};
  base = fp_rem(std::move(base), g, p);
  while (e) {
    if (e & 1) result = fp_rem(fp_mul(result, base, p), g, p);
    base = fp_rem(fp_mul(base, base, p), g, p);
    e >>= 1;
  }
  return result;
}

// Inverse of a modulo m in Fp[x] (coprime inputs) via extended Euclid.
FpPoly fp_invmod(const FpPoly& a, const FpPoly& m, std::uint64_t p) {
  FpPoly r0 = m, r1 = fp_rem(a, m, p);
  FpPoly t0, t1{1};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    FpPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    FpPoly rem = r0;
    std::uint64_t linv = fp_inv(r1.back(), p);
    while (fp_deg(rem) >= fp_deg(r1)) {
      std::uint64_t f = rem.back() * linv % p;
      std::size_t shift = rem.size() - r1.size();
      q[shift] = f;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = (rem[shift + i] + p - f * r1[i] % p) % p;
      fp_trim(rem);
    }
    fp_trim(q);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  assert(fp_deg(r0) == 0);
  return fp_scale(t0, fp_inv(r0[0], p), p);
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- Berlekamp factorization of a monic squarefree polynomial mod p

std::vector<FpPoly> berlekamp(const FpPoly& g, std::uint64_t p) {
  long n = fp_deg(g);
  if (n == 1) return {g};
  // Petr-Berlekamp matrix: row i holds x^(i*p) mod g.
  FpPoly xp = fp_xpow_mod(p, g, p);
  std::vector<FpPoly> rows(n);
  rows[0] = {1};
  for (long i = 1; i < n; ++i) rows[i] = fp_rem(fp_mul(rows[i - 1], xp, p), g, p);
  // Nullspace of (B^T - I): v with v(x)^p = v(x) mod g.
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < static_cast<long>(rows[i].size()); ++j) m[j][i] = rows[i][j];
    m[i][i] = (m[i][i] + p - 1) % p;
  }
  std::vector<long> pivot_of_col(n, -1);
  long rank = 0;
  for (long col = 0; col < n && rank < n; ++col) {
    long piv = -1;
    for (long r = rank; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    std::uint64_t inv = fp_inv(m[rank][col], p);
    for (long j = 0; j < n; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (long r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      std::uint64_t f = m[r][col];
      for (long j = 0; j < n; ++j) m[r][j] = (m[r][j] + p - f * m[rank][j] % p) % p;
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<FpPoly> basis;
  for (long col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[col] = 1;
    for (long c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = (p - m[pivot_of_col[c]][col]) % p;
    FpPoly vp(v.begin(), v.end());
    fp_trim(vp);
    basis.push_back(std::move(vp));
  }
  std::size_t r = basis.size();
  std::vector<FpPoly> factors{fp_monic(g, p)};
  if (r == 1) return factors;
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (fp_deg(v) <= 0) continue;
    for (std::uint64_t s = 0; s < p && factors.size() < r; ++s) {
      std::vector<FpPoly> next;
      FpPoly vs = v;
      if (vs.empty()) vs.push_back(0);
      vs[0] = (vs[0] + p - s) % p;
      fp_trim(vs);
      for (auto& w : factors) {
        if (fp_deg(w) <= 1 || vs.empty()) {
          next.push_back(std::move(w));
          continue;
        }
        FpPoly d = fp_gcd(w, fp_rem(vs, w, p), p);
        if (fp_deg(d) > 0 && fp_deg(d) < fp_deg(w)) {
          FpPoly q = fp_divexact(std::move(w), d, p);
          next.push_back(std::move(d));
          next.push_back(fp_monic(q, p));
        } else {
          next.push_back(std::move(w));
        }
      }
      factors = std::move(next);
    }
  }
  assert(factors.size() == r);
  std::sort(factors.begin(), factors.end());
  return factors;
}

// ---- Hensel lifting and recombination over Z

std::vector<BigInt> to_int_coeffs(const DensePoly1& f) {
  std::vector<BigInt> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) {
    assert(cmp(q.get_den(), 1) == 0);
    c.push_back(q.get_num());
  }
  return c;
}

BigInt mods(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (sgn(r) < 0) r += m;
  if (cmp(r * 2, m) > 0) r -= m;
  return r;
}

struct LiftedFactorization {
  BigInt modulus;                        // p^K
  std::vector<std::vector<BigInt>> fac;  // monic, coefficients in [0, p^K)
};

// Lift the factorization of lc(G)^-1 * G mod p to mod p^K with p^K > bound.
LiftedFactorization hensel_lift(const std::vector<BigInt>& G, std::uint64_t p,
                                const std::vector<FpPoly>& modular, const BigInt& bound) {
  std::size_t n = G.size() - 1;
  std::size_t r = modular.size();
  BigInt target = 2 * bound + 1;
  BigInt P = p;
  while (cmp(P, target) < 0) P *= p;
  BigInt linv;
  int ok = mpz_invert(linv.get_mpz_t(), G.back().get_mpz_t(), P.get_mpz_t());
  assert(ok);
  (void)ok;

  // Partial fraction fixtures mod p: sigma_i * prod_{j != i} h_j = 1 mod h_i.
  std::vector<FpPoly> sigma(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly tau{1};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) tau = fp_rem(fp_mul(tau, modular[j], p), modular[i], p);
    sigma[i] = fp_invmod(tau, modular[i], p);
  }

  std::vector<std::vector<BigInt>> H(r);
  for (std::size_t i = 0; i < r; ++i) {
    H[i].assign(modular[i].begin(), modular[i].end());
  }

  BigInt q = p;
  while (cmp(q, P) < 0) {
    BigInt qn = q * p;
    // prod = prod H_i mod qn; E = (lc^-1 G - prod)/q mod p.
    std::vector<BigInt> prod{1};
    for (const auto& h : H) {
      std::vector<BigInt> nxt(prod.size() + h.size() - 1, BigInt(0));
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) nxt[i + j] = (nxt[i + j] + prod[i] * h[j]) % qn;
      prod = std::move(nxt);
    }
    FpPoly e(n, 0);
    for (std::size_t i = 0; i <= n; ++i) {
      BigInt ghat = (i < G.size() ? linv * G[i] : BigInt(0)) % qn;
      BigInt diff = (ghat - (i < prod.size() ? prod[i] : BigInt(0))) % qn;
      if (sgn(diff) < 0) diff += qn;
      assert(diff % q == 0);
      BigInt ei = (diff / q) % p;
      if (i < n) e[i] = ei.get_ui();
      // the x^n slot matches exactly: both sides are monic mod qn
    }
    fp_trim(e);
    for (std::size_t i = 0; i < r; ++i) {
      FpPoly delta = fp_rem(fp_mul(sigma[i], e, p), modular[i], p);
      for (std::size_t j = 0; j < delta.size(); ++j) H[i][j] += q * BigInt(delta[j]);
    }
    q = std::move(qn);
  }
  return {q, std::move(H)};
}

DensePoly1 from_int_coeffs(const std::vector<BigInt>& c) {
  std::vector<BigRat> q;
  q.reserve(c.size());
  for (const auto& z : c) q.emplace_back(z);
  return DensePoly1::from_coeffs(std::move(q));
}

// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<DensePoly1> factor_squarefree(const DensePoly1& g) {
  if (g.degree() == 1) return {g};
  std::vector<BigInt> G = to_int_coeffs(g);
  std::size_t n = G.size() - 1;

  // Smallest odd prime keeping the leading coefficient a unit and the
  // reduction squarefree.
  std::uint64_t p = 0;
  FpPoly gbar;
  for (std::uint64_t cand = 3;; cand += 2) {
    if (!is_small_prime(cand)) continue;
    if (G.back() % cand == 0) continue;
    FpPoly red(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      BigInt c = G[i] % cand;
      if (sgn(c) < 0) c += cand;
      red[i] = c.get_ui();
    }
    fp_trim(red);
    if (fp_deg(fp_gcd(red, fp_derivative(red, cand), cand)) == 0) {
      p = cand;
      gbar = fp_monic(red, p);
      break;
    }
  }

  std::vector<FpPoly> modular = berlekamp(gbar, p);
  if (modular.size() == 1) return {g};

  // Landau-Mignotte style coefficient bound for lc-adjusted true factors.
  BigInt maxc = 0;
  for (const auto& c : G) {
    BigInt a = abs(c);
    if (cmp(a, maxc) > 0) maxc = a;
  }
  BigInt bound = BigInt(n + 1) * pow_ui(2, n) * maxc * abs(G.back());
  LiftedFactorization lifted = hensel_lift(G, p, modular, bound);

  std::vector<DensePoly1> out;
  DensePoly1 gcur = g;
  std::vector<std::size_t> live(modular.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  auto try_subsets = [&](std::size_t size) -> bool {
    // lexicographic subsets of `live` of the given cardinality
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      BigInt lc = to_int_coeffs(gcur).back();
      std::vector<BigInt> cand{lc};
      for (std::size_t i : idx) {
        const auto& h = lifted.fac[live[i]];
        std::vector<BigInt> nxt(cand.size() + h.size() - 1, BigInt(0));
        for (std::size_t a = 0; a < cand.size(); ++a)
          for (std::size_t b = 0; b < h.size(); ++b)
            nxt[a + b] = (nxt[a + b] + cand[a] * h[b]) % lifted.modulus;
        cand = std::move(nxt);
      }
      for (auto& c : cand) c = mods(c, lifted.modulus);
      DensePoly1 cp = primitive_part(from_int_coeffs(cand)).primitive;
      if (auto quot = exact_divide(gcur, cp)) {
        out.push_back(cp);
        gcur = primitive_part(*quot).primitive;
        std::vector<std::size_t> remaining;
        for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
          if (k < idx.size() && idx[k] == i)
            ++k;
          else
            remaining.push_back(live[i]);
        }
        live = std::move(remaining);
        return true;
      }
      // next combination
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
      size = 1;  // factor extracted; smaller subsets of the rest are fresh
    else
      ++size;
  }
  if (gcur.degree() >= 1) out.push_back(gcur);
  return out;
}

}  // namespace

DenseFactorization1 factor_univariate(const DensePoly1& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  DenseFactorization1 out;
  DensePoly1 p = primitive_part(f).primitive;
  // v^k monomial factor
  std::size_t k = 0;
  while (k < p.coeffs().size() && sgn(p.coeffs()[k]) == 0) ++k;
  if (k > 0) {
    std::vector<BigRat> shifted(p.coeffs().begin() + k, p.coeffs().end());
    p = DensePoly1::from_coeffs(std::move(shifted));
    out.factors.push_back({DensePoly1::monomial(BigRat(1), 1), k});
  }
  for (auto& [part, mult] : squarefree_decompose(p)) {
    for (auto& irred : factor_squarefree(part)) out.factors.push_back({irred, mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
  DensePoly1 recon = DensePoly1::constant(BigRat(1));
  for (const auto& [q, m] : out.factors)
    for (unsigned long i = 0; i < m; ++i) recon = recon * q;
  out.unit = f.leading() / recon.leading();
  if (!(recon.scaled(out.unit) == f))
    throw std::logic_error("univariate factorization failed its reconstruction check");
  return out;
}

}  // namespace lacfact

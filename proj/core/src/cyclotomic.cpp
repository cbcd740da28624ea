#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lacfact/cyclotomic.hpp"

namespace lacfact {

namespace {

std::mutex cyclo_mutex;
std::map<unsigned long, DensePoly1>& cyclo_cache() {
  static std::map<unsigned long, DensePoly1> cache;
  return cache;
}

// z^n - 1 divided by the cyclotomics of all proper divisors. Assumes the
// cache lock is held.
const DensePoly1& cyclo_rec(unsigned long n) {
  auto& cache = cyclo_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<BigRat> c(n + 1);
  c[0] = BigRat(-1);
  c[n] = BigRat(1);
  DensePoly1 poly = DensePoly1::from_coeffs(std::move(c));
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = exact_divide(poly, cyclo_rec(d));
    poly = *q;
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

std::vector<unsigned long> phi_inverse_candidates(unsigned long d) {
  if (d == 0) throw std::invalid_argument("degree bound must be at least 1");
  unsigned long N = 2 * d * d;
  if (N / 2 / d != d) throw std::overflow_error("degree bound too large to sieve");
  std::vector<unsigned long> phi(N + 1);
  std::iota(phi.begin(), phi.end(), 0ul);
  for (unsigned long i = 2; i <= N; ++i) {
    if (phi[i] != i) continue;  // i composite
    for (unsigned long j = i; j <= N; j += i) phi[j] -= phi[j] / i;
  }
  std::vector<unsigned long> out;
  for (unsigned long n = 1; n <= N; ++n)
    if (phi[n] <= d) out.push_back(n);
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

DensePoly1 cyclotomic_poly(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be at least 1");
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  return cyclo_rec(n);
}

std::optional<unsigned long> cyclotomic_index(const DensePoly1& q) {
  long m = q.degree();
  if (m < 1) return std::nullopt;
  for (unsigned long n : phi_inverse_candidates(static_cast<unsigned long>(m))) {
    if (euler_phi(n) != static_cast<unsigned long>(m)) continue;
    if (q == cyclotomic_poly(n)) return n;
  }
  return std::nullopt;
}

bool is_cyclotomic_product(const DensePoly1& q) {
  if (q.is_zero()) return false;
  DensePoly1 cur = primitive_part(q).primitive;
  while (cur.degree() >= 1) {
    if (sgn(cur.coeff(0)) == 0) return false;  // a power of z is not torsion
    bool found = false;
    for (unsigned long n : phi_inverse_candidates(static_cast<unsigned long>(cur.degree()))) {
      if (auto rest = exact_divide(cur, cyclotomic_poly(n))) {
        cur = std::move(*rest);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return cur == DensePoly1::constant(BigRat(1));
}

std::optional<DensePoly1> support_line_poly(const DensePoly2& p) {
  if (p.is_zero()) return std::nullopt;
  std::vector<std::pair<long, long>> pts;
  const auto& rows = p.rows();
  for (long j = 0; j < static_cast<long>(rows.size()); ++j)
    for (long i = 0; i < static_cast<long>(rows[j].size()); ++i)
      if (sgn(rows[j][i]) != 0) pts.push_back({i, j});
  if (pts.size() == 1) return DensePoly1::constant(rows[pts[0].second][pts[0].first]);
  long dx = pts[1].first - pts[0].first;
  long dy = pts[1].second - pts[0].second;
  for (const auto& [i, j] : pts) {
    long long cross = static_cast<long long>(i - pts[0].first) * dy -
                      static_cast<long long>(j - pts[0].second) * dx;
    if (cross != 0) return std::nullopt;
  }
  long g = std::gcd(std::abs(dx), std::abs(dy));
  dx /= g;
  dy /= g;
  // Parameters along the support line, shifted to start at zero.
  std::vector<long> ks(pts.size());
  for (std::size_t m = 0; m < pts.size(); ++m) {
    ks[m] = dx != 0 ? (pts[m].first - pts[0].first) / dx : (pts[m].second - pts[0].second) / dy;
  }
  long kmin = *std::min_element(ks.begin(), ks.end());
  long kmax = *std::max_element(ks.begin(), ks.end());
  std::vector<BigRat> c(static_cast<std::size_t>(kmax - kmin) + 1);
  for (std::size_t m = 0; m < pts.size(); ++m)
    c[static_cast<std::size_t>(ks[m] - kmin)] = rows[pts[m].second][pts[m].first];
  return DensePoly1::from_coeffs(std::move(c));
}

bool is_torsion_form(const DensePoly2& p) {
  auto line = support_line_poly(p);
  if (!line) return false;
  if (line->degree() <= 0) return true;  // monomials count
  return is_cyclotomic_product(*line);
}

DensePoly1 reduce_mod_cyclotomic_support(const SparsePoly& f, Var v, unsigned long n) {
  if (n == 0) throw std::invalid_argument("fold modulus must be at least 1");
  if (!f.is_univariate_in(v)) throw std::invalid_argument("polynomial is not univariate");
  std::vector<BigRat> c(n);
  for (const auto& term : f.terms()) {
    const BigNat& e = v == Var::x ? term.ex : term.ey;
    c[mpz_fdiv_ui(e.get_mpz_t(), n)] += term.coeff;
  }
  return DensePoly1::from_coeffs(std::move(c));
}

}  // namespace lacfact

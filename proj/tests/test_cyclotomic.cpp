#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lacfact/cyclotomic.hpp"
#include "lacfact/dense_poly.hpp"
#include "lacfact/parse.hpp"
#include "support/oracle.hpp"

using namespace lacfact;

static DensePoly1 dx(const char* s) { return to_dense1(parse_poly_text(s), Var::x); }
static DensePoly2 dxy(const char* s) { return to_dense2(parse_poly_text(s)); }

// independent totient by trial division
static unsigned long phi_ref(unsigned long n) {
  unsigned long r = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    r -= r / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) r -= r / n;
  return r;
}

TEST_CASE("totient preimages are complete for each degree bound") {
  auto d1 = phi_inverse_candidates(1);
  CHECK(d1 == std::vector<unsigned long>{1, 2});
  auto d2 = phi_inverse_candidates(2);
  CHECK(d2 == std::vector<unsigned long>{1, 2, 3, 4, 6});
  auto d4 = phi_inverse_candidates(4);
  for (unsigned long n : {5ul, 8ul, 10ul, 12ul})
    CHECK(std::find(d4.begin(), d4.end(), n) != d4.end());

  for (unsigned long d : {1ul, 2ul, 3ul, 4ul, 6ul, 10ul, 16ul}) {
    auto cand = phi_inverse_candidates(d);
    for (unsigned long n : cand) CHECK(phi_ref(n) <= d);
    // nothing with small totient is missed; phi(n) > sqrt(n/2) bounds the scan
    for (unsigned long n = 1; n <= 2 * d * d + 2; ++n)
      if (phi_ref(n) <= d) CHECK(std::find(cand.begin(), cand.end(), n) != cand.end());
  }

  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(euler_phi(360) == 96);
}

TEST_CASE("cyclotomic polynomials multiply back to x^n - 1") {
  CHECK(cyclotomic_poly(1) == dx("x - 1"));
  CHECK(cyclotomic_poly(2) == dx("x + 1"));
  CHECK(cyclotomic_poly(6) == dx("x^2 - x + 1"));
  CHECK(cyclotomic_poly(12) == dx("x^4 - x^2 + 1"));

  for (unsigned long n = 1; n <= 30; ++n) {
    DensePoly1 prod = DensePoly1::constant(BigRat(1));
    for (unsigned long m = 1; m <= n; ++m)
      if (n % m == 0) prod = prod * cyclotomic_poly(m);
    DensePoly1 xn1 = DensePoly1::monomial(BigRat(1), n) - DensePoly1::constant(BigRat(1));
    CHECK(prod == xn1);
  }

  // first index whose coefficients leave {-1, 0, 1}
  for (unsigned long n = 1; n < 105; ++n) {
    DensePoly1 cp = cyclotomic_poly(n);
    for (const BigRat& c : cp.coeffs()) CHECK(testsupport::rat_abs(c) <= 1);
  }
  DensePoly1 c105 = cyclotomic_poly(105);
  BigRat lowest(0);
  for (const BigRat& c : c105.coeffs()) lowest = std::min(lowest, c);
  CHECK(lowest == -2);
}

TEST_CASE("cyclotomic recognition by index and by product") {
  for (unsigned long n = 1; n <= 100; ++n) {
    auto idx = cyclotomic_index(cyclotomic_poly(n));
    REQUIRE(idx.has_value());
    CHECK(*idx == n);
  }
  CHECK(!cyclotomic_index(dx("x^2 + 2")).has_value());
  CHECK(!cyclotomic_index(dx("x^2 - 1")).has_value());  // product, not a single one

  CHECK(is_cyclotomic_product(dx("x^2 - 1")));
  CHECK(is_cyclotomic_product(dx("x - 1") * dx("x - 1") * dx("x + 1") * cyclotomic_poly(6)));
  CHECK(is_cyclotomic_product(-(dx("x + 1"))));
  CHECK(is_cyclotomic_product(DensePoly1::constant(BigRat(5))));
  CHECK(!is_cyclotomic_product(dx("x")));
  CHECK(!is_cyclotomic_product(dx("x^2 + 2")));
  CHECK(is_cyclotomic_product(dx("2*x - 2")));  // content is ignored
}

TEST_CASE("support lines and torsion forms") {
  auto line = support_line_poly(dxy("x^2 - y^2"));
  REQUIRE(line.has_value());
  CHECK(*line == dx("1 - x^2"));

  auto line2 = support_line_poly(dxy("x^7*y^2 + 3*x^4*y^3 + x*y^4"));
  REQUIRE(line2.has_value());
  CHECK(*line2 == dx("1 + 3*x + x^2"));

  CHECK(!support_line_poly(dxy("x + y + 1")).has_value());

  auto mono = support_line_poly(dxy("5*x^3*y^2"));
  REQUIRE(mono.has_value());
  CHECK(*mono == DensePoly1::constant(BigRat(5)));

  CHECK(is_torsion_form(dxy("x^2 - y^2")));
  CHECK(is_torsion_form(dxy("x^5 - y^5")));
  CHECK(is_torsion_form(dxy("x^2 + y")));
  CHECK(is_torsion_form(dxy("7*x^3*y^2")));
  CHECK(!is_torsion_form(dxy("x - 2*y")));
  CHECK(!is_torsion_form(dxy("x^5 - 2*y^5")));
  CHECK(!is_torsion_form(dxy("x + y + 1")));
}

// long-division remainder by x^n - 1, a different route than exponent folding
static DensePoly1 division_remainder(const DensePoly1& f, unsigned long n) {
  std::vector<BigRat> c = f.coeffs();
  for (std::size_t i = c.size(); i-- > n;) {
    c[i - n] += c[i];
    c[i] = 0;
  }
  c.resize(std::min<std::size_t>(c.size(), n));
  return DensePoly1::from_coeffs(std::move(c));
}

TEST_CASE("exponent folding equals dense remainder modulo x^n - 1") {
  SparsePoly f1 = parse_poly_text("x^1048576 - 1");
  CHECK(reduce_mod_cyclotomic_support(f1, Var::x, 2).is_zero());
  CHECK(reduce_mod_cyclotomic_support(parse_poly_text("x^3 + 1"), Var::x, 2) == dx("x + 1"));
  CHECK(reduce_mod_cyclotomic_support(parse_poly_text("x + 2"), Var::x, 3) == dx("x + 2"));
  CHECK_THROWS_AS(reduce_mod_cyclotomic_support(parse_poly_text("x*y"), Var::x, 2),
                  std::invalid_argument);

  std::mt19937_64 rng(401);
  for (int i = 0; i < 300; ++i) {
    SparsePoly f = testsupport::random_sparse(rng, 1 + rng() % 8, 30, 6);
    // flatten to a univariate in x with spread <= 60
    std::vector<Term> terms;
    for (const auto& t : f.terms()) terms.push_back({t.coeff, t.ex + t.ey, 0});
    SparsePoly u = SparsePoly::from_terms(std::move(terms));
    if (u.is_zero()) continue;
    unsigned long n = 1 + rng() % 40;
    CHECK(reduce_mod_cyclotomic_support(u, Var::x, n) ==
          division_remainder(to_dense1(u, Var::x), n));
  }

  // folding preserves divisibility by cyclotomics of divisor index
  std::mt19937_64 rng2(402);
  for (int i = 0; i < 100; ++i) {
    unsigned long m = 1 + rng2() % 12;
    unsigned long n = m * (1 + rng2() % 4);
    DensePoly1 g = testsupport::random_dense1(rng2, testsupport::random_in(rng2, 0, 5), 6);
    if (g.is_zero()) continue;
    DensePoly1 f = g * cyclotomic_poly(m);
    DensePoly1 folded = reduce_mod_cyclotomic_support(to_sparse(f, Var::x), Var::x, n);
    if (folded.is_zero()) continue;
    CHECK(exact_divide(folded, cyclotomic_poly(m)).has_value());
  }
}

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "lacfact/binomial.hpp"
#include "lacfact/cyclotomic.hpp"
#include "lacfact/univariate.hpp"

namespace lacfact {

BinomialRemainder remainder_slices(const SparsePoly& f, unsigned long alpha, unsigned long beta,
                                   BinomialForm form) {
  if (alpha == 0 || beta == 0) throw std::invalid_argument("binomial exponents must be positive");
  if (std::gcd(alpha, beta) != 1)
    throw std::invalid_argument("binomial exponents must be coprime");
  BinomialRemainder out;
  out.form = form;
  out.alpha = alpha;
  out.beta = beta;
  // Slice keys stay exact: the y part can go negative for form2 before the
  // lift normalization.
  std::map<std::pair<unsigned long, BigInt>, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) {
    BigNat zexp = floor_div(t.ex, BigInt(alpha));
    unsigned long i = mpz_fdiv_ui(t.ex.get_mpz_t(), alpha);
    BigInt shift = BigInt(beta) * zexp;
    BigInt j = form == BinomialForm::form1 ? BigInt(t.ey + shift) : BigInt(t.ey - shift);
    buckets[{i, std::move(j)}].push_back({t.coeff, zexp, BigNat(0)});
  }
  BigInt lift = 0;
  for (const auto& bucket : buckets)
    if (bucket.first.second < 0) lift = std::max(lift, BigInt(-bucket.first.second));
  out.y_lift = lift;
  for (auto& [key, terms] : buckets) {
    BinomialSlice slice;
    slice.i = key.first;
    slice.j = key.second + lift;
    slice.g = SparsePoly::from_terms(std::move(terms));
    out.slices.push_back(std::move(slice));
  }
  return out;
}

DensePoly2 reconstruct_factor(const DensePoly1& q, unsigned long alpha, unsigned long beta,
                              BinomialForm form, unsigned long d) {
  if (q.degree() < 1) throw std::invalid_argument("factor candidate must be nonconstant");
  if (sgn(q.coeff(0)) == 0)
    throw std::invalid_argument("factor candidate must have a nonzero constant term");
  unsigned long s = static_cast<unsigned long>(q.degree());
  BigNat total = BigNat(form == BinomialForm::form1 ? std::max(alpha, beta) : alpha + beta) * s;
  if (total > d)
    throw DegreeExceededError("reconstructed factor has total degree " + total.get_str() +
                              " above the bound " + std::to_string(d));
  std::vector<Term> terms;
  for (unsigned long k = 0; k <= s; ++k) {
    BigRat ck = q.coeff(k);
    if (sgn(ck) == 0) continue;
    if (form == BinomialForm::form1)
      terms.push_back({ck, BigNat(alpha) * k, BigNat(beta) * (s - k)});
    else
      terms.push_back({ck, BigNat(alpha) * k, BigNat(beta) * k});
  }
  return primitive_part(to_dense2(SparsePoly::from_terms(std::move(terms)))).primitive;
}

namespace {

struct Poly1Less {
  bool operator()(const DensePoly1& a, const DensePoly1& b) const { return compare(a, b) < 0; }
};
struct Poly2Less {
  bool operator()(const DensePoly2& a, const DensePoly2& b) const { return compare(a, b) < 0; }
};

using FactorMap = std::map<DensePoly1, std::pair<unsigned long, bool>, Poly1Less>;

// Intersect `into` with the factors of one more slice, keeping the minimum
// multiplicity.
void intersect_with(FactorMap& into, bool& first, const UnivariateFactorList& ufl) {
  FactorMap here;
  for (const auto& uf : ufl.factors) here[uf.poly] = {uf.multiplicity, uf.cyclotomic};
  if (first) {
    into = std::move(here);
    first = false;
    return;
  }
  for (auto it = into.begin(); it != into.end();) {
    auto jt = here.find(it->first);
    if (jt == here.end()) {
      it = into.erase(it);
    } else {
      it->second.first = std::min(it->second.first, jt->second.first);
      ++it;
    }
  }
}

}  // namespace

BinomialSearchResult binomial_factor_search(const SparsePoly& f, unsigned long d,
                                            unsigned long dense_limit) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (d == 0) throw std::invalid_argument("degree bound must be at least 1");
  auto [ax, ay] = f.min_exponents();
  SparsePoly fs = f.shifted_down(ax, ay);
  BinomialSearchResult out;
  if (fs.is_constant()) return out;

  std::map<DensePoly2, std::pair<unsigned long, bool>, Poly2Less> found;
  auto record = [&](const DensePoly2& p, unsigned long mult, bool cyclo) {
    auto [it, inserted] = found.emplace(p, std::make_pair(mult, cyclo));
    // distinct search branches can never produce the same polynomial
    assert(inserted);
    (void)it;
    (void)inserted;
  };

  for (unsigned long a = 1; a <= d; ++a) {
    for (unsigned long b = 1; b <= d; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (BinomialForm form : {BinomialForm::form1, BinomialForm::form2}) {
        unsigned long cap =
            form == BinomialForm::form1 ? d / std::max(a, b) : d / (a + b);
        if (cap == 0) continue;
        BinomialRemainder rem = remainder_slices(fs, a, b, form);
        FactorMap common;
        bool first = true;
        for (const auto& slice : rem.slices) {
          UnivariateFactorList ufl = find_low_degree_factors(slice.g, Var::x, cap, dense_limit);
          for (const auto& marker : ufl.untested)
            out.untested.push_back("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") form" + (form == BinomialForm::form1 ? "1" : "2") +
                                   " slice (" + std::to_string(slice.i) + "," +
                                   slice.j.get_str() + "): " + marker);
          intersect_with(common, first, ufl);
          if (common.empty()) break;
        }
        for (const auto& [q, info] : common) {
          DensePoly2 p = reconstruct_factor(q, a, b, form, d);
          bool cyclo = info.second || cyclotomic_index(q).has_value() || is_torsion_form(p);
          record(p, info.first, cyclo);
        }
      }
    }
  }

  // Factors living in one variable: intersect over the other variable's
  // coefficient slices.
  auto pure_scan = [&](Var group_var, Var poly_var) {
    FactorMap common;
    bool first = true;
    for (const auto& [e, gpoly] : coefficients_in(fs, group_var)) {
      (void)e;
      UnivariateFactorList ufl = find_low_degree_factors(gpoly, poly_var, d, dense_limit);
      for (const auto& marker : ufl.untested)
        out.untested.push_back(std::string("pure ") + (poly_var == Var::x ? "x" : "y") +
                               " path: " + marker);
      intersect_with(common, first, ufl);
      if (common.empty()) break;
    }
    for (const auto& [q, info] : common)
      record(DensePoly2::embed(q, poly_var), info.first, info.second);
  };
  pure_scan(Var::y, Var::x);
  pure_scan(Var::x, Var::y);

  out.factors.reserve(found.size());
  for (const auto& [p, info] : found)
    out.factors.push_back({p, info.first, info.second});
  return out;
}

}  // namespace lacfact

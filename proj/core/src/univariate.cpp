#include <algorithm>
#include <map>
#include <optional>

#include "lacfact/cyclotomic.hpp"
#include "lacfact/dense_factor.hpp"
#include "lacfact/gap.hpp"
#include "lacfact/log_bounds.hpp"
#include "lacfact/parse.hpp"
#include "lacfact/univariate.hpp"

namespace lacfact {

std::vector<std::pair<unsigned long, unsigned long>> cyclotomic_factors(
    const SparsePoly& f, Var v, unsigned long d, unsigned long dense_limit,
    std::vector<std::string>* untested) {
  if (f.is_zero()) throw ZeroPolynomialError();
  unsigned long cap = f.term_count() - 1;
  std::vector<std::pair<unsigned long, unsigned long>> out;
  for (unsigned long n : phi_inverse_candidates(d)) {
    if (n > dense_limit) {
      if (untested)
        untested->push_back("cyclotomic candidate n=" + std::to_string(n) +
                            " exceeds the dense limit");
      continue;
    }
    DensePoly1 phi_n = cyclotomic_poly(n);
    unsigned long mult = 0;
    SparsePoly g = f;
    while (mult < cap) {
      DensePoly1 fold = reduce_mod_cyclotomic_support(g, v, n);
      // phi_n divides g iff it divides g mod (z^n - 1)
      if (!fold.is_zero() && !exact_divide(fold, phi_n)) break;
      ++mult;
      g = g.derivative(v);
      if (g.is_zero()) break;
    }
    if (mult > 0) out.push_back({n, mult});
  }
  return out;
}

namespace {

struct PolyLess {
  bool operator()(const DensePoly1& a, const DensePoly1& b) const { return compare(a, b) < 0; }
};

// Densified pieces of the j-th derivative, computed on demand. The gap is
// recomputed per level: the height of the j-th derivative is at most
// c + j * ln(deg + 1), and the actual recomputed height of the derivative
// is used when smaller. A piece that exceeds the dense limit is stored as
// nullopt and reported once.
class DerivativePieces {
 public:
  DerivativePieces(SparsePoly base, Var v, unsigned long d, BigRat c, BigRat ln_step,
                   unsigned long limit, std::vector<std::string>* untested)
      : v_(v), d_(d), c_(std::move(c)), ln_step_(std::move(ln_step)), limit_(limit),
        untested_(untested) {
    levels_.push_back(std::move(base));
  }

  const SparsePoly& derivative_at(unsigned long j) {
    while (levels_.size() <= j) levels_.push_back(levels_.back().derivative(v_));
    return levels_[j];
  }

  BigNat delta_at(unsigned long j) {
    BigRat cj = c_ + BigRat(j) * ln_step_;
    const SparsePoly& g = derivative_at(j);
    if (!g.is_zero()) {
      BigRat actual = compute_c(g);
      if (actual < cj) cj = actual;
    }
    return delta_rational(d_, cj);
  }

  const std::vector<std::optional<DensePoly1>>& pieces_at(unsigned long j) {
    while (pieces_.size() <= j) {
      unsigned long level = pieces_.size();
      std::vector<std::optional<DensePoly1>> dense;
      const SparsePoly& g = derivative_at(level);
      if (!g.is_zero()) {
        BigNat delta = delta_at(level);
        for (const auto& piece : decompose(g, delta, delta).pieces) {
          try {
            dense.push_back(densify_univariate(piece.piece, v_, limit_).poly);
          } catch (const DenseLimitExceeded& e) {
            if (untested_)
              untested_->push_back("derivative " + std::to_string(level) + " piece at offset " +
                                   (v_ == Var::x ? piece.gamma : piece.delta_off).get_str() +
                                   ": " + e.what());
            dense.push_back(std::nullopt);
          }
        }
      }
      pieces_.push_back(std::move(dense));
    }
    return pieces_[j];
  }

 private:
  Var v_;
  unsigned long d_;
  BigRat c_;
  BigRat ln_step_;
  unsigned long limit_;
  std::vector<std::string>* untested_;
  std::vector<SparsePoly> levels_;
  std::vector<std::vector<std::optional<DensePoly1>>> pieces_;
};

}  // namespace

UnivariateFactorList find_low_degree_factors(const SparsePoly& f, Var v, unsigned long d,
                                             unsigned long dense_limit) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (!f.is_univariate_in(v)) throw std::invalid_argument("polynomial is not univariate");
  UnivariateFactorList out;
  auto [ax, ay] = f.min_exponents();
  out.z_multiplicity = v == Var::x ? ax : ay;
  SparsePoly fs = primitive_part(f.shifted_down(ax, ay)).primitive;
  if (fs.is_constant()) return out;
  unsigned long cap = fs.term_count() - 1;

  for (const auto& [n, mult] : cyclotomic_factors(fs, v, d, dense_limit, &out.untested))
    out.factors.push_back({cyclotomic_poly(n), mult, true});

  BigRat c = compute_c(fs);
  BigRat ln_step = ln_bounds(BigRat(fs.degree(v)) + 1).upper;
  DerivativePieces cache(fs, v, d, c, ln_step, dense_limit, &out.untested);

  const auto& base_pieces = cache.pieces_at(0);
  std::map<DensePoly1, unsigned long, PolyLess> present;  // factor -> #pieces seen in
  unsigned long usable = 0;
  for (const auto& piece : base_pieces) {
    if (!piece) continue;
    ++usable;
    for (const auto& [q, m] : factor_univariate(*piece).factors) {
      if (q.degree() < 1 || q.degree() > static_cast<long>(d)) continue;
      if (cyclotomic_index(q)) continue;  // already handled exactly
      (void)m;
      ++present[q];
    }
  }
  bool all_pieces_tested = usable == base_pieces.size();

  for (const auto& [q, count] : present) {
    if (usable == 0 || count != usable) continue;
    if (!all_pieces_tested) {
      // Divisibility of f is only certified when every piece was checked.
      out.untested.push_back("candidate " + format_poly_text(to_sparse(q, v)) +
                             " divides every densifiable piece but some piece was skipped");
      continue;
    }
    // A failed division on any densified piece is a certified stop; a stop
    // forced only by skipped pieces is flagged.
    unsigned long mult = 1;
    while (mult < cap) {
      if (cache.derivative_at(mult).is_zero()) break;
      bool failed = false;
      bool skipped = false;
      for (const auto& piece : cache.pieces_at(mult)) {
        if (!piece)
          skipped = true;
        else if (!exact_divide(*piece, q))
          failed = true;
        if (failed) break;
      }
      if (failed || skipped) {
        if (!failed)
          out.untested.push_back("multiplicity of " + format_poly_text(to_sparse(q, v)) +
                                 " certified only to " + std::to_string(mult) +
                                 "; a derivative piece was skipped");
        break;
      }
      ++mult;
    }
    out.factors.push_back({q, mult, false});
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const UnivariateFactor& a, const UnivariateFactor& b) {
              return compare(a.poly, b.poly) < 0;
            });
  return out;
}

}  // namespace lacfact

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "lacfact/binomial.hpp"
#include "lacfact/cyclotomic.hpp"
#include "lacfact/dense_factor.hpp"
#include "lacfact/engine.hpp"
#include "lacfact/log_bounds.hpp"
#include "lacfact/parse.hpp"

namespace lacfact {

bool check_divides(const SparsePoly& f, const DensePoly2& p, const BigNat& delta,
                   unsigned long dense_limit) {
  if (f.is_zero()) throw ZeroPolynomialError();
  for (const auto& piece : decompose(f, delta, delta).pieces) {
    DensePoly2 dense = densify_bivariate(piece.piece, dense_limit).poly;
    if (!exact_divide(dense, p)) return false;
  }
  return true;
}

namespace {

struct Poly2Less {
  bool operator()(const DensePoly2& a, const DensePoly2& b) const { return compare(a, b) < 0; }
};

// fn(i) for i in [0, n), on up to `threads` workers. Results must be written
// to per-index slots; the first exception (by index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned int threads, Fn fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  unsigned int workers = static_cast<unsigned int>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Densified pieces of successive derivatives in one variable, on demand.
// The gap is recomputed per level from the derivative's height budget
// c + j * ln(deg + 1) (or its actual recomputed height when smaller) and
// pre-padded by the multiplicity cap. A fixed heuristic gap, when present,
// overrides all levels. Pieces over the dense limit are stored as nullopt
// and reported once.
class DerivativePieces2 {
 public:
  DerivativePieces2(SparsePoly base, Var v, unsigned long d, BigRat c, BigRat ln_step,
                    BigNat pad, std::optional<BigNat> fixed_delta, unsigned long limit,
                    std::vector<std::string>* untested)
      : v_(v), d_(d), c_(std::move(c)), ln_step_(std::move(ln_step)), pad_(std::move(pad)),
        fixed_delta_(std::move(fixed_delta)), limit_(limit), untested_(untested) {
    levels_.push_back(std::move(base));
  }

  const SparsePoly& derivative_at(unsigned long j) {
    while (levels_.size() <= j) levels_.push_back(levels_.back().derivative(v_));
    return levels_[j];
  }

  BigNat delta_at(unsigned long j) {
    if (fixed_delta_) return *fixed_delta_;
    BigRat cj = c_ + BigRat(j) * ln_step_;
    const SparsePoly& g = derivative_at(j);
    if (!g.is_zero()) {
      BigRat actual = compute_c(g);
      if (actual < cj) cj = actual;
    }
    return delta_rational(d_, cj, pad_);
  }

  const std::vector<std::optional<DensePoly2>>& pieces_at(unsigned long j) {
    while (pieces_.size() <= j) {
      unsigned long level = pieces_.size();
      std::vector<std::optional<DensePoly2>> dense;
      const SparsePoly& g = derivative_at(level);
      if (!g.is_zero()) {
        BigNat delta = delta_at(level);
        for (const auto& piece : decompose(g, delta, delta).pieces) {
          try {
            dense.push_back(densify_bivariate(piece.piece, limit_).poly);
          } catch (const DenseLimitExceeded& e) {
            if (untested_)
              untested_->push_back("derivative " + std::to_string(level) + " in " +
                                   (v_ == Var::x ? "x" : "y") + ", piece at (" +
                                   piece.gamma.get_str() + "," + piece.delta_off.get_str() +
                                   "): " + e.what());
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
  BigNat pad_;
  std::optional<BigNat> fixed_delta_;
  unsigned long limit_;
  std::vector<std::string>* untested_;
  std::vector<SparsePoly> levels_;
  std::vector<std::vector<std::optional<DensePoly2>>> pieces_;
};

}  // namespace

FactorOutput factor(const SparsePoly& f, unsigned long d, const FactorOptions& options) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (d == 0) throw std::invalid_argument("degree bound must be at least 1");
  FactorOutput out;
  auto [ax, ay] = f.min_exponents();
  out.x_multiplicity = ax;
  out.y_multiplicity = ay;
  SparsePoly fs = primitive_part(f.shifted_down(ax, ay)).primitive;
  unsigned long cap = fs.term_count() - 1;

  BigRat c = compute_c(fs);
  BigNat delta;
  if (options.heuristic_delta) {
    delta = *options.heuristic_delta;
    out.heuristic = true;
  } else {
    delta = delta_rational(d, c, BigNat(cap));
  }
  out.parameters = {d, c, delta, GapMode::rational};
  if (fs.is_constant()) return out;

  BinomialSearchResult bin = binomial_factor_search(fs, d, options.dense_limit);
  for (const auto& marker : bin.untested) out.untested.push_back("binomial path: " + marker);

  BigNat maxdeg = std::max(fs.degree(Var::x), fs.degree(Var::y));
  BigRat ln_step = ln_bounds(BigRat(maxdeg) + 1).upper;
  DerivativePieces2 ycache(fs, Var::y, d, c, ln_step, BigNat(cap), options.heuristic_delta,
                           options.dense_limit, &out.untested);
  DerivativePieces2 xcache(fs, Var::x, d, c, ln_step, BigNat(cap), options.heuristic_delta,
                           options.dense_limit, &out.untested);

  const auto& pieces0 = ycache.pieces_at(0);
  std::vector<std::optional<DenseFactorization2>> piece_factors(pieces0.size());
  parallel_for(pieces0.size(), options.threads, [&](std::size_t i) {
    if (pieces0[i]) piece_factors[i] = factor_bivariate(*pieces0[i]);
  });

  std::map<DensePoly2, std::size_t, Poly2Less> seen_in;  // candidate -> #pieces
  std::size_t usable = 0;
  for (const auto& fac : piece_factors) {
    if (!fac) continue;
    ++usable;
    for (const auto& [q, m] : fac->factors) {
      (void)m;
      long deg = q.total_degree();
      if (deg >= 1 && deg <= static_cast<long>(d)) ++seen_in[q];
    }
  }
  bool all_pieces_tested = usable == pieces0.size();

  std::map<DensePoly2, FactorEntry, Poly2Less> merged;
  for (const auto& bf : bin.factors)
    merged.emplace(bf.poly, FactorEntry{bf.poly, bf.multiplicity,
                                        bf.cyclotomic ? FactorClass::cyclotomic
                                                      : FactorClass::binomial});

  for (const auto& [q, count] : seen_in) {
    if (usable == 0 || count != usable) continue;
    auto line = support_line_poly(q);
    bool torsion = line && (line->degree() <= 0 || is_cyclotomic_product(*line));
    if (torsion) continue;  // the binomial path owns torsion forms
    if (!all_pieces_tested) {
      // Divisibility of f is only certified when every piece was checked.
      out.untested.push_back("gap path: candidate " + format_poly_text(to_sparse(q)) +
                             " divides every densifiable piece but some piece was skipped");
      continue;
    }

    // Multiplicity: consecutive derivatives whose every piece q divides. A
    // failed division on any densified piece is a certified stop; a stop
    // forced only by skipped pieces is flagged.
    Var v = q.degree_y() >= 1 ? Var::y : Var::x;
    DerivativePieces2& cache = v == Var::y ? ycache : xcache;
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
          out.untested.push_back("gap path: multiplicity of " + format_poly_text(to_sparse(q)) +
                                 " certified only to " + std::to_string(mult) +
                                 "; a derivative piece was skipped");
        break;
      }
      ++mult;
    }

    if (line) {
      // Collinear support: the binomial path must have found it too.
      bool comparable = !out.heuristic && out.untested.empty();
      auto it = merged.find(q);
      if (it == merged.end()) {
        if (comparable) ++out.cross_check_mismatches;
        merged.emplace(q, FactorEntry{q, mult, FactorClass::binomial});
      } else if (comparable && it->second.multiplicity != mult) {
        ++out.cross_check_mismatches;
      }
    } else {
      merged.emplace(q, FactorEntry{q, mult, FactorClass::general});
    }
  }

  out.factors.reserve(merged.size());
  for (const auto& [p, entry] : merged) {
    (void)p;
    out.factors.push_back(entry);
  }
  return out;
}

}  // namespace lacfact

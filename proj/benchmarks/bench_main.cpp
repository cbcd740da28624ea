#include <random>

#include <benchmark/benchmark.h>

#include "lacfact/engine.hpp"
#include "lacfact/gap.hpp"
#include "lacfact/log_bounds.hpp"

namespace {

using namespace lacfact;

// t terms with exponents spread over ~2^bits, deterministic seed.
SparsePoly random_lacunary(std::size_t t, unsigned bits, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < t; ++i) {
    BigNat ex = 0, ey = 0;
    for (unsigned b = 0; b < bits; b += 32) {
      ex = (ex << 32) + BigNat(static_cast<unsigned long>(rng() & 0xffffffffu));
      ey = (ey << 32) + BigNat(static_cast<unsigned long>(rng() & 0xffffffffu));
    }
    long c = static_cast<long>(rng() % 2001) - 1000;
    terms.push_back({BigRat(c == 0 ? 1 : c), ex, ey});
  }
  return SparsePoly::from_terms(std::move(terms));
}

void bm_decompose(benchmark::State& state) {
  SparsePoly f = random_lacunary(static_cast<std::size_t>(state.range(0)), 256, 42);
  BigNat delta = delta_rational(3, compute_c(f));
  for (auto _ : state) {
    auto dec = decompose(f, delta, delta);
    benchmark::DoNotOptimize(dec.pieces.size());
  }
}
BENCHMARK(bm_decompose)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void bm_delta_rational(benchmark::State& state) {
  BigRat c = BigRat(state.range(0));
  for (auto _ : state) {
    BigNat d = delta_rational(static_cast<unsigned long>(state.range(1)), c);
    benchmark::DoNotOptimize(d.get_ui());
  }
}
BENCHMARK(bm_delta_rational)->Args({10, 2})->Args({1000, 5})->Args({100000, 20});

void bm_factor_lacunary_product(benchmark::State& state) {
  // (x + y + 1) * (x^E + y^(E-1) + 3) with E ~ 2^bits.
  unsigned bits = static_cast<unsigned>(state.range(0));
  BigNat e = (BigNat(1) << bits) + 7;
  SparsePoly left = SparsePoly::from_terms(
      {{BigRat(1), 1, 0}, {BigRat(1), 0, 1}, {BigRat(1), 0, 0}});
  SparsePoly right = SparsePoly::from_terms(
      {{BigRat(1), e, 0}, {BigRat(1), 0, e - 1}, {BigRat(3), 0, 0}});
  SparsePoly f = left * right;
  for (auto _ : state) {
    FactorOutput out = factor(f, 1);
    benchmark::DoNotOptimize(out.factors.size());
  }
}
BENCHMARK(bm_factor_lacunary_product)->Arg(20)->Arg(80)->Arg(320);

}  // namespace

BENCHMARK_MAIN();

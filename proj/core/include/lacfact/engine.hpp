#ifndef LACFACT_ENGINE_HPP
#define LACFACT_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lacfact/dense_poly.hpp"
#include "lacfact/gap.hpp"
#include "lacfact/sparse_poly.hpp"

namespace lacfact {

enum class FactorClass { cyclotomic, binomial, general };

struct FactorEntry {
  DensePoly2 poly;  // primitive integer, irreducible, canonical sign
  unsigned long multiplicity = 0;
  FactorClass cls = FactorClass::general;
};

struct FactorOptions {
  unsigned long dense_limit = 2000;
  // Exploratory smaller gap. Every reported factor still divides f (piecewise
  // division certifies that direction unconditionally), but the list may be
  // incomplete; the output is marked heuristic.
  std::optional<BigNat> heuristic_delta;
  unsigned int threads = 1;
};

struct FactorOutput {
  BigNat x_multiplicity;
  BigNat y_multiplicity;
  std::vector<FactorEntry> factors;
  // Candidates or pieces skipped at the dense limit; nonempty means the
  // factor list may be incomplete.
  std::vector<std::string> untested;
  GapParameters parameters;
  bool heuristic = false;
  // Disagreements between the binomial and gap discovery paths on factors
  // both are expected to find. Always 0 unless something is wrong.
  unsigned long cross_check_mismatches = 0;
};

// Whether p divides every densified piece of the decomposition of f at gap
// length delta. True always implies p | f. The converse holds when delta is
// at least delta_rational(deg p, compute_c(f)) and p is irreducible and not
// a torsion form.
bool check_divides(const SparsePoly& f, const DensePoly2& p, const BigNat& delta,
                   unsigned long dense_limit = 2000);

// All irreducible factors of f in Q[x,y] of total degree <= d, with exact
// multiplicities, plus the trivial monomial multiplicities. Runs in time
// polynomial in the sparse encoding length as long as the gap pieces stay
// within the dense limit.
FactorOutput factor(const SparsePoly& f, unsigned long d, const FactorOptions& options = {});

}  // namespace lacfact

#endif

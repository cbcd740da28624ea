#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lacfact/bounds.hpp"
#include "lacfact/engine.hpp"
#include "lacfact/json_io.hpp"
#include "lacfact/parse.hpp"

namespace {

using namespace lacfact;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDenseLimit = 3;
constexpr int kExitConfig = 4;

struct Common {
  std::string input = "-";
  std::string format = "text";
  unsigned long dense_limit = 2000;
  bool json = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("input", c.input, "Input file, or - for stdin")->capture_default_str();
  sub->add_option("--format", c.format, "Input format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--dense-limit", c.dense_limit,
                  "Largest exponent spread materialized in dense form")
      ->check(CLI::Range(1ul, std::numeric_limits<unsigned long>::max()))
      ->capture_default_str();
  sub->add_flag("--json", c.json, "Emit JSON on stdout");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SparsePoly read_poly(const Common& c) {
  std::string bytes = read_input(c.input);
  return c.format == "json" ? poly_from_json(bytes) : parse_poly_text(bytes);
}

BigNat parse_nat_arg(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw CLI::ValidationError(std::string(what) + " must be a decimal natural");
  return BigNat(s, 10);
}

BigInt parse_int_arg(const std::string& s, const char* what) {
  std::string body = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw CLI::ValidationError(std::string(what) + " must be a decimal integer");
  return BigInt(s, 10);
}

unsigned int env_threads() {
  const char* v = std::getenv("LACFACT_THREADS");
  if (!v) return 1;
  char* end = nullptr;
  unsigned long n = std::strtoul(v, &end, 10);
  if (end == v || *end != '\0' || n == 0) return 1;
  return static_cast<unsigned int>(n);
}

const char* class_name(FactorClass cls) {
  switch (cls) {
    case FactorClass::cyclotomic: return "cyclotomic";
    case FactorClass::binomial: return "binomial";
    default: return "general";
  }
}

void print_factor_text(const FactorOutput& out) {
  std::cout << "x_mult: " << out.x_multiplicity.get_str() << "\n";
  std::cout << "y_mult: " << out.y_multiplicity.get_str() << "\n";
  std::cout << "delta: " << out.parameters.delta.get_str() << "\n";
  std::cout << "heuristic: " << (out.heuristic ? "yes" : "no") << "\n";
  for (const auto& entry : out.factors)
    std::cout << "factor: " << format_poly_text(to_sparse(entry.poly))
              << " | mult: " << entry.multiplicity << " | class: " << class_name(entry.cls)
              << "\n";
  for (const auto& marker : out.untested) std::cout << "untested: " << marker << "\n";
}

int run_factor(const Common& c, unsigned long d, const std::string& heuristic, bool strict) {
  SparsePoly f = read_poly(c);
  FactorOptions opt;
  opt.dense_limit = c.dense_limit;
  opt.threads = env_threads();
  if (!heuristic.empty()) {
    BigNat h = parse_nat_arg(heuristic, "--heuristic-delta");
    if (h < 1) throw CLI::ValidationError("--heuristic-delta must be at least 1");
    opt.heuristic_delta = h;
  }
  FactorOutput out = factor(f, d, opt);
  if (c.json)
    std::cout << to_json(out) << "\n";
  else
    print_factor_text(out);
  if (out.cross_check_mismatches != 0)
    std::cerr << "warning: " << out.cross_check_mismatches
              << " cross-check mismatch(es) between discovery paths\n";
  if (strict && !out.untested.empty()) {
    std::cerr << "error: " << out.untested.size()
              << " candidate(s) exceeded the dense limit and --strict is set\n";
    return kExitDenseLimit;
  }
  return kExitOk;
}

int run_binomial(const Common& c, unsigned long d, bool strict) {
  SparsePoly f = read_poly(c);
  BinomialSearchResult res = binomial_factor_search(f, d, c.dense_limit);
  if (c.json) {
    std::cout << to_json(res) << "\n";
  } else {
    for (const auto& bf : res.factors)
      std::cout << "factor: " << format_poly_text(to_sparse(bf.poly)) << " | mult: "
                << bf.multiplicity << " | class: " << (bf.cyclotomic ? "cyclotomic" : "binomial")
                << "\n";
    for (const auto& marker : res.untested) std::cout << "untested: " << marker << "\n";
  }
  if (strict && !res.untested.empty()) {
    std::cerr << "error: " << res.untested.size()
              << " candidate(s) exceeded the dense limit and --strict is set\n";
    return kExitDenseLimit;
  }
  return kExitOk;
}

int run_univariate(const Common& c, unsigned long d, bool strict) {
  SparsePoly f = read_poly(c);
  Var v;
  if (f.is_univariate_in(Var::x))
    v = Var::x;
  else if (f.is_univariate_in(Var::y))
    v = Var::y;
  else
    throw ParseError("input is not univariate");
  UnivariateFactorList list = find_low_degree_factors(f, v, d, c.dense_limit);
  if (c.json) {
    std::cout << to_json(list, v) << "\n";
  } else {
    std::cout << "z_mult: " << list.z_multiplicity.get_str() << "\n";
    for (const auto& uf : list.factors)
      std::cout << "factor: " << format_poly_text(to_sparse(uf.poly, v)) << " | mult: "
                << uf.multiplicity << " | cyclotomic: " << (uf.cyclotomic ? "yes" : "no") << "\n";
    for (const auto& marker : list.untested) std::cout << "untested: " << marker << "\n";
  }
  if (strict && !list.untested.empty()) {
    std::cerr << "error: " << list.untested.size()
              << " candidate(s) exceeded the dense limit and --strict is set\n";
    return kExitDenseLimit;
  }
  return kExitOk;
}

int run_decompose(const Common& c, unsigned long d, bool d_given, const std::string& heuristic) {
  SparsePoly f = read_poly(c);
  BigNat delta;
  if (!heuristic.empty()) {
    delta = parse_nat_arg(heuristic, "--heuristic-delta");
    if (delta < 1) throw CLI::ValidationError("--heuristic-delta must be at least 1");
  } else if (d_given) {
    delta = delta_rational(d, compute_c(f));
  } else {
    throw CLI::ValidationError("decompose needs --degree or --heuristic-delta");
  }
  GapDecomposition dec = decompose(f, delta, delta);
  if (c.json) {
    std::cout << to_json(dec) << "\n";
  } else {
    std::cout << "delta: " << delta.get_str() << "\n";
    for (const auto& piece : dec.pieces)
      std::cout << "piece: x^" << piece.gamma.get_str() << " y^" << piece.delta_off.get_str()
                << " * (" << format_poly_text(piece.piece) << ")\n";
  }
  return kExitOk;
}

int run_bounds(const Common& c, unsigned long n) {
  SparsePoly f = read_poly(c);
  BigNat degree = f.total_degree();
  if (degree < 1) degree = 1;
  BoundReport rep = bound_report(n, compute_c(f), degree);
  if (c.json) {
    std::cout << to_json(rep) << "\n";
  } else {
    std::cout << "n: " << rep.n << "\n";
    std::cout << "h1_upper: " << format_rat(rep.h1_upper) << "\n";
    std::cout << "degree: " << rep.degree.get_str() << "\n";
    std::cout << "bound_rational: " << format_rat(rep.bound_rational) << "\n";
    std::cout << "bound_absolute: " << format_rat(rep.bound_absolute) << "\n";
  }
  return kExitOk;
}

int run_test_linear(const Common& c, const std::vector<std::string>& abc, bool adaptive) {
  SparsePoly f = read_poly(c);
  LinearCandidate p =
      make_linear_candidate(parse_int_arg(abc[0], "candidate a"),
                            parse_int_arg(abc[1], "candidate b"),
                            parse_int_arg(abc[2], "candidate c"));
  BigNat delta;
  bool divides;
  if (adaptive) {
    delta = ceil_rat(compute_c(f) / adaptive_mu_lower(p));
    divides = test_linear_factor_adaptive(f, p, c.dense_limit);
  } else {
    delta = delta_rational(1, compute_c(f));
    divides = check_divides(f, linear_poly(p), delta, c.dense_limit);
  }
  if (c.json) {
    std::cout << "{\"divides\":" << (divides ? "true" : "false") << ",\"delta\":\""
              << delta.get_str() << "\"}\n";
  } else {
    std::cout << "divides: " << (divides ? "yes" : "no") << "\n";
    std::cout << "delta: " << delta.get_str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factors of bounded degree for sparse polynomials over Q"};
  app.require_subcommand(1);

  unsigned long degree = 1;
  std::string heuristic;
  bool strict = false;
  bool adaptive = false;
  std::vector<std::string> candidate;

  Common c_factor, c_binomial, c_univariate, c_decompose, c_bounds, c_linear;

  CLI::App* factor_cmd = app.add_subcommand("factor", "All factors of degree <= d over Q");
  add_common(factor_cmd, c_factor);
  CLI::Option* factor_d = factor_cmd->add_option("-d,--degree", degree, "Degree bound")
                              ->check(CLI::Range(1ul, std::numeric_limits<unsigned long>::max()))
                              ->required();
  factor_cmd->add_option("--heuristic-delta", heuristic,
                         "Exploratory gap length (factors stay sound, list may be incomplete)");
  factor_cmd->add_flag("--strict", strict, "Exit 3 when any candidate went untested");

  CLI::App* binomial_cmd =
      app.add_subcommand("binomial", "Binomial-product and cyclotomic factors only");
  add_common(binomial_cmd, c_binomial);
  binomial_cmd->add_option("-d,--degree", degree, "Degree bound")
      ->check(CLI::Range(1ul, std::numeric_limits<unsigned long>::max()))
      ->required();
  binomial_cmd->add_flag("--strict", strict, "Exit 3 when any candidate went untested");

  CLI::App* univariate_cmd =
      app.add_subcommand("univariate", "Factors of a univariate sparse polynomial");
  add_common(univariate_cmd, c_univariate);
  univariate_cmd->add_option("-d,--degree", degree, "Degree bound")
      ->check(CLI::Range(1ul, std::numeric_limits<unsigned long>::max()))
      ->required();
  univariate_cmd->add_flag("--strict", strict, "Exit 3 when any candidate went untested");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Show the gap decomposition");
  add_common(decompose_cmd, c_decompose);
  CLI::Option* decompose_d =
      decompose_cmd->add_option("-d,--degree", degree, "Degree bound for the certified gap")
          ->check(CLI::Range(1ul, std::numeric_limits<unsigned long>::max()));
  decompose_cmd->add_option("--heuristic-delta", heuristic, "Gap length override");

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Factor-count bounds for the input polynomial");
  add_common(bounds_cmd, c_bounds);
  bounds_cmd->add_option("-d,--degree", degree, "Degree bound n on the factors counted")
      ->check(CLI::Range(1ul, std::numeric_limits<unsigned long>::max()))
      ->required();

  CLI::App* linear_cmd =
      app.add_subcommand("test-linear", "Test one integer linear candidate a*x + b*y + c");
  add_common(linear_cmd, c_linear);
  linear_cmd->add_option("--candidate", candidate, "Coefficients a b c")
      ->expected(3)
      ->required();
  linear_cmd->add_flag("--adaptive", adaptive,
                       "Use the candidate-specific gap instead of the general one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(factor_cmd)) {
      (void)factor_d;
      return run_factor(c_factor, degree, heuristic, strict);
    }
    if (app.got_subcommand(binomial_cmd)) return run_binomial(c_binomial, degree, strict);
    if (app.got_subcommand(univariate_cmd)) return run_univariate(c_univariate, degree, strict);
    if (app.got_subcommand(decompose_cmd))
      return run_decompose(c_decompose, degree, decompose_d->count() > 0, heuristic);
    if (app.got_subcommand(bounds_cmd)) return run_bounds(c_bounds, degree);
    if (app.got_subcommand(linear_cmd)) return run_test_linear(c_linear, candidate, adaptive);
    return kExitConfig;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ZeroPolynomialError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DenseLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDenseLimit;
  } catch (const InvalidCandidateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

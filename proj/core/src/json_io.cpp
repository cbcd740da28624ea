#include <json.hpp>

#include "lacfact/json_io.hpp"
#include "lacfact/parse.hpp"

namespace lacfact {

namespace {

using Json = nlohmann::ordered_json;

Json poly_terms(const SparsePoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json term;
    term["c"] = format_rat(t.coeff);
    term["ex"] = t.ex.get_str();
    term["ey"] = t.ey.get_str();
    terms.push_back(std::move(term));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json poly_terms(const DensePoly2& p) { return poly_terms(to_sparse(p)); }

Json poly_terms(const DensePoly1& p, Var v) { return poly_terms(to_sparse(p, v)); }

BigNat nat_from_json(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string(what) + " is not a decimal natural: \"" + s + "\"");
  return BigNat(s, 10);
}

SparsePoly poly_from_parsed(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON must be an object with a \"terms\" array");
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("c") || !t.contains("ex") || !t.contains("ey"))
      throw ParseError("each term needs \"c\", \"ex\" and \"ey\"");
    if (!t["c"].is_string()) throw ParseError("coefficient must be a decimal string");
    terms.push_back({parse_rat(t["c"].get_ref<const std::string&>()),
                     nat_from_json(t["ex"], "exponent"), nat_from_json(t["ey"], "exponent")});
  }
  return SparsePoly::from_terms(std::move(terms));
}

Json class_name(FactorClass cls) {
  switch (cls) {
    case FactorClass::cyclotomic: return "cyclotomic";
    case FactorClass::binomial: return "binomial";
    default: return "general";
  }
}

}  // namespace

std::string poly_to_json(const SparsePoly& f) { return poly_terms(f).dump(); }

SparsePoly poly_from_json(std::string_view s) {
  Json j = Json::parse(s, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return poly_from_parsed(j);
}

SparsePoly parse_poly_any(std::string_view s) {
  auto pos = s.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && s[pos] == '{') return poly_from_json(s);
  return parse_poly_text(s);
}

std::string to_json(const FactorOutput& out) {
  Json j;
  j["x_mult"] = out.x_multiplicity.get_str();
  j["y_mult"] = out.y_multiplicity.get_str();
  Json factors = Json::array();
  for (const auto& entry : out.factors) {
    Json fj;
    fj["poly"] = poly_terms(entry.poly)["terms"];
    fj["mult"] = entry.multiplicity;
    fj["class"] = class_name(entry.cls);
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  j["untested"] = out.untested;
  j["delta"] = out.parameters.delta.get_str();
  j["heuristic"] = out.heuristic;
  return j.dump();
}

std::string to_json(const GapDecomposition& dec) {
  Json j;
  j["delta_x"] = dec.delta_x.get_str();
  j["delta_y"] = dec.delta_y.get_str();
  Json pieces = Json::array();
  for (const auto& piece : dec.pieces) {
    Json pj;
    pj["gamma"] = piece.gamma.get_str();
    pj["delta_off"] = piece.delta_off.get_str();
    pj["poly"] = poly_terms(piece.piece)["terms"];
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  return j.dump();
}

std::string to_json(const UnivariateFactorList& list, Var v) {
  Json j;
  j["z_mult"] = list.z_multiplicity.get_str();
  Json factors = Json::array();
  for (const auto& uf : list.factors) {
    Json fj;
    fj["poly"] = poly_terms(uf.poly, v)["terms"];
    fj["mult"] = uf.multiplicity;
    fj["cyclotomic"] = uf.cyclotomic;
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  j["untested"] = list.untested;
  return j.dump();
}

std::string to_json(const BinomialSearchResult& res) {
  Json j;
  Json factors = Json::array();
  for (const auto& bf : res.factors) {
    Json fj;
    fj["poly"] = poly_terms(bf.poly)["terms"];
    fj["mult"] = bf.multiplicity;
    fj["class"] = bf.cyclotomic ? "cyclotomic" : "binomial";
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  j["untested"] = res.untested;
  return j.dump();
}

std::string to_json(const BoundReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["h1_upper"] = format_rat(rep.h1_upper);
  j["degree"] = rep.degree.get_str();
  j["bound_rational"] = format_rat(rep.bound_rational);
  j["bound_absolute"] = format_rat(rep.bound_absolute);
  return j.dump();
}

}  // namespace lacfact

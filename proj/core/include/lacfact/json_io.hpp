#ifndef LACFACT_JSON_IO_HPP
#define LACFACT_JSON_IO_HPP

#include <string>
#include <string_view>

#include "lacfact/binomial.hpp"
#include "lacfact/bounds.hpp"
#include "lacfact/engine.hpp"
#include "lacfact/gap.hpp"
#include "lacfact/univariate.hpp"

namespace lacfact {

// Compact single-line JSON; all big numbers are decimal strings ("m" or
// "m/n" for rationals), machine naturals are plain JSON numbers. Output is
// byte-deterministic.

// {"terms":[{"c":"3","ex":"12345678901234567890","ey":"0"},...]}
std::string poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(std::string_view s);  // throws ParseError

// Text grammar or the JSON form above, sniffed on the first non-space byte.
SparsePoly parse_poly_any(std::string_view s);

std::string to_json(const FactorOutput& out);
std::string to_json(const GapDecomposition& dec);
std::string to_json(const UnivariateFactorList& list, Var v);
std::string to_json(const BinomialSearchResult& res);
std::string to_json(const BoundReport& rep);

}  // namespace lacfact

#endif

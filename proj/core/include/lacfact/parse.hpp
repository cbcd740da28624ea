#ifndef LACFACT_PARSE_HPP
#define LACFACT_PARSE_HPP

#include <string>
#include <string_view>

#include "lacfact/sparse_poly.hpp"

namespace lacfact {

// Text form: terms joined by + or -, each term an optional rational
// coefficient (INT or INT/NAT) and optional x/y powers, '*' separators
// optional, exponents unbounded decimal naturals, whitespace insignificant.
// Example: 3*x^12345678901234567890*y^7 - 5/2
SparsePoly parse_poly_text(std::string_view s);

// Canonical rendering: terms in canonical order, explicit '*' between
// factors, '^' only for exponents > 1. Parses back to the same polynomial.
std::string format_poly_text(const SparsePoly& f);

std::string format_rat(const BigRat& q);  // "m" or "m/n"
BigRat parse_rat(std::string_view s);

}  // namespace lacfact

#endif

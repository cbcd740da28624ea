#include "lacfact/parse.hpp"

#include <cctype>

namespace lacfact {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos));
  }
  BigNat natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return BigNat(std::string(s.substr(start, pos - start)), 10);
  }
};

// [coeff] [* ] [x[^N]] [* ] [y[^N]]; at least one of the pieces must appear.
Term parse_term(Cursor& cur, int sign) {
  Term t{BigRat(sign), BigNat(0), BigNat(0)};
  bool saw_anything = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    BigNat num = cur.natural();
    BigNat den = 1;
    if (cur.accept('/')) {
      den = cur.natural();
      if (sgn(den) == 0) cur.fail("zero denominator");
    }
    t.coeff *= make_rat(num, den);
    saw_anything = true;
  }
  bool saw_x = false, saw_y = false;
  for (;;) {
    std::size_t mark = cur.pos;
    bool star = cur.accept('*');
    char v = cur.peek();
    if (v != 'x' && v != 'y') {
      if (star) cur.fail("dangling '*'");
      cur.pos = mark;
      break;
    }
    ++cur.pos;
    BigNat e = 1;
    if (cur.accept('^')) e = cur.natural();
    if (v == 'x') {
      if (saw_x) cur.fail("repeated variable x");
      saw_x = true;
      t.ex = std::move(e);
    } else {
      if (saw_y) cur.fail("repeated variable y");
      saw_y = true;
      t.ey = std::move(e);
    }
    saw_anything = true;
  }
  if (!saw_anything) cur.fail("expected a term");
  return t;
}

}  // namespace

SparsePoly parse_poly_text(std::string_view s) {
  Cursor cur{s};
  if (cur.done()) throw ParseError("empty input");
  std::vector<Term> raw;
  int sign = 1;
  if (cur.accept('-'))
    sign = -1;
  else
    cur.accept('+');
  raw.push_back(parse_term(cur, sign));
  while (!cur.done()) {
    if (cur.accept('+'))
      sign = 1;
    else if (cur.accept('-'))
      sign = -1;
    else
      cur.fail("expected '+' or '-'");
    raw.push_back(parse_term(cur, sign));
  }
  return SparsePoly::from_terms(std::move(raw));
}

std::string format_rat(const BigRat& q) {
  std::string out = q.get_num().get_str();
  if (cmp(q.get_den(), 1) != 0) out += "/" + q.get_den().get_str();
  return out;
}

BigRat parse_rat(std::string_view s) {
  Cursor cur{s};
  int sign = 1;
  if (cur.accept('-'))
    sign = -1;
  else
    cur.accept('+');
  BigNat num = cur.natural();
  BigNat den = 1;
  if (cur.accept('/')) {
    den = cur.natural();
    if (sgn(den) == 0) cur.fail("zero denominator");
  }
  if (!cur.done()) cur.fail("trailing input");
  return BigRat(sign) * make_rat(num, den);
}

std::string format_poly_text(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    BigRat mag = abs(t.coeff);
    bool has_var = sgn(t.ex) != 0 || sgn(t.ey) != 0;
    std::string vars;
    if (sgn(t.ex) != 0) {
      vars += "x";
      if (cmp(t.ex, 1) != 0) vars += "^" + t.ex.get_str();
    }
    if (sgn(t.ey) != 0) {
      if (!vars.empty()) vars += "*";
      vars += "y";
      if (cmp(t.ey, 1) != 0) vars += "^" + t.ey.get_str();
    }
    if (!has_var) {
      out += format_rat(mag);
    } else if (cmp(mag, 1) == 0) {
      out += vars;
    } else {
      out += format_rat(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace lacfact

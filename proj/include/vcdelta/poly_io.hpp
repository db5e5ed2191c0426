#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "multilinear.hpp"

namespace vcdelta {

struct PolyParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial text format: terms joined by '+', each term a '*'-separated
// product of variables x<i> (and y<i> for pair polynomials), or the
// constant "1". "0" denotes the zero polynomial. Whitespace around tokens
// is ignored; repeated terms cancel mod 2.

namespace detail {

inline std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// one product term -> (x-mask, y-mask)
inline PairTerm parse_term(std::string_view term, int n, bool allow_y) {
  PairTerm out;
  std::size_t start = 0;
  while (start <= term.size()) {
    std::size_t star = term.find('*', start);
    if (star == std::string_view::npos) star = term.size();
    const std::string_view tok = trim_ws(term.substr(start, star - start));
    if (tok.empty())
      throw PolyParseError("empty factor in term '" + std::string(term) + "'");
    if (tok == "1") {
      // multiplicative identity, allowed anywhere
    } else if (tok[0] == 'x' || tok[0] == 'y') {
      if (tok[0] == 'y' && !allow_y)
        throw PolyParseError("y-variables not allowed here: '" +
                             std::string(tok) + "'");
      int idx = 0;
      const char* first = tok.data() + 1;
      const char* last = tok.data() + tok.size();
      auto [p, ec] = std::from_chars(first, last, idx);
      if (ec != std::errc{} || p != last || idx < 1 || idx > n)
        throw PolyParseError("bad variable '" + std::string(tok) +
                             "' (want index in [1," + std::to_string(n) + "])");
      if (tok[0] == 'x')
        out.x |= element_bit(idx);
      else
        out.y |= element_bit(idx);
    } else {
      throw PolyParseError("bad factor '" + std::string(tok) + "'");
    }
    start = star + 1;
    if (star == term.size()) break;
  }
  return out;
}

}  // namespace detail

inline PairPoly parse_pair_poly(std::string_view text, int n) {
  if (n < 1 || n > kMaxGroundSet)
    throw PolyParseError("bad variable count");
  std::vector<PairTerm> terms;
  std::size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    const std::string_view term = detail::trim_ws(text.substr(start, plus - start));
    if (term.empty())
      throw PolyParseError("empty term");
    any = true;
    if (term != "0") terms.push_back(detail::parse_term(term, n, true));
    start = plus + 1;
    if (plus == text.size()) break;
  }
  if (!any) throw PolyParseError("empty polynomial text");
  return make_pair_poly(n, std::move(terms));
}

inline MlPoly parse_ml_poly(std::string_view text, int n_vars) {
  if (n_vars < 1 || n_vars > kMaxGroundSet)
    throw PolyParseError("bad variable count");
  std::size_t start = 0;
  bool any = false;
  std::vector<Mask> terms;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string_view::npos) plus = text.size();
    const std::string_view term = detail::trim_ws(text.substr(start, plus - start));
    if (term.empty()) throw PolyParseError("empty term");
    any = true;
    if (term != "0")
      terms.push_back(detail::parse_term(term, n_vars, false).x);
    start = plus + 1;
    if (plus == text.size()) break;
  }
  if (!any) throw PolyParseError("empty polynomial text");
  return make_ml_poly(n_vars, std::move(terms));
}

inline std::string format_monomial(Mask x, Mask y = 0) {
  if (x == 0 && y == 0) return "1";
  std::string out;
  for (int e : elements(x)) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(e);
  }
  for (int e : elements(y)) {
    if (!out.empty()) out += '*';
    out += 'y';
    out += std::to_string(e);
  }
  return out;
}

inline std::string format_poly(const MlPoly& p) {
  if (p.support.empty()) return "0";
  std::string out;
  for (Mask m : p.support) {
    if (!out.empty()) out += " + ";
    out += format_monomial(m);
  }
  return out;
}

inline std::string format_poly(const PairPoly& p) {
  if (p.support.empty()) return "0";
  std::string out;
  for (const PairTerm& t : p.support) {
    if (!out.empty()) out += " + ";
    out += format_monomial(t.x, t.y);
  }
  return out;
}

inline MlPoly load_ml_poly(const std::string& path, int n_vars) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ml_poly(buf.str(), n_vars);
}

}  // namespace vcdelta

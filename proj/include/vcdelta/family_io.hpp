#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "set_family.hpp"

namespace vcdelta {

struct FamilyParseError : std::runtime_error {
  int line;
  FamilyParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool parse_int(std::string_view s, int& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && p == last;
}

}  // namespace detail

// Family file format: '#' starts a comment, blank lines are skipped. The
// first significant line must be "n=<integer>". Every further significant
// line is one set: comma-separated 1-based elements, the word "empty", or
// an n-character 0/1 string whose leftmost character is element 1.
inline SetFamily parse_family(std::string_view text) {
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<Mask> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = detail::trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (!have_n) {
      if (!line.starts_with("n="))
        throw FamilyParseError(line_no, "expected header n=<integer>");
      if (!detail::parse_int(detail::trim(line.substr(2)), n) || n < 1 ||
          n > kMaxGroundSet)
        throw FamilyParseError(line_no,
                               "ground set size must be an integer in [1,64]");
      have_n = true;
      continue;
    }

    if (line == "empty") {
      members.push_back(0);
      continue;
    }
    const bool looks_binary =
        static_cast<int>(line.size()) == n &&
        line.find_first_not_of("01") == std::string_view::npos;
    if (looks_binary) {
      Mask m = 0;
      for (int i = 0; i < n; ++i)
        if (line[static_cast<std::size_t>(i)] == '1') m |= element_bit(i + 1);
      members.push_back(m);
      continue;
    }
    Mask m = 0;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos) comma = line.size();
      const std::string_view tok = detail::trim(line.substr(start, comma - start));
      int e = 0;
      if (!detail::parse_int(tok, e))
        throw FamilyParseError(line_no, "bad element '" + std::string(tok) + "'");
      if (e < 1 || e > n)
        throw FamilyParseError(line_no, "element " + std::to_string(e) +
                                            " outside [1," + std::to_string(n) + "]");
      m |= element_bit(e);
      start = comma + 1;
      if (comma == line.size()) break;
    }
    members.push_back(m);
  }
  if (!have_n) throw FamilyParseError(line_no, "missing n=<integer> header");
  return SetFamily(n, std::move(members));
}

inline SetFamily load_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

// canonical set rendering: "empty" or comma-separated ascending elements
inline std::string format_set(Mask m) {
  if (m == 0) return "empty";
  std::string out;
  for (int e : elements(m)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

inline std::string format_family(const SetFamily& f) {
  std::string out = "n=" + std::to_string(f.n) + "\n";
  for (Mask m : f.members) {
    out += format_set(m);
    out += '\n';
  }
  return out;
}

inline void save_family(const SetFamily& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write family file: " + path);
  out << format_family(f);
}

}  // namespace vcdelta

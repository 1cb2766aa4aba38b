#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cucalc/errors.hpp"
#include "cucalc/rational.hpp"
#include "cucalc/scalars.hpp"

namespace cucalc::parse_util {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool consume_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

inline long long parse_ll(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("expected an integer");
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) throw ParseError("expected an integer, got '-'");
  long long v = 0;
  bool neg = i == 1;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("invalid integer '" + std::string(s) + "'");
    if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[i] - '0', &v))
      throw ParseError("integer out of range '" + std::string(s) + "'");
  }
  return neg ? -v : v;
}

inline Rational parse_rational(std::string_view s) {
  s = trim(s);
  size_t slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(parse_ll(s));
    return Rational(parse_ll(s.substr(0, slash)), parse_ll(s.substr(slash + 1)));
  } catch (const DomainError& e) {
    // Zero denominators and the like are malformed literals, not domain faults.
    throw ParseError("bad rational '" + std::string(s) + "': " + e.what());
  }
}

inline ExtNat parse_extnat(std::string_view s) {
  s = trim(s);
  if (s == "inf") return ExtNat::infinity();
  long long v = parse_ll(s);
  if (v < 0) throw ParseError("extended natural must be nonnegative");
  return ExtNat(v);
}

inline ExtRat parse_extrat(std::string_view s) {
  s = trim(s);
  if (s == "inf") return ExtRat::infinity();
  Rational q = parse_rational(s);
  if (q.is_negative()) throw ParseError("extended rational must be nonnegative");
  return ExtRat(q);
}

// Split on `sep` at nesting depth zero with respect to (), {} and [].
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

}  // namespace cucalc::parse_util

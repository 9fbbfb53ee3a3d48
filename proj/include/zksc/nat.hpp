#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace zksc {

// Arbitrary-precision natural number. All language-level integers are
// non-negative; subtraction that would go below zero is a runtime failure
// for unbounded uint and wraps modularly for uint[N].
using Nat = boost::multiprecision::cpp_int;

inline Nat mod_reduce(const Nat& v, const Nat& modulus) { return v % modulus; }

inline std::string nat_to_string(const Nat& v) { return v.str(); }

// Parses a decimal natural. Returns nullopt on anything else (sign, empty,
// non-digits).
inline std::optional<Nat> nat_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char c : s)
    if (c < '0' || c > '9') return std::nullopt;
  return Nat(s);
}

}  // namespace zksc

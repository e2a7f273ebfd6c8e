#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>

#include "ivtnet/errors.hpp"

namespace ivtnet {

// Unbounded non-negative integer. Pre-image chains grow addresses by a
// factor of p^{|N|+1} per phase, so fixed-width words overflow quickly for
// deep designs. All library entry points treat Nat as >= 0.
using Nat = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Nat& x) { return x.str(); }

// Strict decimal parser for CLI and file input. No sign, no whitespace.
inline Nat from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal number");
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError(std::string("invalid decimal digit '") + c + "' in \"" +
                       std::string(text) + "\"");
  }
  return Nat(std::string(text));
}

inline Nat nat_pow(unsigned base, std::size_t exp) {
  Nat result = 1;
  Nat b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp > 0) b *= b;
  }
  return result;
}

}  // namespace ivtnet

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivtnet/errors.hpp"
#include "ivtnet/nat.hpp"
#include "ivtnet/padic.hpp"
#include "ivtnet/rules.hpp"

namespace ivtnet {

// The transformation acts on the CANONICAL digit string only: leading zeros
// produced by the digit map are dropped before the next step and are never
// mapped again. Two consequences worth keeping in mind:
//   - the map is non-injective on integers even when the digit map is a
//     permutation (a shed leading digit collapses distinct inputs), and
//   - 0, the empty digit string, is a fixed point of every rule regardless
//     of f(0); it is the attractor the routing protocol sends traffic to.

namespace detail {

inline void map_digits(const RuleTable& rule, DigitString& d) {
  for (auto& digit : d.digits) digit = rule.f(digit);
  d.canonicalize();
}

}  // namespace detail

inline Nat apply(const RuleTable& rule, const Nat& x) {
  DigitString d = to_digits(x, rule.radix);
  detail::map_digits(rule, d);
  return from_digits(d);
}

inline Nat iterate_k(const RuleTable& rule, const Nat& x, std::size_t k) {
  DigitString d = to_digits(x, rule.radix);
  for (std::size_t i = 0; i < k && !d.empty(); ++i) detail::map_digits(rule, d);
  return from_digits(d);
}

// Value sequence from x down to the attractor 0.
struct Trajectory {
  RuleTable rule;
  std::vector<Nat> values;  // starts at x, ends at 0, no interior 0

  std::size_t hops() const { return values.size() - 1; }
};

// Upper bound on the trajectory length of any Collatz-like rule: each shed
// of the leading digit takes at most p-1 steps and there are at most |x|
// sheds, so exceeding p*|x| certifies non-Collatz behaviour.
inline std::size_t default_step_cap(const RuleTable& rule, const Nat& x) {
  return static_cast<std::size_t>(rule.p()) * digit_count(x, rule.radix);
}

inline Trajectory trajectory(const RuleTable& rule, const Nat& x,
                             std::optional<std::size_t> step_cap = std::nullopt) {
  const std::size_t cap = step_cap.value_or(default_step_cap(rule, x));
  Trajectory out{rule, {x}};
  DigitString d = to_digits(x, rule.radix);
  std::size_t steps = 0;
  while (!d.empty()) {
    if (steps == cap)
      throw NonConvergentError("trajectory of " + to_decimal(x) + " under rule " +
                               to_decimal(rule.index) + " did not reach 0 within " +
                               std::to_string(cap) + " steps");
    detail::map_digits(rule, d);
    out.values.push_back(from_digits(d));
    ++steps;
  }
  return out;
}

// Forward orbit of a single digit under the digit map, up to the first
// repeat: [d, f(d), f^2(d), ...].
inline std::vector<std::uint8_t> digit_orbit(const RuleTable& rule, int d) {
  const int p = rule.p();
  if (d < 0 || d >= p)
    throw DigitRangeError("digit " + std::to_string(d) + " out of range for radix " +
                          std::to_string(p));
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  std::vector<std::uint8_t> orbit;
  std::uint8_t cur = static_cast<std::uint8_t>(d);
  while (!seen[cur]) {
    seen[cur] = true;
    orbit.push_back(cur);
    cur = rule.f(cur);
  }
  return orbit;
}

}  // namespace ivtnet

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivtnet/errors.hpp"
#include "ivtnet/ivt.hpp"
#include "ivtnet/nat.hpp"
#include "ivtnet/padic.hpp"
#include "ivtnet/rules.hpp"

namespace ivtnet {

// The constructed p-th pre-image of n: iterating the rule p times on a
// yields n again, and a > n. Which of the two digit constructions applies
// depends on whether f(0) equals the most significant digit of n.
struct PreimageResult {
  Nat n;
  Nat a;
  int case_tag = 0;  // 1 or 2
  int gamma = 0;     // prepended digit, in [1, p-1]
  int alpha = 0;     // most significant digit of n

  bool operator==(const PreimageResult& o) const {
    return n == o.n && a == o.a && case_tag == o.case_tag && gamma == o.gamma && alpha == o.alpha;
  }
};

namespace detail {

inline int inverse_digit(const RuleTable& rule, std::uint8_t target) {
  for (int d = 0; d < rule.p(); ++d)
    if (rule.map[static_cast<std::size_t>(d)] == target) return d;
  return -1;  // unreachable for bijective maps
}

inline void require_bijective_collatz(const RuleTable& rule) {
  if (!classify(rule).bijective_collatz)
    throw NotCollatzBijectiveError("rule " + to_decimal(rule.index) +
                                   " is not bijective Collatz-like");
}

}  // namespace detail

// Canonical p-th pre-image construction. With alpha the MSD of n:
//   case 1 (f(0) = alpha): gamma = f^-1(0), a has digits (gamma 0 n...),
//     i.e. a = n + gamma * p^(|n|+1). The buffer 0 keeps alpha from being
//     shed before the prepended digits have cycled away.
//   case 2 (otherwise):     gamma = f^-1(alpha), a has digits (gamma n...),
//     i.e. a = n + gamma * p^|n|.
// gamma is forced in both cases; it is never a free choice.
inline PreimageResult phi(const RuleTable& rule, const Nat& n) {
  detail::require_bijective_collatz(rule);
  if (n == 0)
    throw NoPreimageOfZeroError("0 has no most significant digit; root nodes are chosen by "
                                "the topology designer instead");

  DigitString digits = to_digits(n, rule.radix);
  const int alpha = digits.digits.back();

  PreimageResult out;
  out.n = n;
  out.alpha = alpha;
  if (rule.f(0) == alpha) {
    out.case_tag = 1;
    out.gamma = detail::inverse_digit(rule, 0);
    digits.digits.push_back(0);
    digits.digits.push_back(static_cast<std::uint8_t>(out.gamma));
  } else {
    out.case_tag = 2;
    out.gamma = detail::inverse_digit(rule, static_cast<std::uint8_t>(alpha));
    digits.digits.push_back(static_cast<std::uint8_t>(out.gamma));
  }
  out.a = from_digits(digits);
  return out;
}

// Chain of k successive pre-images: [phi(n), phi(phi(n)), ...]; the last
// element is k*p hops upstream of n.
inline std::vector<PreimageResult> phi_k(const RuleTable& rule, const Nat& n, std::size_t k) {
  std::vector<PreimageResult> chain;
  chain.reserve(k);
  Nat cur = n;
  for (std::size_t i = 0; i < k; ++i) {
    chain.push_back(phi(rule, cur));
    cur = chain.back().a;
  }
  return chain;
}

inline bool verify_phi(const RuleTable& rule, const PreimageResult& result) {
  return result.a > result.n &&
         iterate_k(rule, result.a, static_cast<std::size_t>(rule.p())) == result.n;
}

}  // namespace ivtnet

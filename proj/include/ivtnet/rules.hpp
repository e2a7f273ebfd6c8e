#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivtnet/errors.hpp"
#include "ivtnet/nat.hpp"
#include "ivtnet/padic.hpp"

namespace ivtnet {

// One transformation rule of radix p: the digit map f where f(i) = map[i].
// The rule index is the base-p encoding of the map, f(i) at weight p^i, so
// indices run over [0, p^p).
struct RuleTable {
  Radix radix;
  Nat index;
  std::vector<std::uint8_t> map;

  int p() const { return radix.value(); }
  std::uint8_t f(std::uint8_t digit) const { return map[digit]; }

  bool operator==(const RuleTable& o) const {
    return radix == o.radix && index == o.index && map == o.map;
  }
};

struct RuleClass {
  bool bijective = false;        // map is a permutation
  bool collatz_like = false;     // every digit's forward orbit reaches 0
  bool bijective_collatz = false;  // both, i.e. the map is a single p-cycle
};

enum class RuleFilter {
  all,
  bijective,
  collatz_like,
  bijective_collatz,
  bijective_non_collatz,
};

struct CensusCounts {
  std::uint64_t total = 0;
  std::uint64_t bijective = 0;
  std::uint64_t collatz_like = 0;
  std::uint64_t bijective_collatz = 0;
  std::uint64_t bijective_non_collatz = 0;
};

// Exhaustive operations enumerate all p^p maps; beyond this radix they refuse.
inline constexpr int kMaxCensusRadix = 6;

inline RuleTable decode_rule(const Nat& index, Radix radix) {
  const int p = radix.value();
  if (index < 0 || index >= nat_pow(static_cast<unsigned>(p), static_cast<std::size_t>(p)))
    throw RuleRangeError("rule index " + to_decimal(index) + " out of range for radix " +
                         std::to_string(p));
  std::vector<std::uint8_t> map(static_cast<std::size_t>(p), 0);
  Nat rest = index;
  const Nat base = p;
  Nat q, r;
  for (int i = 0; i < p && rest != 0; ++i) {
    boost::multiprecision::divide_qr(rest, base, q, r);
    map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r.convert_to<unsigned>());
    rest = q;
  }
  return RuleTable{radix, index, std::move(map)};
}

inline Nat encode_rule(const std::vector<std::uint8_t>& map, Radix radix) {
  const int p = radix.value();
  if (map.size() != static_cast<std::size_t>(p))
    throw RuleRangeError("digit map must have exactly " + std::to_string(p) + " entries, got " +
                         std::to_string(map.size()));
  Nat index = 0;
  for (std::size_t i = map.size(); i-- > 0;) {
    if (map[i] >= p)
      throw DigitRangeError("map entry " + std::to_string(map[i]) + " out of range for radix " +
                            std::to_string(p));
    index = index * p + map[i];
  }
  return index;
}

inline RuleTable make_rule(const std::vector<std::uint8_t>& map, Radix radix) {
  return RuleTable{radix, encode_rule(map, radix), map};
}

inline RuleClass classify(const RuleTable& rule) {
  const int p = rule.p();
  RuleClass out;

  std::vector<bool> hit(static_cast<std::size_t>(p), false);
  bool permutation = true;
  for (std::uint8_t target : rule.map) {
    if (hit[target]) permutation = false;
    hit[target] = true;
  }
  out.bijective = permutation;

  // A nonzero digit whose orbit contains 0 reaches it within p-1 steps, so
  // the scan below is exact.
  bool collatz = true;
  for (int d = 1; d < p && collatz; ++d) {
    std::uint8_t cur = static_cast<std::uint8_t>(d);
    bool reached = false;
    for (int step = 0; step < p - 1; ++step) {
      cur = rule.f(cur);
      if (cur == 0) {
        reached = true;
        break;
      }
    }
    collatz = reached;
  }
  out.collatz_like = collatz;
  out.bijective_collatz = out.bijective && out.collatz_like;
  return out;
}

namespace detail {

inline bool matches(const RuleClass& c, RuleFilter filter) {
  switch (filter) {
    case RuleFilter::all: return true;
    case RuleFilter::bijective: return c.bijective;
    case RuleFilter::collatz_like: return c.collatz_like;
    case RuleFilter::bijective_collatz: return c.bijective_collatz;
    case RuleFilter::bijective_non_collatz: return c.bijective && !c.collatz_like;
  }
  return false;
}

inline void require_census_radix(Radix radix) {
  if (radix.value() > kMaxCensusRadix)
    throw CensusRangeError("exhaustive rule enumeration supports radix <= " +
                           std::to_string(kMaxCensusRadix) + ", got " +
                           std::to_string(radix.value()));
}

// Walks all p^p maps in ascending index order without big-integer division.
template <typename Fn>
inline void for_each_rule(Radix radix, Fn&& fn) {
  const int p = radix.value();
  std::vector<std::uint8_t> map(static_cast<std::size_t>(p), 0);
  std::uint64_t index = 0;
  while (true) {
    fn(index, map);
    std::size_t pos = 0;
    while (pos < map.size() && map[pos] == p - 1) map[pos++] = 0;
    if (pos == map.size()) break;
    ++map[pos];
    ++index;
  }
}

}  // namespace detail

inline CensusCounts census(Radix radix) {
  detail::require_census_radix(radix);
  CensusCounts counts;
  detail::for_each_rule(radix, [&](std::uint64_t, const std::vector<std::uint8_t>& map) {
    const RuleClass c = classify(RuleTable{radix, 0, map});
    ++counts.total;
    if (c.bijective) ++counts.bijective;
    if (c.collatz_like) ++counts.collatz_like;
    if (c.bijective_collatz) ++counts.bijective_collatz;
    if (c.bijective && !c.collatz_like) ++counts.bijective_non_collatz;
  });
  return counts;
}

inline std::vector<Nat> enumerate_class(Radix radix, RuleFilter filter) {
  detail::require_census_radix(radix);
  std::vector<Nat> indices;
  detail::for_each_rule(radix, [&](std::uint64_t index, const std::vector<std::uint8_t>& map) {
    if (detail::matches(classify(RuleTable{radix, 0, map}), filter)) indices.emplace_back(index);
  });
  return indices;
}

// The cycle through every digit starting at 0: [0, f(0), ..., f^{p-1}(0)].
// Defined for bijective Collatz-like rules only, where the map is one p-cycle.
inline std::vector<std::uint8_t> zero_cycle(const RuleTable& rule) {
  if (!classify(rule).bijective_collatz)
    throw NotCollatzBijectiveError("rule " + to_decimal(rule.index) +
                                   " is not bijective Collatz-like");
  std::vector<std::uint8_t> cycle;
  cycle.reserve(static_cast<std::size_t>(rule.p()));
  std::uint8_t cur = 0;
  for (int i = 0; i < rule.p(); ++i) {
    cycle.push_back(cur);
    cur = rule.f(cur);
  }
  return cycle;
}

}  // namespace ivtnet

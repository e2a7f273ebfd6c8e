#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ivtnet/errors.hpp"
#include "ivtnet/nat.hpp"

namespace ivtnet {

// Base of the positional number system. The math puts no upper bound on p;
// the cap keeps digit rendering single-character and rule enumeration sane.
class Radix {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 16;

  explicit Radix(int p) : p_(p) {
    if (p < kMin || p > kMax)
      throw RadixRangeError("radix must be in [" + std::to_string(kMin) + "," +
                            std::to_string(kMax) + "], got " + std::to_string(p));
  }

  int value() const { return p_; }

  friend bool operator==(Radix a, Radix b) { return a.p_ == b.p_; }
  friend bool operator!=(Radix a, Radix b) { return a.p_ != b.p_; }

 private:
  int p_;
};

// Base-p digit sequence of a non-negative integer. digits[i] carries weight
// p^i (little-endian storage). Canonical form has no zero at the highest
// index; the integer 0 is the empty sequence.
struct DigitString {
  Radix radix;
  std::vector<std::uint8_t> digits;

  bool empty() const { return digits.empty(); }
  std::size_t size() const { return digits.size(); }

  // Drops leading (highest-weight) zeros.
  void canonicalize() {
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
  }

  bool operator==(const DigitString& o) const {
    return radix == o.radix && digits == o.digits;
  }
};

inline DigitString to_digits(const Nat& x, Radix radix) {
  if (x < 0) throw DigitRangeError("to_digits requires a non-negative value");
  DigitString out{radix, {}};
  Nat rest = x;
  const Nat p = radix.value();
  Nat q, r;
  while (rest != 0) {
    boost::multiprecision::divide_qr(rest, p, q, r);
    out.digits.push_back(static_cast<std::uint8_t>(r.convert_to<unsigned>()));
    rest = q;
  }
  return out;
}

// Value of a digit sequence. Leading (highest-index) zeros are tolerated;
// digits outside [0, p-1] are not.
inline Nat from_digits(const DigitString& d) {
  const int p = d.radix.value();
  Nat value = 0;
  for (std::size_t i = d.digits.size(); i-- > 0;) {
    const std::uint8_t digit = d.digits[i];
    if (digit >= p)
      throw DigitRangeError("digit " + std::to_string(digit) +
                            " out of range for radix " + std::to_string(p));
    value = value * p + digit;
  }
  return value;
}

inline std::size_t digit_count(const Nat& x, Radix radix) {
  return to_digits(x, radix).size();
}

// Most significant digit; defined for x >= 1 only.
inline int msd(const Nat& x, Radix radix) {
  if (x == 0) throw NoMsdError("0 has no most significant digit");
  return to_digits(x, radix).digits.back();
}

namespace detail {

inline char digit_to_char(std::uint8_t d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + (d - 10));
}

inline int char_to_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace detail

// Big-endian text form; the empty sequence renders as "0".
inline std::string render(const DigitString& d) {
  if (d.empty()) return "0";
  std::string out;
  out.reserve(d.size());
  for (std::size_t i = d.digits.size(); i-- > 0;) out.push_back(detail::digit_to_char(d.digits[i]));
  return out;
}

// Parses a big-endian digit string (0-9, a-f). Leading zeros are accepted
// and normalized away, so parse(render(d)) == d for canonical d.
inline DigitString parse(std::string_view text, Radix radix) {
  if (text.empty()) throw ParseError("empty digit string");
  DigitString out{radix, {}};
  out.digits.reserve(text.size());
  for (std::size_t i = text.size(); i-- > 0;) {
    const int digit = detail::char_to_digit(text[i]);
    if (digit < 0)
      throw ParseError(std::string("invalid character '") + text[i] + "' in digit string");
    if (digit >= radix.value())
      throw ParseError("digit '" + std::string(1, text[i]) + "' out of range for radix " +
                       std::to_string(radix.value()));
    out.digits.push_back(static_cast<std::uint8_t>(digit));
  }
  out.canonicalize();
  return out;
}

inline std::string render_value(const Nat& x, Radix radix) {
  return render(to_digits(x, radix));
}

}  // namespace ivtnet

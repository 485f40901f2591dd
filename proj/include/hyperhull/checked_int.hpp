#pragma once

// 128-bit signed integer that throws instead of wrapping.  Used as the fast
// scalar for desk-scale walks; any overflow surfaces as hyperhull::Overflow so
// callers can retry with an arbitrary-precision type.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperhull/errors.hpp"

namespace hyperhull {

class CheckedInt128 {
 public:
  using native_type = __int128;

  constexpr CheckedInt128() = default;
  constexpr CheckedInt128(int v) : v_(v) {}
  constexpr CheckedInt128(long v) : v_(v) {}
  constexpr CheckedInt128(long long v) : v_(v) {}
  constexpr CheckedInt128(unsigned v) : v_(v) {}
  constexpr CheckedInt128(unsigned long v) : v_(v) {}
  constexpr CheckedInt128(unsigned long long v) : v_(v) {}

  static constexpr CheckedInt128 from_native(native_type v) {
    CheckedInt128 r;
    r.v_ = v;
    return r;
  }

  constexpr native_type native() const { return v_; }

  friend constexpr bool operator==(CheckedInt128, CheckedInt128) = default;
  friend constexpr std::strong_ordering operator<=>(CheckedInt128 a, CheckedInt128 b) {
    return a.v_ <=> b.v_;
  }

  CheckedInt128 operator-() const {
    if (v_ == kMin) throw Overflow("int128 negation overflow");
    return from_native(-v_);
  }
  CheckedInt128 operator+() const { return *this; }

  friend CheckedInt128 operator+(CheckedInt128 a, CheckedInt128 b) {
    native_type r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow("int128 addition overflow");
    return from_native(r);
  }
  friend CheckedInt128 operator-(CheckedInt128 a, CheckedInt128 b) {
    native_type r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow("int128 subtraction overflow");
    return from_native(r);
  }
  friend CheckedInt128 operator*(CheckedInt128 a, CheckedInt128 b) {
    native_type r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow("int128 multiplication overflow");
    return from_native(r);
  }
  // Truncating division, matching the built-in integer semantics.
  friend CheckedInt128 operator/(CheckedInt128 a, CheckedInt128 b) {
    if (b.v_ == 0) throw DivisionByZero("int128 division by zero");
    if (a.v_ == kMin && b.v_ == -1) throw Overflow("int128 division overflow");
    return from_native(a.v_ / b.v_);
  }
  friend CheckedInt128 operator%(CheckedInt128 a, CheckedInt128 b) {
    if (b.v_ == 0) throw DivisionByZero("int128 division by zero");
    if (b.v_ == -1) return CheckedInt128{};
    return from_native(a.v_ % b.v_);
  }

  CheckedInt128& operator+=(CheckedInt128 o) { return *this = *this + o; }
  CheckedInt128& operator-=(CheckedInt128 o) { return *this = *this - o; }
  CheckedInt128& operator*=(CheckedInt128 o) { return *this = *this * o; }
  CheckedInt128& operator/=(CheckedInt128 o) { return *this = *this / o; }
  CheckedInt128& operator%=(CheckedInt128 o) { return *this = *this % o; }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag != 0) {
      digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
      mag /= 10;
    }
    if (v_ < 0) digits.insert(digits.begin(), '-');
    return digits;
  }

  static CheckedInt128 parse(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw ParseError("integer has no digits");
    CheckedInt128 r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad digit in integer '" + std::string(s) + "'");
      const CheckedInt128 d(s[i] - '0');
      r = r * 10 + (neg ? -d : d);
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, CheckedInt128 v) { return os << v.str(); }

 private:
  static constexpr native_type kMin = static_cast<native_type>(static_cast<unsigned __int128>(1) << 127);
  native_type v_ = 0;
};

}  // namespace hyperhull

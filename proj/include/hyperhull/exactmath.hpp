#pragma once

// Exact integer kernel: floored division, integer square root, gcd/Bezout,
// and floors of the real roots of a quadratic.  Everything is templated on
// the integer type so the same code runs on CheckedInt128 (fast path) and on
// boost::multiprecision::cpp_int (unbounded).

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperhull/checked_int.hpp"
#include "hyperhull/errors.hpp"

namespace hyperhull {

// Expression templates off: every intermediate is a plain value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using FastInt = CheckedInt128;

template <class I>
concept ExactInteger = requires(I a, I b) {
  { a + b } -> std::convertible_to<I>;
  { a - b } -> std::convertible_to<I>;
  { a * b } -> std::convertible_to<I>;
  { a / b } -> std::convertible_to<I>;
  { a % b } -> std::convertible_to<I>;
  { -a } -> std::convertible_to<I>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  I(0);
};

// --- per-type plumbing -------------------------------------------------------

inline std::string to_string(const FastInt& v) { return v.str(); }
inline std::string to_string(const BigInt& v) { return v.str(); }

template <class I>
I parse_int(std::string_view s);

template <>
inline FastInt parse_int<FastInt>(std::string_view s) {
  return FastInt::parse(s);
}

template <>
inline BigInt parse_int<BigInt>(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) body.remove_prefix(1);
  if (body.empty()) throw ParseError("integer has no digits");
  for (char c : body) {
    if (c < '0' || c > '9') throw ParseError("bad digit in integer '" + std::string(s) + "'");
  }
  const BigInt r{std::string(body)};
  return (!s.empty() && s[0] == '-') ? BigInt(-r) : r;
}

// Value-preserving conversion between the two scalars; throws Overflow when
// the value does not fit the target.
template <class To, class From>
To int_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else {
    return parse_int<To>(to_string(v));
  }
}

// Number of significant bits of |v|; 0 for v == 0.
inline unsigned bit_length(const FastInt& v) {
  unsigned __int128 mag = v.native() < 0 ? -static_cast<unsigned __int128>(v.native())
                                          : static_cast<unsigned __int128>(v.native());
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  if (hi != 0) return 128U - static_cast<unsigned>(__builtin_clzll(hi));
  if (lo != 0) return 64U - static_cast<unsigned>(__builtin_clzll(lo));
  return 0;
}

inline unsigned bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

template <ExactInteger I>
int sign(const I& v) {
  return v < I(0) ? -1 : (I(0) < v ? 1 : 0);
}

template <ExactInteger I>
I abs(const I& v) {
  return v < I(0) ? I(-v) : v;
}

// --- kernel operations -------------------------------------------------------

// floor(a / b), rounding toward negative infinity.
template <ExactInteger I>
I floor_div(const I& a, const I& b) {
  if (b == I(0)) throw DivisionByZero("floor_div by zero");
  I q = a / b;
  I r = a % b;
  if (r != I(0) && ((r < I(0)) != (b < I(0)))) q = q - I(1);
  return q;
}

template <ExactInteger I>
I ceil_div(const I& a, const I& b) {
  return -floor_div<I>(-a, b);
}

// Least non-negative residue of a modulo |b|.
template <ExactInteger I>
I floor_mod(const I& a, const I& b) {
  I r = a - b * floor_div(a, b);
  return r < I(0) ? I(r + abs(b)) : r;
}

// Largest r with r*r <= a.
template <ExactInteger I>
I floor_sqrt(const I& a) {
  if (a < I(0)) throw DomainError("floor_sqrt of a negative number");
  if (a < I(2)) return a;
  // Start from a power of two that is >= sqrt(a); Newton then decreases
  // monotonically to the floor.
  const unsigned bits = bit_length(a);
  I x(1);
  for (unsigned i = 0; i < (bits + 1) / 2; ++i) x = x * I(2);
  for (;;) {
    I y = (x + a / x) / I(2);
    if (!(y < x)) return x;
    x = y;
  }
}

template <ExactInteger I>
I gcd(I a, I b) {
  a = abs(a);
  b = abs(b);
  while (b != I(0)) {
    I r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <ExactInteger I>
I lcm(const I& a, const I& b) {
  if (a == I(0) || b == I(0)) return I(0);
  return abs(I(a / gcd(a, b) * b));
}

template <ExactInteger I>
struct Bezout {
  I g;
  I s;
  I t;
};

// g = gcd(|a|, |b|) > 0 together with s*a + t*b = g.
template <ExactInteger I>
Bezout<I> ext_gcd(const I& a, const I& b) {
  if (a == I(0) && b == I(0)) throw DomainError("ext_gcd(0, 0) is undefined");
  I old_r = a, r = b;
  I old_s(1), s(0);
  I old_t(0), t(1);
  while (r != I(0)) {
    I q = old_r / r;
    I tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < I(0)) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Floors of the distinct real roots of a*x^2 + b*x + c over the integers.
template <ExactInteger I>
struct QuadRoots {
  int count = 0;
  std::array<I, 2> roots{};  // first `count` entries hold the floors, ascending
  bool degenerate = false;   // a == b == 0: the polynomial is constant

  std::span<const I> floors() const { return {roots.data(), static_cast<std::size_t>(count)}; }
};

template <ExactInteger I>
QuadRoots<I> quad_roots_floor_int(const I& a, const I& b, const I& c) {
  QuadRoots<I> out;
  if (a == I(0)) {
    if (b == I(0)) {
      out.degenerate = true;
      return out;
    }
    out.count = 1;
    out.roots[0] = floor_div<I>(-c, b);
    return out;
  }
  const I disc = b * b - I(4) * a * c;
  if (disc < I(0)) return out;
  const int sa = sign(a);
  const I two_abs_a = I(2) * abs(a);
  const I neg_sb = sa > 0 ? I(-b) : b;
  if (disc == I(0)) {
    out.count = 1;
    out.roots[0] = floor_div(neg_sb, two_abs_a);
    return out;
  }
  const I s = floor_sqrt(disc);
  const bool exact = s * s == disc;
  // floor(sign(a)*sqrt(disc)) and ceil(sign(a)*sqrt(disc))
  const I floor_signed = sa > 0 ? s : I(-(exact ? s : I(s + I(1))));
  const I ceil_signed = sa > 0 ? (exact ? s : I(s + I(1))) : I(-s);
  I r1 = floor_div(I(neg_sb + floor_signed), two_abs_a);
  I r2 = floor_div(I(neg_sb - ceil_signed), two_abs_a);
  out.count = 2;
  if (r2 < r1) std::swap(r1, r2);
  out.roots = {std::move(r1), std::move(r2)};
  return out;
}

}  // namespace hyperhull

#pragma once

// Exact rationals kept in canonical form (den > 0, gcd(|num|, den) == 1)
// after every operation.  Integral values (den == 1) take short paths since
// they dominate the standard-lattice workload.

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "hyperhull/errors.hpp"
#include "hyperhull/exactmath.hpp"

namespace hyperhull {

template <ExactInteger I>
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(I n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design of the scalar
  Rat(int n) : num_(n), den_(1) {}            // NOLINT
  Rat(I n, I d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const I& num() const { return num_; }
  const I& den() const { return den_; }

  bool is_integer() const { return den_ == I(1); }
  int sign() const { return hyperhull::sign(num_); }

  I floor() const { return den_ == I(1) ? num_ : floor_div(num_, den_); }
  I ceil() const { return den_ == I(1) ? num_ : ceil_div(num_, den_); }

  Rat operator-() const { return from_canonical(-num_, den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.den_ == I(1) && b.den_ == I(1)) return Rat(a.num_ + b.num_);
    if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    if (a.den_ == I(1) && b.den_ == I(1)) return Rat(a.num_ - b.num_);
    if (a.den_ == b.den_) return Rat(a.num_ - b.num_, a.den_);
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    if (a.den_ == I(1) && b.den_ == I(1)) return Rat(a.num_ * b.num_);
    // Cross-cancel first so intermediate products stay small.
    const I g1 = gcd(a.num_, b.den_);
    const I g2 = gcd(b.num_, a.den_);
    const I n1 = a.num_ / g1;
    const I d2 = b.den_ / g1;
    const I n2 = b.num_ / g2;
    const I d1 = a.den_ / g2;
    return from_canonical(n1 * n2, d1 * d2);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == I(0)) throw DivisionByZero("rational division by zero");
    if (b.num_ < I(0)) return a * from_canonical(-b.den_, -b.num_);
    return a * from_canonical(b.den_, b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.den_ == b.den_) return cmp(a.num_, b.num_);
    return cmp(a.num_ * b.den_, b.num_ * a.den_);
  }

  // "num/den", or just "num" when the value is an integer.
  std::string str() const {
    if (den_ == I(1)) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
  }

  static Rat parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int<I>(s));
    const std::string_view d = s.substr(slash + 1);
    if (!d.empty() && (d[0] == '-' || d[0] == '+')) throw ParseError("sign belongs on the numerator: '" + std::string(s) + "'");
    I den = parse_int<I>(d);
    if (den == I(0)) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rat(parse_int<I>(s.substr(0, slash)), std::move(den));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  static std::strong_ordering cmp(const I& a, const I& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static Rat from_canonical(I n, I d) {
    Rat r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  void normalize() {
    if (den_ == I(0)) throw DivisionByZero("rational with zero denominator");
    if (den_ < I(0)) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == I(1)) return;
    if (num_ == I(0)) {
      den_ = I(1);
      return;
    }
    const I g = gcd(num_, den_);
    if (g != I(1)) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }

  I num_;
  I den_;
};

template <ExactInteger I>
Rat<I> abs(const Rat<I>& r) {
  return r.sign() < 0 ? -r : r;
}

// Positive generator of a*Z + b*Z inside Q.
template <ExactInteger I>
Rat<I> rat_gcd(const Rat<I>& a, const Rat<I>& b) {
  if (a.sign() == 0 && b.sign() == 0) throw DomainError("rat_gcd(0, 0) is undefined");
  const I l = lcm(a.den(), b.den());
  const I an = a.num() * (l / a.den());
  const I bn = b.num() * (l / b.den());
  return Rat<I>(gcd(an, bn), l);
}

// Floors of the distinct real roots of a*x^2 + b*x + c for rational
// coefficients.  Denominators are cleared first; the roots are unchanged.
template <ExactInteger I>
QuadRoots<I> quad_roots_floor(const Rat<I>& a, const Rat<I>& b, const Rat<I>& c) {
  if (a.is_integer() && b.is_integer() && c.is_integer()) {
    return quad_roots_floor_int(a.num(), b.num(), c.num());
  }
  const I l = lcm(lcm(a.den(), b.den()), c.den());
  return quad_roots_floor_int(I(a.num() * (l / a.den())), I(b.num() * (l / b.den())),
                              I(c.num() * (l / c.den())));
}

template <ExactInteger To, ExactInteger From>
Rat<To> rat_cast(const Rat<From>& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else {
    return Rat<To>(int_cast<To>(v.num()), int_cast<To>(v.den()));
  }
}

}  // namespace hyperhull

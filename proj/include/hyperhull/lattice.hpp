#pragma once

// Rational lattices in the plane.  A lattice is carried around in standard
// form: b1 = (b1x, b1y) with b1x > 0, b2 = (0, b2y) with 0 <= b1y < b2y.

#include <optional>
#include <ostream>
#include <tuple>

#include "hyperhull/errors.hpp"
#include "hyperhull/rational.hpp"

namespace hyperhull {

template <ExactInteger I>
struct Vec2 {
  Rat<I> x;
  Rat<I> y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(const Rat<I>& k, const Vec2& v) { return {k * v.x, k * v.y}; }
  bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
  Vec2 swapped() const { return {y, x}; }
};

template <ExactInteger I>
struct Point2 {
  Rat<I> x;
  Rat<I> y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(const Point2& p, const Vec2<I>& v) { return {p.x + v.x, p.y + v.y}; }
  friend Point2 operator-(const Point2& p, const Vec2<I>& v) { return {p.x - v.x, p.y - v.y}; }
  friend Vec2<I> operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  Point2 swapped() const { return {y, x}; }

  friend std::ostream& operator<<(std::ostream& os, const Point2& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

template <ExactInteger I>
Rat<I> det(const Vec2<I>& a, const Vec2<I>& b) {
  return a.x * b.y - a.y * b.x;
}

// Arbitrary basis (w1, w2) of a rank-2 lattice.
template <ExactInteger I>
struct Basis2 {
  Vec2<I> w1;
  Vec2<I> w2;

  friend bool operator==(const Basis2&, const Basis2&) = default;
};

template <ExactInteger I>
struct StdBasis {
  Vec2<I> b1;
  Vec2<I> b2;

  Rat<I> det() const { return b1.x * b2.y; }
  Basis2<I> as_basis() const { return {b1, b2}; }
  friend bool operator==(const StdBasis&, const StdBasis&) = default;
};

// anchor + Lambda.  The anchor is whatever representative the caller gave.
template <ExactInteger I>
struct AffineLattice {
  Point2<I> anchor;
  StdBasis<I> basis;

  friend bool operator==(const AffineLattice&, const AffineLattice&) = default;
};

template <ExactInteger I>
Rat<I> det_lattice(const Basis2<I>& basis) {
  return abs(det(basis.w1, basis.w2));
}

template <ExactInteger I>
StdBasis<I> standard_basis(const Basis2<I>& basis) {
  const Rat<I> d = det_lattice(basis);
  if (d.sign() == 0) throw DegenerateBasis("basis vectors are linearly dependent");
  const auto& w1 = basis.w1;
  const auto& w2 = basis.w2;

  // b1x = generator of w1x*Z + w2x*Z, with the Bezout pair scaled to a common
  // denominator.
  const I l = lcm(w1.x.den(), w2.x.den());
  const I ax = w1.x.num() * (l / w1.x.den());
  const I bx = w2.x.num() * (l / w2.x.den());
  const Bezout<I> bz = ext_gcd(ax, bx);
  const Rat<I> b1x(bz.g, l);
  const Rat<I> b2y = d / b1x;
  const Rat<I> y = Rat<I>(bz.s) * w1.y + Rat<I>(bz.t) * w2.y;
  // Reduce into [0, b2y) by flooring; the result is a lattice point since
  // b2 = (0, b2y) belongs to the lattice.
  const Rat<I> b1y = y - Rat<I>((y / b2y).floor()) * b2y;
  return {{b1x, b1y}, {Rat<I>(0), b2y}};
}

// Exact membership of q in anchor + span_Z(basis).
template <ExactInteger I>
bool lattice_contains(const AffineLattice<I>& lat, const Point2<I>& q) {
  const Vec2<I> d = q - lat.anchor;
  const Rat<I> alpha = d.x / lat.basis.b1.x;
  if (!alpha.is_integer()) return false;
  const Rat<I> beta = (d.y - alpha * lat.basis.b1.y) / lat.basis.b2.y;
  return beta.is_integer();
}

template <ExactInteger I>
bool lattice_contains(const StdBasis<I>& basis, const Vec2<I>& v) {
  return lattice_contains(AffineLattice<I>{{Rat<I>(0), Rat<I>(0)}, basis}, Point2<I>{v.x, v.y});
}

namespace detail {
template <ExactInteger I>
void require_integer_coordinates(const Basis2<I>& basis) {
  for (const auto* c : {&basis.w1.x, &basis.w1.y, &basis.w2.x, &basis.w2.y}) {
    if (!c->is_integer()) throw DomainError("lattice basis must have integer coordinates");
  }
}
}  // namespace detail

// True iff gcd of the x-coordinates and gcd of the y-coordinates are both 1.
template <ExactInteger I>
bool is_reduced(const Basis2<I>& basis) {
  detail::require_integer_coordinates(basis);
  return gcd(basis.w1.x.num(), basis.w2.x.num()) == I(1) && gcd(basis.w1.y.num(), basis.w2.y.num()) == I(1);
}

// Reduced sublattice of Z^2 (integer coordinates, unit coordinate gcds).
template <ExactInteger I>
bool is_reduced_sublattice(const StdBasis<I>& basis) {
  const Basis2<I> b = basis.as_basis();
  for (const auto* c : {&b.w1.x, &b.w1.y, &b.w2.x, &b.w2.y}) {
    if (!c->is_integer()) return false;
  }
  return is_reduced(b);
}

template <ExactInteger I>
struct ReducedLattice {
  Basis2<I> basis;
  I sx;
  I sy;
};

// Divide x-coordinates by their gcd and y-coordinates by theirs.
template <ExactInteger I>
ReducedLattice<I> reduce_lattice(const Basis2<I>& basis) {
  detail::require_integer_coordinates(basis);
  if (det_lattice(basis).sign() == 0) throw DegenerateBasis("basis vectors are linearly dependent");
  const I sx = gcd(basis.w1.x.num(), basis.w2.x.num());
  const I sy = gcd(basis.w1.y.num(), basis.w2.y.num());
  const Rat<I> rx(sx), ry(sy);
  return {{{basis.w1.x / rx, basis.w1.y / ry}, {basis.w2.x / rx, basis.w2.y / ry}}, sx, sy};
}

// Mirror across the diagonal x = y, re-standardized.
template <ExactInteger I>
AffineLattice<I> reflect(const AffineLattice<I>& lat) {
  const Basis2<I> swapped{lat.basis.b1.swapped(), lat.basis.b2.swapped()};
  return {lat.anchor.swapped(), standard_basis(swapped)};
}

// Z^2 anchored at the origin.
template <ExactInteger I>
AffineLattice<I> integer_lattice() {
  return {{Rat<I>(0), Rat<I>(0)}, {{Rat<I>(1), Rat<I>(0)}, {Rat<I>(0), Rat<I>(1)}}};
}

template <ExactInteger To, ExactInteger From>
Point2<To> point_cast(const Point2<From>& p) {
  return {rat_cast<To>(p.x), rat_cast<To>(p.y)};
}

template <ExactInteger To, ExactInteger From>
AffineLattice<To> lattice_cast(const AffineLattice<From>& lat) {
  const auto v = [](const Vec2<From>& w) { return Vec2<To>{rat_cast<To>(w.x), rat_cast<To>(w.y)}; };
  return {point_cast<To>(lat.anchor), {v(lat.basis.b1), v(lat.basis.b2)}};
}

}  // namespace hyperhull

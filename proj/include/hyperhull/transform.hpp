#pragma once

// Reduction of a rational hyperbola
//     a (x - x0)^2 + b (x - x0)(y - y0) + c (y - y0)^2 = n
// with integer a, b, c and integer discriminant root delta to the standard
// hyperbola {xy = |n|} over an affine sublattice of Z^2 of determinant delta.
//
// The quadratic form factors as L1 * L2 with integer linear forms; the map
// (x, y) -> (L1, L2)(x - x0, y - y0), followed by coordinate sign flips that
// pick the requested branch, is the forward transform.

#include <optional>
#include <string>
#include <variant>

#include "hyperhull/errors.hpp"
#include "hyperhull/hull.hpp"
#include "hyperhull/lattice.hpp"

namespace hyperhull {

template <ExactInteger I>
struct GeneralHyperbola {
  I a, b, c;
  Rat<I> x0, y0;
  Rat<I> n;
  I delta;        // sqrt(b^2 - 4ac)
  I content;      // gcd(a, b, c)

  // Validates the discriminant and the level; computes delta and content.
  static GeneralHyperbola make(I a, I b, I c, Rat<I> x0, Rat<I> y0, Rat<I> n) {
    const I disc = b * b - I(4) * a * c;
    if (disc <= I(0)) throw NotARationalHyperbola("b^2 - 4ac must be positive");
    const I root = floor_sqrt(disc);
    if (root * root != disc) throw NotARationalHyperbola("b^2 - 4ac is not a perfect square");
    if (n.sign() == 0) throw DegenerateConic("level n = 0 gives a pair of lines");
    const I content = gcd(gcd(a, b), c);
    return {std::move(a), std::move(b), std::move(c), std::move(x0), std::move(y0), std::move(n), root, content};
  }

  // Q(x - x0, y - y0)
  Rat<I> form_at(const Point2<I>& p) const {
    const Rat<I> dx = p.x - x0, dy = p.y - y0;
    return Rat<I>(a) * dx * dx + Rat<I>(b) * dx * dy + Rat<I>(c) * dy * dy;
  }
};

// Invertible affine map p -> M p + t.
template <ExactInteger I>
struct AffineMap {
  Rat<I> m11, m12, m21, m22;
  Vec2<I> t;

  Rat<I> det() const { return m11 * m22 - m12 * m21; }

  Point2<I> apply(const Point2<I>& p) const {
    return {m11 * p.x + m12 * p.y + t.x, m21 * p.x + m22 * p.y + t.y};
  }

  AffineMap inverse() const {
    const Rat<I> d = det();
    if (d.sign() == 0) throw DomainError("affine map is not invertible");
    const Rat<I> i11 = m22 / d, i12 = -m12 / d, i21 = -m21 / d, i22 = m11 / d;
    return {i11, i12, i21, i22, {-(i11 * t.x + i12 * t.y), -(i21 * t.x + i22 * t.y)}};
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// The integer factorization Q = (a1 x + c2 y)(a2 x + c1 y) used by the
// transform, kept for provenance.
template <ExactInteger I>
struct FormFactors {
  I a1, a2, c1, c2;
};

enum class Quadrant { PosPos, NegNeg, PosNeg, NegPos };

// Chooses one convex component of the complement of the hyperbola: either a
// sample point strictly inside it, or the quadrant its image occupies in
// (L1, L2) coordinates.
template <ExactInteger I>
using BranchSelector = std::variant<Point2<I>, Quadrant>;

template <ExactInteger I>
struct StandardProblem {
  Rat<I> n_prime;           // |n|
  AffineLattice<I> lat;     // image of Z^2 in standard coordinates
  AffineMap<I> forward;     // original -> standard
  AffineMap<I> back;        // standard -> original
  int flip_x = 1;
  int flip_y = 1;
  FormFactors<I> factors;
  GeneralHyperbola<I> source;
};

namespace detail {

template <ExactInteger I>
FormFactors<I> factor_form(const GeneralHyperbola<I>& h) {
  // Returns integers with a1*c1 - c2*a2 = -delta * s for s = +-1 and
  // (a1 x + c2 y)(a2 x + c1 y) == Q(x, y).
  if (h.c == I(0)) {
    // Q = x (a x + b y)
    return {I(1), h.a, h.b, I(0)};
  }
  if (h.a == I(0)) {
    // Q = (b x + c y) y
    return {h.b, I(0), I(1), h.c};
  }
  const I half_minus = (h.b - h.delta) / I(2);
  const I a1 = gcd(h.a, half_minus);
  const I c1 = half_minus / a1;
  const I a2 = h.a / a1;
  const I c2 = h.c / c1;
  return {a1, a2, c1, c2};
}

}  // namespace detail

template <ExactInteger I>
StandardProblem<I> to_standard(const GeneralHyperbola<I>& h_in, const BranchSelector<I>& branch) {
  GeneralHyperbola<I> h = GeneralHyperbola<I>::make(h_in.a, h_in.b, h_in.c, h_in.x0, h_in.y0, h_in.n);
  // With c == 0 (or a == 0) the factorization divides by b, so factor -Q and
  // negate the second linear form.
  const bool negated = (h.c == I(0) || h.a == I(0)) && h.b < I(0);
  if (negated) {
    h.a = -h.a;
    h.b = -h.b;
    h.c = -h.c;
  }
  FormFactors<I> f = detail::factor_form(h);
  if (negated) {
    h.a = -h.a;
    h.b = -h.b;
    h.c = -h.c;
    f.a2 = -f.a2;
    f.c1 = -f.c1;
  }
  if (f.a1 * f.a2 != h.a || f.c1 * f.c2 != h.c || f.a1 * f.c1 + f.a2 * f.c2 != h.b) {
    throw InvariantViolation("form factorization does not reproduce the quadratic form");
  }

  // Linear part before sign flips: rows are the two linear forms.
  const Rat<I> l11(f.a1), l12(f.c2), l21(f.a2), l22(f.c1);
  const auto image = [&](const Point2<I>& p) {
    const Rat<I> dx = p.x - h.x0, dy = p.y - h.y0;
    return Point2<I>{l11 * dx + l12 * dy, l21 * dx + l22 * dy};
  };

  int sx = 1, sy = 1;
  if (const auto* sample = std::get_if<Point2<I>>(&branch)) {
    const Point2<I> s = image(*sample);
    const Rat<I> prod = s.x * s.y;
    const bool strictly_inside = s.x.sign() != 0 && s.y.sign() != 0 && prod.sign() == h.n.sign() &&
                                 abs(prod) > abs(h.n);
    if (!strictly_inside) throw BranchError("branch sample is not strictly inside a convex component");
    sx = s.x.sign();
    sy = s.y.sign();
  } else {
    switch (std::get<Quadrant>(branch)) {
      case Quadrant::PosPos: sx = 1; sy = 1; break;
      case Quadrant::NegNeg: sx = -1; sy = -1; break;
      case Quadrant::PosNeg: sx = 1; sy = -1; break;
      case Quadrant::NegPos: sx = -1; sy = 1; break;
    }
    if (sx * sy != h.n.sign()) throw BranchError("quadrant does not hold a component for this sign of n");
  }

  const Rat<I> fx(sx), fy(sy);
  AffineMap<I> forward{fx * l11, fx * l12, fy * l21, fy * l22, {Rat<I>(0), Rat<I>(0)}};
  const Point2<I> anchor = [&] {
    const Point2<I> shifted = forward.apply(Point2<I>{h.x0, h.y0});
    return Point2<I>{-shifted.x, -shifted.y};
  }();
  forward.t = {anchor.x, anchor.y};

  const Basis2<I> cols{{forward.m11, forward.m21}, {forward.m12, forward.m22}};
  StandardProblem<I> sp{abs(h.n), {anchor, standard_basis(cols)}, forward, forward.inverse(), sx, sy, f, h};
  if (!(sp.lat.basis.det() == Rat<I>(h.delta))) throw InvariantViolation("transformed lattice determinant differs from delta");
  return sp;
}

// Maps standard-coordinate points back to the original plane.  Each point
// must lie on the transformed lattice; outputs are integer points.
template <ExactInteger I>
HullPath<I> map_back(const StandardProblem<I>& sp, const HullPath<I>& pts) {
  HullPath<I> out;
  out.points.reserve(pts.size());
  for (const auto& p : pts) {
    if (!lattice_contains(sp.lat, p)) throw InvariantViolation("point " + p.x.str() + "," + p.y.str() + " is not on the transformed lattice");
    Point2<I> q = sp.back.apply(p);
    if (!q.x.is_integer() || !q.y.is_integer()) throw InvariantViolation("mapped point is not integral");
    out.points.push_back(std::move(q));
  }
  return out;
}

// Closed-component membership in original coordinates via the forward map.
template <ExactInteger I>
bool in_component(const StandardProblem<I>& sp, const Point2<I>& q) {
  return contains(sp.n_prime, sp.forward.apply(q));
}

// Hull vertices of the selected component's integer points, in original
// coordinates.
template <ExactInteger I>
HullPath<I> enumerate_general(const GeneralHyperbola<I>& h, const BranchSelector<I>& branch) {
  const StandardProblem<I> sp = to_standard(h, branch);
  return map_back(sp, enumerate_hull(sp.n_prime, sp.lat));
}

}  // namespace hyperhull

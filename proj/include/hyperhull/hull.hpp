#pragma once

// Vertex enumeration for conv(H_n ∩ (p + Λ)).
//
// The walk starts at the bottommost lattice point of the leftmost column with
// x > 0 and repeatedly jumps to Nextpt: the farthest lattice point of H_n
// along the primitive direction of smallest slope.  That direction is found
// by narrowing a pair (in, out) of lattice vectors that bracket it, one
// Euclid-like step per iteration, each step being a single ray cast.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hyperhull/counters.hpp"
#include "hyperhull/errors.hpp"
#include "hyperhull/lattice.hpp"
#include "hyperhull/raycast.hpp"

#if !defined(HYPERHULL_CHECK_INVARIANTS)
#if defined(NDEBUG)
#define HYPERHULL_CHECK_INVARIANTS 0
#else
#define HYPERHULL_CHECK_INVARIANTS 1
#endif
#endif

namespace hyperhull {

// Right search basis: in.x > 0, out.x >= 0, det(in, out) < 0, with p + in
// inside H_n and p + out outside.
template <ExactInteger I>
struct SearchBasis {
  Vec2<I> inv;
  Vec2<I> outv;
};

template <ExactInteger I>
struct HullPath {
  std::vector<Point2<I>> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point2<I>& operator[](std::size_t i) const { return points[i]; }
  auto begin() const { return points.begin(); }
  auto end() const { return points.end(); }
  friend bool operator==(const HullPath&, const HullPath&) = default;
};

// A point, or infinity.
template <ExactInteger I>
using NextResult = std::optional<Point2<I>>;

// x strictly increasing, y strictly decreasing, edge slopes strictly
// increasing.
template <ExactInteger I>
bool is_strict_convex_chain(const HullPath<I>& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!(path[i - 1].x < path[i].x) || !(path[i].y < path[i - 1].y)) return false;
  }
  for (std::size_t i = 2; i < path.size(); ++i) {
    if (det(path[i - 1] - path[i - 2], path[i] - path[i - 1]).sign() <= 0) return false;
  }
  return true;
}

namespace detail {

template <ExactInteger I>
Point2<I> bottommost_in_column(const Rat<I>& n, const StdBasis<I>& basis, const Point2<I>& q) {
  const Rat<I> steps(((n / q.x - q.y) / basis.b2.y).ceil());
  return q + steps * basis.b2;
}

template <ExactInteger I>
bool in_exception_band(const Point2<I>& p) {
  return Rat<I>(1) < p.y && p.y < Rat<I>(2);
}

template <ExactInteger I>
void require_on_lattice_in_region(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& p) {
  if (n.sign() <= 0) throw PreconditionError("level n must be positive");
  if (!contains(n, p)) throw PreconditionError("point " + p.x.str() + "," + p.y.str() + " is not in H_n");
  if (!lattice_contains(lat, p)) throw PreconditionError("point " + p.x.str() + "," + p.y.str() + " is not on the lattice");
}

template <ExactInteger I>
void check_search_basis(const Rat<I>& n, const StdBasis<I>& basis, const Point2<I>& p, const SearchBasis<I>& sb) {
  const bool ok = sb.inv.x.sign() > 0 && sb.outv.x.sign() >= 0 && det(sb.inv, sb.outv) == -basis.det() &&
                  contains(n, p + sb.inv) && !contains(n, p + sb.outv);
  if (!ok) throw InvariantViolation("right search basis invariant broken");
}

template <ExactInteger I>
struct NextptOutcome {
  NextResult<I> next;
  Vec2<I> minsl;
};

template <ExactInteger I>
NextptOutcome<I> nextpt_impl(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& p) {
  require_on_lattice_in_region(n, lat, p);
  ++op_counters.nextpt_calls;
  const StdBasis<I>& basis = lat.basis;

  // Straight down first if the column continues inside H_n.
  const Vec2<I> down = -basis.b2;
  if (contains(n, p + down)) {
    const StepCount<I> m = raycast(n, p, down);
    return {p + Rat<I>(m.get()) * down, down};
  }

  SearchBasis<I> sb{basis.b1, down};
  std::uint64_t iterations = 0;
  std::optional<Vec2<I>> found;
  while (!found) {
    ++iterations;
    const StepCount<I> o = raycast(n, p + sb.inv, sb.outv);
    if (o.is_infinite()) throw InvariantViolation("ray cast along out never left H_n");
    sb.inv = sb.inv + Rat<I>(o.get()) * sb.outv;
    if constexpr (HYPERHULL_CHECK_INVARIANTS) check_search_basis(n, basis, p, sb);
    const StepCount<I> i = raycast(n, p + sb.outv, sb.inv);
    if (i.is_infinite()) {
      found = sb.inv;
    } else {
      sb.outv = sb.outv + Rat<I>(i.get()) * sb.inv;
      if constexpr (HYPERHULL_CHECK_INVARIANTS) check_search_basis(n, basis, p, sb);
    }
  }
  op_counters.loop_iterations += iterations;
  auto& slot = in_exception_band(p) ? op_counters.max_loop_iterations_band : op_counters.max_loop_iterations;
  slot = std::max(slot, iterations);

  const StepCount<I> m = raycast(n, p, *found);
  if (m.is_infinite()) return {std::nullopt, *found};
  return {p + Rat<I>(m.get()) * *found, *found};
}

template <ExactInteger I>
NextResult<I> swap_result(const NextResult<I>& r) {
  if (!r) return std::nullopt;
  return r->swapped();
}

}  // namespace detail

// Bottommost point of H_n on the leftmost lattice column with x > 0.
template <ExactInteger I>
Point2<I> first_vertex(const Rat<I>& n, const AffineLattice<I>& lat) {
  if (n.sign() <= 0) throw PreconditionError("level n must be positive");
  const StdBasis<I>& basis = lat.basis;
  // k = ceil(px / b1x) - 1 puts q.x in (0, b1x].
  const Rat<I> k = Rat<I>((lat.anchor.x / basis.b1.x).ceil() - I(1));
  const Point2<I> q = lat.anchor - k * basis.b1;
  return detail::bottommost_in_column(n, basis, q);
}

// Leftmost point of H_n on the lowest occupied lattice row: the last vertex.
template <ExactInteger I>
Point2<I> last_vertex(const Rat<I>& n, const AffineLattice<I>& lat) {
  return first_vertex(n, reflect(lat)).swapped();
}

template <ExactInteger I>
NextResult<I> nextpt(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& p) {
  return detail::nextpt_impl(n, lat, p).next;
}

template <ExactInteger I>
Vec2<I> minsl(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& p) {
  return detail::nextpt_impl(n, lat, p).minsl;
}

// Next (and final) vertex after a point with 1 < p.y < 2 on a reduced
// lattice: the first lattice point of row p.y - 1 with
// x >= max(p.x, n / (p.y - 1)), found as a bottommost-in-column query in the
// reflected lattice.
template <ExactInteger I>
Point2<I> last_vertex_exception(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& p) {
  if (!is_reduced_sublattice(lat.basis)) throw PreconditionError("exception path needs a reduced sublattice of Z^2");
  if (!detail::in_exception_band(p)) throw PreconditionError("exception path needs 1 < p.y < 2");
  detail::require_on_lattice_in_region(n, lat, p);

  const AffineLattice<I> r = reflect(lat);
  const Point2<I> q = p.swapped() - r.basis.b1;  // column x' = p.y - 1 of the reflection
  const Rat<I> target = std::max(n / q.x, p.x);
  const Rat<I> steps(((target - q.y) / r.basis.b2.y).ceil());
  return (q + steps * r.basis.b2).swapped();
}

// Streams the vertices in increasing x to `visit`, which returns false to
// stop early.  Only the current vertex is retained.
template <ExactInteger I, class Visitor>
void walk_hull(const Rat<I>& n, const AffineLattice<I>& lat, Visitor&& visit) {
  Point2<I> q = first_vertex(n, lat);
  if (!visit(q)) return;
  const bool reduced = is_reduced_sublattice(lat.basis);
  for (;;) {
    if (reduced && detail::in_exception_band(q)) {
      visit(last_vertex_exception(n, lat, q));
      return;
    }
    NextResult<I> next = nextpt(n, lat, q);
    if (!next) return;
    q = std::move(*next);
    if (!visit(q)) return;
  }
}

template <ExactInteger I>
HullPath<I> enumerate_hull(const Rat<I>& n, const AffineLattice<I>& lat) {
  HullPath<I> path;
  walk_hull(n, lat, [&](const Point2<I>& q) {
    path.points.push_back(q);
    return true;
  });
  return path;
}

// Previous vertex, by running nextpt on the mirrored problem.
template <ExactInteger I>
NextResult<I> prev_vertex(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& q) {
  ++op_counters.prev_calls;
  const AffineLattice<I> r = reflect(lat);
  return detail::swap_result(nextpt(n, r, q.swapped()));
}

namespace detail {
// ceil(log2(v)) for v >= 1.
template <ExactInteger I>
unsigned ceil_log2(const Rat<I>& v) {
  const I c = v.ceil();
  if (c <= I(1)) return 0;
  return bit_length(I(c - I(1)));
}
}  // namespace detail

// Vertex of minimal x among those with x >= x_start, or infinity.
//
// Starts from the bottommost point of the first lattice column at or after
// x_start, takes ceil(log2(n + det)) + 1 forward nextpt steps (enough to land
// on genuine vertices of a reduced lattice), then walks back with
// prev_vertex while x stays >= x_start.
template <ExactInteger I>
NextResult<I> next_vertex_from_x(const Rat<I>& n, const AffineLattice<I>& lat, const Rat<I>& x_start) {
  const Point2<I> first = first_vertex(n, lat);
  if (x_start <= first.x) return first;

  const StdBasis<I>& basis = lat.basis;
  const Rat<I> k((lat.anchor.x - x_start) / basis.b1.x);
  const Point2<I> column = lat.anchor - Rat<I>(k.floor()) * basis.b1;
  Point2<I> cur = detail::bottommost_in_column(n, basis, column);

  const bool reduced = is_reduced_sublattice(basis);
  const unsigned forward = detail::ceil_log2(n + basis.det()) + 1;
  for (unsigned step = 0; step < forward; ++step) {
    if (reduced && detail::in_exception_band(cur)) {
      cur = last_vertex(n, lat);
      break;
    }
    NextResult<I> next = nextpt(n, lat, cur);
    if (!next) {
      cur = last_vertex(n, lat);
      break;
    }
    cur = std::move(*next);
  }

  if (cur.x < x_start) return std::nullopt;
  Point2<I> best = cur;
  for (;;) {
    NextResult<I> prev = prev_vertex(n, lat, best);
    if (!prev || prev->x < x_start) break;
    best = std::move(*prev);
  }
  return best;
}

}  // namespace hyperhull

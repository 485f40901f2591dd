#pragma once

// Brute-force ground truth for tests.  Nothing here calls into the hull walk
// or the fast ray cast; only the exact scalars, points and lattice bases are
// shared.

#include <cstdint>
#include <algorithm>
#include <optional>
#include <vector>

#include "hyperhull/errors.hpp"
#include "hyperhull/lattice.hpp"

namespace hyperhull::oracle {

template <ExactInteger I>
using Staircase = std::vector<Point2<I>>;

inline constexpr std::int64_t kDefaultColumnCap = 10'000'000;

template <ExactInteger I>
bool in_region(const Rat<I>& n, const Point2<I>& q) {
  return q.x.sign() >= 0 && q.y.sign() >= 0 && q.x * q.y >= n;
}

// Per lattice column with 0 < x <= X, the bottommost lattice point of H_n.
// X is the larger of n / y_min + 1 and the x of the leftmost region point on
// the lowest positive row y_min, so the last vertex is always included.
template <ExactInteger I>
Staircase<I> staircase(const Rat<I>& n, const AffineLattice<I>& lat,
                       std::int64_t column_cap = kDefaultColumnCap) {
  if (n.sign() <= 0) throw DomainError("staircase needs n > 0");
  const auto& b1 = lat.basis.b1;
  const auto& b2 = lat.basis.b2;

  // Rows of the lattice are spaced by g = gcd(b1y, b2y); the lowest positive
  // row sits at anchor.y mod g, shifted into (0, g].
  const Rat<I> g = rat_gcd(b1.y, b2.y);
  Rat<I> y_min = lat.anchor.y - Rat<I>((lat.anchor.y / g).floor()) * g;
  if (y_min.sign() == 0) y_min = g;

  // Scan columns left to right until both stopping conditions hold.
  const Rat<I> x_first = lat.anchor.x - Rat<I>((lat.anchor.x / b1.x).ceil() - I(1)) * b1.x;
  const Rat<I> x_limit = n / y_min + Rat<I>(1);
  Staircase<I> out;
  bool reached_bottom_row = false;
  Rat<I> x = x_first;
  // Point on the current column: anchor + k*b1 with k = (x - anchor.x)/b1x.
  for (std::int64_t col = 0;; ++col) {
    if (col >= column_cap) throw DomainError("staircase exceeds the desk-scale column cap");
    if (x > x_limit && reached_bottom_row) break;
    const Rat<I> k = (x - lat.anchor.x) / b1.x;
    const Rat<I> y0 = lat.anchor.y + k * b1.y;
    // Smallest y = y0 + j*b2y with x*y >= n.
    const Rat<I> need = n / x;
    const Rat<I> j((need - y0) / b2.y);
    Rat<I> y = y0 + Rat<I>(j.ceil()) * b2.y;
    out.push_back({x, y});
    if (y == y_min) reached_bottom_row = true;
    x = x + b1.x;
  }
  return out;
}

template <ExactInteger I>
Rat<I> cross(const Point2<I>& o, const Point2<I>& a, const Point2<I>& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Lower-left convex chain with strict turns, running from the bottommost point
// of the leftmost column to the leftmost point of the bottommost row.
template <ExactInteger I>
std::vector<Point2<I>> brute_hull(const Staircase<I>& st) {
  if (st.empty()) throw DomainError("brute_hull needs a non-empty staircase");
  std::vector<Point2<I>> pts = st;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  // Keep the bottommost point per column.
  std::vector<Point2<I>> cols;
  for (const auto& p : pts) {
    if (cols.empty() || !(cols.back().x == p.x)) cols.push_back(p);
  }
  // Truncate at the leftmost point of the lowest row.
  std::size_t cut = 0;
  for (std::size_t i = 1; i < cols.size(); ++i) {
    if (cols[i].y < cols[cut].y) cut = i;
  }
  cols.resize(cut + 1);

  std::vector<Point2<I>> chain;
  for (const auto& p : cols) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p).sign() <= 0) chain.pop_back();
    chain.push_back(p);
  }
  return chain;
}

// Literal scan of m = 0..budget for the first membership flip between
// p + m v and p + (m+1) v; nullopt when none occurs within the budget.
template <ExactInteger I>
std::optional<I> naive_raycast(const Rat<I>& n, const Point2<I>& p, const Vec2<I>& v, std::int64_t budget) {
  if (budget < 1) throw DomainError("naive_raycast needs budget >= 1");
  auto at = [&](std::int64_t m) {
    const Rat<I> mr{I(m)};
    return in_region(n, Point2<I>{p.x + mr * v.x, p.y + mr * v.y});
  };
  bool here = at(0);
  for (std::int64_t m = 0; m <= budget; ++m) {
    const bool next = at(m + 1);
    if (here != next) return I(m);
    here = next;
  }
  return std::nullopt;
}

// Bottommost point per x among an arbitrary point cloud, so it can be fed
// into brute_hull.
template <ExactInteger I>
Staircase<I> column_minima(const std::vector<Point2<I>>& points) {
  Staircase<I> out;
  std::vector<Point2<I>> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  for (const auto& p : sorted) {
    if (out.empty() || !(out.back().x == p.x)) out.push_back(p);
  }
  return out;
}

}  // namespace hyperhull::oracle

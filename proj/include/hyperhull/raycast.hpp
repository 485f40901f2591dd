#pragma once

// Membership in H_n = {(x, y) : x >= 0, y >= 0, x*y >= n} and the lattice ray
// cast: the first step m >= 0 at which exactly one of p + m*v, p + (m+1)*v
// lies in H_n.  This header is the only curve-specific surface used by the
// hull walk.

#include <algorithm>
#include <array>
#include <optional>

#include "hyperhull/counters.hpp"
#include "hyperhull/lattice.hpp"

namespace hyperhull {

// A non-negative step count, or infinity.
template <ExactInteger I>
struct StepCount {
  std::optional<I> value;  // nullopt == infinity

  static StepCount infinity() { return {}; }
  static StepCount finite(I m) { return {std::move(m)}; }
  bool is_infinite() const { return !value.has_value(); }
  const I& get() const { return *value; }
  friend bool operator==(const StepCount&, const StepCount&) = default;
};

template <ExactInteger I>
bool contains(const Rat<I>& n, const Point2<I>& pt) {
  ++op_counters.contains;
  return pt.x.sign() >= 0 && pt.y.sign() >= 0 && !(pt.x * pt.y < n);
}

template <ExactInteger I>
StepCount<I> raycast(const Rat<I>& n, const Point2<I>& p, const Vec2<I>& v) {
  if (v.is_zero()) throw DomainError("raycast direction must be non-zero");
  ++op_counters.raycasts;
  const auto contains_before = op_counters.contains;

  // f(m) = (px + m vx)(py + m vy) - n
  const Rat<I> a = v.x * v.y;
  const Rat<I> b = v.x * p.y + v.y * p.x;
  const Rat<I> c = p.x * p.y - n;
  ++op_counters.quad_roots;
  const QuadRoots<I> roots = quad_roots_floor(a, b, c);

  // Membership can only change across a root of f or a zero of one of the
  // coordinate functions; each such event t sits in [m, m+1] for
  // m in {floor(t) - 1, floor(t)}.  floor(t) + 1 is added as slack.
  std::array<I, 13> cand;
  std::size_t nc = 0;
  auto add_event = [&](const I& f) {
    cand[nc++] = f - I(1);
    cand[nc++] = f;
    cand[nc++] = f + I(1);
  };
  for (const I& f : roots.floors()) add_event(f);
  if (v.x.sign() != 0) add_event((-p.x / v.x).floor());
  if (v.y.sign() != 0) add_event((-p.y / v.y).floor());
  cand[nc++] = I(0);
  std::sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(nc));
  const auto last = std::unique(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(nc));

  // Membership at consecutive steps is memoised so a cluster costs at most
  // four evaluations.
  std::optional<I> memo_m;
  bool memo_in = false;
  auto inside_at = [&](const I& m) {
    if (memo_m && *memo_m == m) return memo_in;
    const Rat<I> mr(m);
    memo_in = contains(n, Point2<I>{p.x + mr * v.x, p.y + mr * v.y});
    memo_m = m;
    return memo_in;
  };

  StepCount<I> result = StepCount<I>::infinity();
  for (auto it = cand.begin(); it != last; ++it) {
    if (*it < I(0)) continue;
    const bool here = inside_at(*it);
    const bool next = inside_at(*it + I(1));
    if (here != next) {
      result = StepCount<I>::finite(*it);
      break;
    }
  }
  const auto used = op_counters.contains - contains_before;
  op_counters.max_contains_per_raycast = std::max(op_counters.max_contains_per_raycast, used);
  return result;
}

}  // namespace hyperhull

#pragma once

// Factorization by walking the hull of H_n ∩ Z^2: the lattice points on
// xy = n are hull vertices, so every divisor d <= sqrt(n) shows up as a
// vertex (d, n/d) on the part of the walk with x <= sqrt(n).

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "hyperhull/errors.hpp"
#include "hyperhull/fallback.hpp"
#include "hyperhull/hull.hpp"

namespace hyperhull {

struct FactorStats {
  std::uint64_t vertices_visited = 0;
  std::uint64_t nextpt_calls = 0;  // includes the ones made inside prev_vertex
  std::uint64_t prev_calls = 0;

  FactorStats& operator+=(const FactorStats& o) {
    vertices_visited += o.vertices_visited;
    nextpt_calls += o.nextpt_calls;
    prev_calls += o.prev_calls;
    return *this;
  }
};

struct FactorOutcome {
  std::vector<BigInt> divisors;  // ascending
  std::optional<BigInt> first_nontrivial;
  FactorStats stats;
};

namespace detail {

template <ExactInteger I>
NextResult<I> hull_step(const Rat<I>& n, const AffineLattice<I>& lat, const Point2<I>& q, bool reduced) {
  if (reduced && in_exception_band(q)) {
    const Point2<I> last = last_vertex_exception(n, lat, q);
    if (last == q) return std::nullopt;
    return last;
  }
  return nextpt(n, lat, q);
}

template <ExactInteger I>
bool on_curve(const Rat<I>& n, const Point2<I>& q) {
  return q.x * q.y == n;
}

template <ExactInteger I>
FactorOutcome divisors_as(const BigInt& n_big) {
  const I ni = int_cast<I>(n_big);
  const Rat<I> n(ni);
  const Rat<I> root(floor_sqrt(ni));
  const AffineLattice<I> lat = integer_lattice<I>();

  const OpCounters before = op_counters;
  FactorOutcome out;
  std::vector<BigInt> small;
  walk_hull(n, lat, [&](const Point2<I>& q) {
    if (root < q.x) return false;
    ++out.stats.vertices_visited;
    if (on_curve(n, q)) small.push_back(int_cast<BigInt>(q.x.num()));
    return true;
  });
  out.stats.nextpt_calls = op_counters.nextpt_calls - before.nextpt_calls;
  out.stats.prev_calls = op_counters.prev_calls - before.prev_calls;

  out.divisors = small;
  for (auto it = small.rbegin(); it != small.rend(); ++it) {
    BigInt co = n_big / *it;
    if (co != *it) out.divisors.push_back(std::move(co));
  }
  for (const BigInt& d : out.divisors) {
    if (d > 1 && d < n_big) {
      out.first_nontrivial = d;
      break;
    }
  }
  return out;
}

struct ChunkResult {
  std::optional<BigInt> divisor;
  FactorStats stats;
};

// Smallest nontrivial divisor with x in [lo, hi], starting from the first
// vertex at or after lo.
template <ExactInteger I>
ChunkResult factor_chunk(const BigInt& n_big, const BigInt& lo_big, const BigInt& hi_big) {
  const Rat<I> n(int_cast<I>(n_big));
  const Rat<I> lo(int_cast<I>(lo_big));
  const Rat<I> hi(int_cast<I>(hi_big));
  const AffineLattice<I> lat = integer_lattice<I>();
  const bool reduced = true;

  const OpCounters before = op_counters;
  ChunkResult out;
  NextResult<I> q = next_vertex_from_x(n, lat, lo);
  while (q && !(hi < q->x)) {
    ++out.stats.vertices_visited;
    if (on_curve(n, *q) && Rat<I>(1) < q->x && q->x < n) {
      out.divisor = int_cast<BigInt>(q->x.num());
      break;
    }
    q = hull_step(n, lat, *q, reduced);
  }
  out.stats.nextpt_calls = op_counters.nextpt_calls - before.nextpt_calls;
  out.stats.prev_calls = op_counters.prev_calls - before.prev_calls;
  return out;
}

}  // namespace detail

// All divisors of n, read off the vertices with x <= floor(sqrt(n)).
inline FactorOutcome divisors_via_hull(const BigInt& n) {
  if (n < 1) throw PreconditionError("divisors_via_hull needs n >= 1");
  return with_fallback([&]<class I>(std::type_identity<I>) { return detail::divisors_as<I>(n); });
}

struct FindFactorResult {
  std::optional<BigInt> divisor;  // smallest nontrivial divisor; none means n is prime
  FactorStats stats;
};

// Splits [1, floor(sqrt(n))] into `chunks` contiguous x-ranges, one thread
// each, and returns the smallest nontrivial divisor found.
inline FindFactorResult find_factor_detailed(const BigInt& n, unsigned chunks) {
  if (n < 2) throw PreconditionError("find_factor needs n >= 2");
  if (chunks == 0) throw PreconditionError("find_factor needs at least one chunk");
  const BigInt root = floor_sqrt(n);
  const BigInt parts = std::min<BigInt>(BigInt(chunks), root);
  const unsigned k = static_cast<unsigned>(parts);

  std::vector<detail::ChunkResult> results(k);
  std::vector<std::exception_ptr> errors(k);
  const auto run = [&](unsigned i) {
    // Chunk i covers [1 + i*root/k, (i+1)*root/k].
    const BigInt lo = BigInt(i) * root / parts + 1;
    const BigInt hi = BigInt(i + 1) * root / parts;
    try {
      results[i] = with_fallback([&]<class I>(std::type_identity<I>) { return detail::factor_chunk<I>(n, lo, hi); });
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (k == 1) {
    run(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(k);
    for (unsigned i = 0; i < k; ++i) workers.emplace_back(run, i);
    for (auto& t : workers) t.join();
  }

  FindFactorResult out;
  for (unsigned i = 0; i < k; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.stats += results[i].stats;
    if (results[i].divisor && !out.divisor) out.divisor = results[i].divisor;
  }
  return out;
}

inline std::optional<BigInt> find_factor(const BigInt& n, unsigned chunks) {
  return find_factor_detailed(n, chunks).divisor;
}

}  // namespace hyperhull

#pragma once

#include <cstdint>

namespace hyperhull {

// Per-thread operation counters.  Cheap enough to stay on in release builds;
// tests reset them around a call and read the totals back.
struct OpCounters {
  std::uint64_t contains = 0;
  std::uint64_t quad_roots = 0;
  std::uint64_t raycasts = 0;
  std::uint64_t nextpt_calls = 0;
  std::uint64_t prev_calls = 0;
  std::uint64_t loop_iterations = 0;
  // Largest search-loop iteration count of a single nextpt call whose start
  // point is outside the 1 < y < 2 exception band.
  std::uint64_t max_loop_iterations = 0;
  // Same, for calls started inside the band.
  std::uint64_t max_loop_iterations_band = 0;
  // Largest number of contains() calls made by a single raycast.
  std::uint64_t max_contains_per_raycast = 0;
};

inline thread_local OpCounters op_counters;

inline void reset_counters() { op_counters = OpCounters{}; }

}  // namespace hyperhull

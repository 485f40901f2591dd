#pragma once

// Run a computation on the fast 128-bit scalar and redo it with unbounded
// integers if any intermediate overflows.  `fn` is a generic callable taking a
// type tag: fn(std::type_identity<FastInt>{}) or
// fn(std::type_identity<BigInt>{}).

#include <type_traits>

#include "hyperhull/errors.hpp"
#include "hyperhull/exactmath.hpp"

namespace hyperhull {

template <class Fn>
auto with_fallback(Fn&& fn) {
  try {
    return fn(std::type_identity<FastInt>{});
  } catch (const Overflow&) {
    return fn(std::type_identity<BigInt>{});
  }
}

}  // namespace hyperhull

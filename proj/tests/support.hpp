#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperhull/hyperhull.hpp"
#include "hyperhull/oracle.hpp"

namespace hh_test {

using namespace hyperhull;

using Q = Rat<FastInt>;
using P = Point2<FastInt>;
using V = Vec2<FastInt>;
using L = AffineLattice<FastInt>;

inline Q q(long long a, long long b = 1) { return Q(FastInt(a), FastInt(b)); }
inline P pt(const Q& x, const Q& y) { return {x, y}; }
inline P pt(long long x, long long y) { return {q(x), q(y)}; }
inline V vec(const Q& x, const Q& y) { return {x, y}; }
inline V vec(long long x, long long y) { return {q(x), q(y)}; }

inline L lattice(V w1, V w2, P anchor = pt(0, 0)) {
  return {anchor, standard_basis(Basis2<FastInt>{w1, w2})};
}

inline L z2() { return integer_lattice<FastInt>(); }

inline std::vector<P> points(std::initializer_list<std::pair<long long, long long>> xs) {
  std::vector<P> out;
  for (const auto& [x, y] : xs) out.push_back(pt(x, y));
  return out;
}

// Fixed seeds keep failures reproducible.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed'0000ULL + salt); }

inline long long uniform(std::mt19937_64& g, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(g);
}

inline Q random_rat(std::mt19937_64& g, long long lim, long long den_lim) {
  return q(uniform(g, -lim, lim), uniform(g, 1, den_lim));
}

// Brute-force hull of Z^2 ∩ H_n through the oracle.
inline std::vector<P> oracle_hull(const Q& n, const L& lat) {
  return oracle::brute_hull(oracle::staircase(n, lat));
}

// Solves c1*w1 + c2*w2 = v exactly and reports whether c1, c2 are integers.
inline bool integer_combination(const V& v, const Basis2<FastInt>& b) {
  const Q d = det(b.w1, b.w2);
  const Q c1 = det(v, b.w2) / d;
  const Q c2 = det(b.w1, v) / d;
  return c1.is_integer() && c2.is_integer();
}

}  // namespace hh_test

#pragma once

// Vertex counts V(n) of conv(H_n ∩ Z^2) and exact checks of
//     2 (n/Δ)^{1/3} - 2  <=  V  <=  C m^{1/3} (log2 m + 2),   m = max(n/Δ, 2Δ).
// Both sides are tested with integer arithmetic only: the lower bound by
// cubing, the upper bound with C rounded up to 541/50 and log2 m rounded up
// to an integer.

#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "hyperhull/errors.hpp"
#include "hyperhull/fallback.hpp"
#include "hyperhull/hull.hpp"

namespace hyperhull {

// Rational upper approximation of (2^8 π^2 / 2)^{1/3} ≈ 10.810.
inline constexpr int kUpperConstantNum = 541;
inline constexpr int kUpperConstantDen = 50;
// Best constant reachable by optimizing the base of the logarithm; reported
// only, never used for pass/fail.
inline constexpr double kOptimizedUpperConstant = 8.205;

struct BoundReport {
  BigInt n;
  BigInt v;
  bool lower_ok = false;
  bool upper_ok = false;
  Rat<BigInt> m;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

// m = max(n/Δ, 2Δ)
inline Rat<BigInt> bound_m(const BigInt& n, const BigInt& delta) {
  if (n < 1 || delta < 1) throw PreconditionError("bounds need n >= 1 and delta >= 1");
  const Rat<BigInt> a(n, delta);
  const Rat<BigInt> b(BigInt(2 * delta));
  return a < b ? b : a;
}

// (v + 2)^3 Δ >= 8 n
inline bool lower_bound_holds(const BigInt& v, const BigInt& n, const BigInt& delta) {
  if (n < 1 || delta < 1) throw PreconditionError("bounds need n >= 1 and delta >= 1");
  const BigInt s = v + 2;
  if (s < 0) return false;
  return s * s * s * delta >= 8 * n;
}

// v <= (541/50) m^{1/3} (L + 2) with L the least integer such that 2^L >= m,
// cubed: 50^3 v^3 den(m) <= 541^3 num(m) (L + 2)^3.
inline bool upper_bound_holds(const BigInt& v, const BigInt& n, const BigInt& delta) {
  const Rat<BigInt> m = bound_m(n, delta);
  if (v <= 0) return true;
  const BigInt c = m.ceil();
  const BigInt log2_up(bit_length(BigInt(c - 1)));
  const BigInt l2 = log2_up + 2;
  const BigInt cn(kUpperConstantNum), cd(kUpperConstantDen);
  return cd * cd * cd * v * v * v * m.den() <= cn * cn * cn * m.num() * l2 * l2 * l2;
}

template <ExactInteger I>
std::uint64_t count_vertices_as(const Rat<I>& n, const AffineLattice<I>& lat) {
  std::uint64_t count = 0;
  walk_hull(n, lat, [&](const Point2<I>&) {
    ++count;
    return true;
  });
  return count;
}

// V(n) over Z^2.
inline std::uint64_t count_vertices(const BigInt& n) {
  if (n < 1) throw PreconditionError("count_vertices needs n >= 1");
  return with_fallback([&]<class I>(std::type_identity<I>) {
    return count_vertices_as(Rat<I>(int_cast<I>(n)), integer_lattice<I>());
  });
}

inline BoundReport bound_report(const BigInt& n) {
  const BigInt v(count_vertices(n));
  const BigInt one(1);
  return {n, v, lower_bound_holds(v, n, one), upper_bound_holds(v, n, one), bound_m(n, one)};
}

// Emits one report per n in [from, to] in ascending order.  With chunks > 1
// blocks of the range are counted by that many threads and merged in order.
// Throws BoundViolation carrying n as soon as a report fails either bound;
// every earlier report has already been passed to the sink.
inline void scan(const BigInt& from, const BigInt& to, const std::function<void(const BoundReport&)>& sink,
                 unsigned chunks = 1) {
  if (from < 1) throw PreconditionError("scan needs from >= 1");
  if (from > to) throw PreconditionError("scan needs from <= to");
  if (chunks == 0) throw PreconditionError("scan needs at least one chunk");

  const auto emit = [&](const BoundReport& r) {
    if (!r.lower_ok || !r.upper_ok) {
      throw BoundViolation(std::string(r.lower_ok ? "upper" : "lower") + " vertex-count bound fails at n = " + r.n.str(),
                           r.n.str());
    }
    sink(r);
  };

  if (chunks == 1) {
    for (BigInt n = from; n <= to; ++n) emit(bound_report(n));
    return;
  }

  constexpr unsigned kPerWorker = 1024;
  const BigInt block(static_cast<std::uint64_t>(chunks) * kPerWorker);
  for (BigInt lo = from; lo <= to; lo += block) {
    std::vector<std::vector<BoundReport>> parts(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (unsigned w = 0; w < chunks; ++w) {
      const BigInt a = lo + BigInt(static_cast<std::uint64_t>(w) * kPerWorker);
      const BigInt b_full = a + BigInt(kPerWorker - 1);
      const BigInt b = b_full < to ? b_full : to;
      workers.emplace_back([&, w, a, b] {
        try {
          for (BigInt n = a; n <= b; ++n) parts[w].push_back(bound_report(n));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (unsigned w = 0; w < chunks; ++w) {
      for (const auto& r : parts[w]) emit(r);
      if (errors[w]) std::rethrow_exception(errors[w]);
    }
  }
}

inline void write_csv_header(std::ostream& os) { os << "n,V,lower_ok,upper_ok\n"; }

inline void write_csv_row(std::ostream& os, const BoundReport& r) {
  os << r.n.str() << ',' << r.v.str() << ',' << (r.lower_ok ? "true" : "false") << ','
     << (r.upper_ok ? "true" : "false") << '\n';
}

}  // namespace hyperhull

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hh_test;

namespace {

BigInt B(long long v) { return BigInt(v); }

std::vector<BigInt> trial_divisors(long long n) {
  std::vector<BigInt> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(B(d));
    if (d * d != n) large.push_back(B(n / d));
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<BigInt> trial_smallest(long long n) {
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return B(d);
  }
  return std::nullopt;
}

unsigned ceil_log2(long long v) {
  unsigned k = 0;
  while ((1LL << k) < v) ++k;
  return k;
}

}  // namespace

TEST(DivisorsViaHull, Examples) {
  EXPECT_EQ(divisors_via_hull(B(14)).divisors, (std::vector<BigInt>{B(1), B(2), B(7), B(14)}));
  EXPECT_EQ(divisors_via_hull(B(13)).divisors, (std::vector<BigInt>{B(1), B(13)}));
  EXPECT_EQ(divisors_via_hull(B(12)).divisors, (std::vector<BigInt>{B(1), B(2), B(3), B(4), B(6), B(12)}));
  EXPECT_EQ(divisors_via_hull(B(1)).divisors, (std::vector<BigInt>{B(1)}));
  EXPECT_EQ(divisors_via_hull(B(49)).divisors, (std::vector<BigInt>{B(1), B(7), B(49)}));
  EXPECT_EQ(divisors_via_hull(B(14)).first_nontrivial, B(2));
  EXPECT_EQ(divisors_via_hull(B(13)).first_nontrivial, std::nullopt);
  EXPECT_THROW(divisors_via_hull(B(0)), PreconditionError);
}

TEST(DivisorsViaHull, MatchesTrialDivision) {
  for (long long n = 1; n <= 3000; ++n) {
    const auto out = divisors_via_hull(B(n));
    ASSERT_EQ(out.divisors, trial_divisors(n)) << n;
    for (const BigInt& d : out.divisors) ASSERT_EQ(d * (B(n) / d), B(n));
  }
}

TEST(FindFactor, Examples) {
  EXPECT_EQ(find_factor(B(15), 1), B(3));
  EXPECT_EQ(find_factor(B(13), 4), std::nullopt);
  EXPECT_EQ(find_factor(B(192), 3), B(2));
  EXPECT_EQ(find_factor(B(2), 1), std::nullopt);
  EXPECT_EQ(find_factor(B(4), 5), B(2));
  EXPECT_THROW(find_factor(B(1), 1), PreconditionError);
  EXPECT_THROW(find_factor(B(10), 0), PreconditionError);
}

TEST(FindFactor, ChunkCountInvariant) {
  for (long long n = 2; n <= 2000; ++n) {
    const auto want = trial_smallest(n);
    for (unsigned chunks : {1U, 2U, 4U, 8U}) ASSERT_EQ(find_factor(B(n), chunks), want) << n << " chunks=" << chunks;
  }
}

TEST(FindFactor, NextptBudget) {
  for (long long n = 2; n <= 3000; n += 7) {
    const BigInt root = floor_sqrt(B(n));
    std::uint64_t hull_prefix = 0;
    walk_hull(q(n), z2(), [&](const P& p) {
      if (q(static_cast<long long>(root)) < p.x) return false;
      ++hull_prefix;
      return true;
    });
    for (unsigned chunks : {1U, 3U, 8U}) {
      const auto r = find_factor_detailed(B(n), chunks);
      const std::uint64_t forward = r.stats.nextpt_calls - r.stats.prev_calls;
      ASSERT_LE(forward, hull_prefix + chunks * (ceil_log2(2 * n) + 2)) << n << " chunks=" << chunks;
    }
  }
}

TEST(FindFactor, TwelveDigitSemiprime) {
  const BigInt n = B(999'983) * B(1'000'003);
  EXPECT_EQ(find_factor(n, 1), B(999'983));
}

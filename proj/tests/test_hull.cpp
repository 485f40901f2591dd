#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace hh_test;

namespace {

const std::vector<P> kChain14 = points({{1, 14}, {2, 7}, {3, 5}, {5, 3}, {7, 2}, {14, 1}});

L parity_lattice() { return lattice(vec(1, 1), vec(0, 2)); }

std::vector<P> walk(const Q& n, const L& lat) { return enumerate_hull(n, lat).points; }

}  // namespace

TEST(FirstVertex, Examples) {
  EXPECT_EQ(first_vertex(q(14), z2()), pt(1, 14));
  EXPECT_EQ(first_vertex(q(6), parity_lattice()), pt(1, 7));
  EXPECT_EQ(first_vertex(q(1), z2()), pt(1, 1));
}

TEST(FirstVertex, RationalAnchorLandsOnLeftmostPositiveColumn) {
  // Anchor x = 5/2 with b1.x = 1: the leftmost positive column is x = 1/2.
  const L l{pt(q(5, 2), q(0)), standard_basis(Basis2<FastInt>{vec(1, 0), vec(0, 1)})};
  EXPECT_EQ(first_vertex(q(3), l), pt(q(1, 2), q(6)));
  // Anchor on a column: x = 3 maps to x = 1.
  const L m{pt(3, 0), z2().basis};
  EXPECT_EQ(first_vertex(q(3), m).x, q(1));
  EXPECT_THROW(first_vertex(q(0), z2()), PreconditionError);
}

TEST(Nextpt, Examples) {
  EXPECT_EQ(nextpt(q(14), z2(), pt(1, 14)), std::optional<P>(pt(2, 7)));
  EXPECT_EQ(nextpt(q(14), z2(), pt(14, 1)), std::nullopt);
  EXPECT_EQ(nextpt(q(14), z2(), pt(4, 4)), std::optional<P>(pt(5, 3)));
}

TEST(Nextpt, Preconditions) {
  EXPECT_THROW(nextpt(q(14), z2(), pt(3, 4)), PreconditionError);
  EXPECT_THROW(nextpt(q(14), z2(), pt(q(3, 2), q(20))), PreconditionError);
  EXPECT_THROW(nextpt(q(14), parity_lattice(), pt(1, 14)), PreconditionError);
}

TEST(Nextpt, StraightDownWhenColumnContinues) {
  EXPECT_EQ(nextpt(q(14), z2(), pt(1, 20)), std::optional<P>(pt(1, 14)));
}

TEST(Minsl, Examples) {
  EXPECT_EQ(minsl(q(14), z2(), pt(1, 14)), vec(1, -7));
  EXPECT_EQ(minsl(q(14), z2(), pt(3, 5)), vec(1, -1));
  EXPECT_EQ(minsl(q(14), z2(), pt(14, 1)), vec(1, 0));
}

TEST(EnumerateHull, Examples) {
  EXPECT_EQ(walk(q(14), z2()), kChain14);
  EXPECT_EQ(walk(q(4), z2()), points({{1, 4}, {2, 2}, {4, 1}}));
  EXPECT_EQ(walk(q(1), z2()), points({{1, 1}}));
  EXPECT_EQ(walk(q(6), parity_lattice()), points({{1, 7}, {2, 4}, {4, 2}, {7, 1}}));
}

TEST(EnumerateHull, StreamingWalkStopsOnRequest) {
  std::vector<P> seen;
  walk_hull(q(14), z2(), [&](const P& p) {
    seen.push_back(p);
    return seen.size() < 3;
  });
  EXPECT_EQ(seen, std::vector<P>(kChain14.begin(), kChain14.begin() + 3));
}

TEST(LastVertexException, Examples) {
  const L half{pt(q(0), q(1, 2)), z2().basis};
  EXPECT_EQ(last_vertex_exception(q(14), half, pt(q(10), q(3, 2))), pt(q(28), q(1, 2)));
  EXPECT_EQ(last_vertex_exception(q(5), half, pt(q(4), q(3, 2))), pt(q(10), q(1, 2)));
  // Same answer as the bottommost point of the first reflected column past the bound.
  const L r = reflect(half);
  const P via_reflection = first_vertex(q(14), L{pt(q(1, 2), q(28)), r.basis});
  EXPECT_EQ(via_reflection.swapped(), pt(q(28), q(1, 2)));
}

TEST(LastVertexException, Preconditions) {
  const L half{pt(q(0), q(1, 2)), z2().basis};
  EXPECT_THROW(last_vertex_exception(q(14), half, pt(q(10), q(5, 2))), PreconditionError);
  EXPECT_THROW(last_vertex_exception(q(14), L{pt(0, 0), standard_basis(Basis2<FastInt>{vec(2, 0), vec(0, 2)})},
                                     pt(q(10), q(3, 2))),
               PreconditionError);
  EXPECT_THROW(last_vertex_exception(q(14), half, pt(q(2), q(3, 2))), PreconditionError);
}

TEST(EnumerateHull, HalfIntegerRowsUseTheExceptionPath) {
  for (int n = 1; n <= 60; ++n) {
    const L half{pt(q(0), q(1, 2)), z2().basis};
    EXPECT_EQ(walk(q(n), half), oracle_hull(q(n), half)) << "n=" << n;
  }
}

TEST(PrevVertex, Examples) {
  EXPECT_EQ(prev_vertex(q(14), z2(), pt(3, 5)), std::optional<P>(pt(2, 7)));
  EXPECT_EQ(prev_vertex(q(14), z2(), pt(1, 14)), std::nullopt);
}

TEST(NextVertexFromX, Examples) {
  EXPECT_EQ(next_vertex_from_x(q(14), z2(), q(4)), std::optional<P>(pt(5, 3)));
  EXPECT_EQ(next_vertex_from_x(q(14), z2(), q(1)), std::optional<P>(pt(1, 14)));
  EXPECT_EQ(next_vertex_from_x(q(14), z2(), q(8)), std::optional<P>(pt(14, 1)));
  EXPECT_EQ(next_vertex_from_x(q(14), z2(), q(15)), std::nullopt);
  EXPECT_EQ(next_vertex_from_x(q(14), z2(), q(0)), std::optional<P>(pt(1, 14)));
  EXPECT_EQ(next_vertex_from_x(q(14), z2(), q(5, 2)), std::optional<P>(pt(3, 5)));
}

TEST(LastVertex, MirrorsFirstVertex) {
  EXPECT_EQ(last_vertex(q(14), z2()), pt(14, 1));
  EXPECT_EQ(last_vertex(q(6), parity_lattice()), pt(7, 1));
}

// --- properties ----------------------------------------------------------------

TEST(HullProperty, MatchesOracleOnIntegerLattice) {
  for (int n = 1; n <= 1500; ++n) {
    const auto path = enumerate_hull(q(n), z2());
    ASSERT_EQ(path.points, oracle_hull(q(n), z2())) << "n=" << n;
    ASSERT_TRUE(is_strict_convex_chain(path)) << "n=" << n;
  }
}

TEST(HullProperty, MatchesOracleOnRandomLattices) {
  auto g = rng(30);
  int reduced = 0;
  for (int i = 0; i < 600; ++i) {
    const bool rational = i % 3 == 2;
    const Basis2<FastInt> b = rational ? Basis2<FastInt>{vec(random_rat(g, 6, 3), random_rat(g, 6, 3)),
                                                         vec(random_rat(g, 6, 3), random_rat(g, 6, 3))}
                                       : Basis2<FastInt>{vec(uniform(g, -6, 6), uniform(g, -6, 6)),
                                                         vec(uniform(g, -6, 6), uniform(g, -6, 6))};
    if (det(b.w1, b.w2).sign() == 0) continue;
    const StdBasis<FastInt> s = standard_basis(b);
    if (s.det() > q(30)) continue;
    const L l{pt(random_rat(g, 5, 4), random_rat(g, 5, 4)), s};
    const Q n = q(uniform(g, 1, 300), uniform(g, 1, 3));
    const auto path = enumerate_hull(n, l);
    ASSERT_EQ(path.points, oracle_hull(n, l)) << "n=" << n << " b1=" << s.b1.x << "," << s.b1.y << " b2y=" << s.b2.y
                                              << " anchor=" << l.anchor;
    ASSERT_TRUE(is_strict_convex_chain(path));
    for (const P& p : path) {
      ASSERT_TRUE(contains(n, p));
      ASSERT_TRUE(lattice_contains(l, p));
    }
    reduced += is_reduced_sublattice(s);
  }
  EXPECT_GT(reduced, 50);
}

TEST(HullProperty, DiagonalSymmetry) {
  for (int n = 1; n <= 2000; ++n) {
    const auto path = walk(q(n), z2());
    std::vector<P> mirrored;
    for (auto it = path.rbegin(); it != path.rend(); ++it) mirrored.push_back(it->swapped());
    ASSERT_EQ(path, mirrored) << "n=" << n;
  }
}

TEST(HullProperty, DivisorPairsAreVertices) {
  for (int n = 1; n <= 2000; ++n) {
    const auto path = walk(q(n), z2());
    const std::set<std::pair<long long, long long>> on_curve = [&] {
      std::set<std::pair<long long, long long>> s;
      for (const P& p : path) {
        if (p.x * p.y == q(n)) s.insert({static_cast<long long>(p.x.num().native()), static_cast<long long>(p.y.num().native())});
      }
      return s;
    }();
    for (long long d = 1; d <= n; ++d) {
      if (n % d == 0) {
        ASSERT_TRUE(on_curve.count({d, n / d})) << n << " " << d;
      }
    }
  }
}

TEST(HullProperty, EveryLowColumnAndRowHoldsAVertex) {
  for (int n = 1; n <= 2000; ++n) {
    const auto path = walk(q(n), z2());
    long long c = 1;
    while ((c + 1) * (c + 1) * (c + 1) <= n) ++c;
    for (long long k = 1; k <= c; ++k) {
      const bool col = std::any_of(path.begin(), path.end(), [&](const P& p) { return p.x == q(k); });
      const bool row = std::any_of(path.begin(), path.end(), [&](const P& p) { return p.y == q(k); });
      ASSERT_TRUE(col && row) << "n=" << n << " k=" << k;
    }
  }
}

TEST(HullProperty, PrevUndoesNext) {
  for (int n = 1; n <= 200; ++n) {
    const auto path = walk(q(n), z2());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      ASSERT_EQ(nextpt(q(n), z2(), path[i]), std::optional<P>(path[i + 1]));
      ASSERT_EQ(prev_vertex(q(n), z2(), path[i + 1]), std::optional<P>(path[i]));
    }
  }
}

TEST(HullProperty, NextFromXMatchesFilteredChain) {
  for (int n = 1; n <= 300; ++n) {
    const auto path = walk(q(n), z2());
    for (int x = 0; x <= n + 1; ++x) {
      std::optional<P> want;
      for (const P& p : path) {
        if (!(p.x < q(x))) {
          want = p;
          break;
        }
      }
      ASSERT_EQ(next_vertex_from_x(q(n), z2(), q(x)), want) << "n=" << n << " x=" << x;
    }
  }
}

TEST(HullProperty, NextFromXOnRationalLattices) {
  auto g = rng(31);
  for (int i = 0; i < 200; ++i) {
    const Basis2<FastInt> b{vec(random_rat(g, 5, 2), random_rat(g, 5, 2)), vec(random_rat(g, 5, 2), random_rat(g, 5, 2))};
    if (det(b.w1, b.w2).sign() == 0) continue;
    const L l{pt(random_rat(g, 4, 3), random_rat(g, 4, 3)), standard_basis(b)};
    if (l.basis.det() > q(20)) continue;
    const Q n = q(uniform(g, 1, 120));
    const auto path = walk(n, l);
    for (int k = 0; k < 10; ++k) {
      const Q xs = q(uniform(g, 0, 300), uniform(g, 1, 4));
      std::optional<P> want;
      for (const P& p : path) {
        if (!(p.x < xs)) {
          want = p;
          break;
        }
      }
      ASSERT_EQ(next_vertex_from_x(n, l, xs), want);
    }
  }
}

// From a non-vertex p, Nextpt lands at less than half of p's distance to the
// hull edge below p, and no further right than that edge's right end.
TEST(HullProperty, NextptHalvesDistanceToEdgeBelow) {
  int checked = 0;
  for (int n = 2; n <= 400; ++n) {
    const auto path = walk(q(n), z2());
    const Q last_x = path.back().x;
    for (long long x = 1; q(x) < last_x + q(5); ++x) {
      const P p = pt(q(x), Q(ceil_div(FastInt(n), FastInt(x))));
      if (std::find(path.begin(), path.end(), p) != path.end()) continue;
      // Edge below p: [u, v] with u.x <= p.x < v.x, or the horizontal tail.
      std::size_t k = 0;
      while (k + 1 < path.size() && !(p.x < path[k + 1].x)) ++k;
      const P u = path[k];
      const bool tail = k + 1 == path.size();
      const auto gap = [&](const P& r) {
        if (tail) return r.y - u.y;
        const P& v = path[k + 1];
        return r.y - (u.y + (v.y - u.y) * (r.x - u.x) / (v.x - u.x));
      };
      // Points on an edge have no gap left to halve.
      if (gap(p).sign() == 0) continue;
      const auto next = nextpt(q(n), z2(), p);
      if (!next) continue;
      ASSERT_LT(gap(*next) * Q(2), gap(p)) << "n=" << n << " p=" << p;
      if (!tail) {
        ASSERT_LE(next->x, path[k + 1].x);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000);
}

TEST(HullProperty, LoopIterationsStayLogarithmic) {
  for (int n = 1; n <= 3000; ++n) {
    reset_counters();
    walk(q(n), z2());
    const unsigned bound = 3 * (bit_length(FastInt(n + 1 + 2)) - 1) + 12;
    ASSERT_LE(op_counters.max_loop_iterations, bound) << "n=" << n;
  }
}

TEST(HullProperty, InvariantCheckerRejectsBadBasis) {
  EXPECT_THROW(detail::check_search_basis(q(14), z2().basis, pt(1, 14), SearchBasis<FastInt>{vec(0, 1), vec(1, -1)}),
               InvariantViolation);
  EXPECT_NO_THROW(detail::check_search_basis(q(14), z2().basis, pt(1, 14), SearchBasis<FastInt>{vec(1, 0), vec(0, -1)}));
}

TEST(HullProperty, BigIntInstantiationAgrees) {
  const AffineLattice<BigInt> lat = integer_lattice<BigInt>();
  for (int n : {1, 4, 14, 97, 1000}) {
    const auto big = enumerate_hull(Rat<BigInt>(n), lat);
    const auto fast = walk(q(n), z2());
    ASSERT_EQ(big.size(), fast.size());
    for (std::size_t i = 0; i < big.size(); ++i) {
      ASSERT_EQ(big[i].x.str(), fast[i].x.str());
      ASSERT_EQ(big[i].y.str(), fast[i].y.str());
    }
  }
}

TEST(HullProperty, LargeLevelFallsBackToBigInt) {
  // 10^30 fits in 128 bits but its squares inside the ray casts do not.
  const BigInt n = parse_int<BigInt>("1000000000000000000000000000000");
  const auto first_two = with_fallback([&]<class I>(std::type_identity<I>) {
    std::vector<std::string> out;
    walk_hull(Rat<I>(int_cast<I>(n)), integer_lattice<I>(), [&](const Point2<I>& p) {
      out.push_back(p.x.str() + "," + p.y.str());
      return out.size() < 2;
    });
    return out;
  });
  ASSERT_EQ(first_two.size(), 2U);
  EXPECT_EQ(first_two[0], "1," + n.str());
  EXPECT_EQ(first_two[1], "2," + BigInt(n / 2).str());
}

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpoly/polymatroid.h"

#include <gtest/gtest.h>

#include <random>

#include "kpoly/errors.h"
#include "kpoly/mobius.h"
#include "kpoly/schubert.h"
#include "kpoly/stalactite.h"
#include "reference_data.h"

namespace kpoly {
namespace {

// All points of {0..max}^p.
std::vector<LatticePoint> box(std::size_t p, int max) {
  std::vector<LatticePoint> out;
  std::vector<int> c(p, 0);
  while (true) {
    out.emplace_back(c);
    std::size_t k = 0;
    while (k < p && c[k] == max) c[k++] = 0;
    if (k == p) break;
    ++c[k];
  }
  return out;
}

PointSet subset_of(const std::vector<LatticePoint>& pool, std::uint64_t mask, std::size_t p) {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask >> i & 1u) pts.push_back(pool[i]);
  }
  return PointSet(p, std::move(pts));
}

PointSet random_subset(std::mt19937_64& rng, std::size_t p, int max, std::size_t size) {
  std::vector<LatticePoint> pts;
  for (std::size_t k = 0; k < size; ++k) {
    std::vector<int> c(p);
    for (auto& x : c) x = static_cast<int>(rng() % (max + 1));
    pts.emplace_back(std::move(c));
  }
  return PointSet(p, std::move(pts));
}

PointSet drop_last_coordinate(const PointSet& s) {
  std::vector<LatticePoint> pts;
  for (const auto& x : s) {
    std::vector<int> c = x.coords();
    c.pop_back();
    pts.emplace_back(std::move(c));
  }
  return PointSet(s.ambient_p() - 1, std::move(pts));
}

void expect_methods_agree(const PointSet& g) {
  const bool a = is_g_polymatroid(g, GPolyMethod::kAxioms).holds();
  for (GPolyMethod m : kAllGPolyMethods) {
    EXPECT_EQ(is_g_polymatroid(g, m).holds(), a) << method_name(m) << " on " << g.to_string();
  }
}

TEST(BasePolymatroidTest, SpecExamples) {
  EXPECT_TRUE(is_base_polymatroid(reference::running_msupp()));
  EXPECT_FALSE(is_base_polymatroid(PointSet(2, {{1, 0}, {0, 2}})));
  const Verdict v = is_base_polymatroid(PointSet(2, {{2, 0}, {0, 2}}));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness()->rule, "exchange");
  EXPECT_TRUE(is_base_polymatroid(PointSet(3)));
}

TEST(SymmetricExchangeTest, HoldsOnEveryBasePolymatroidInSmallBox) {
  // Group {0,1,2}^3 by coordinate sum and try every nonempty subset of a level.
  const auto pool = box(3, 2);
  int tested = 0;
  for (int level = 0; level <= 6; ++level) {
    std::vector<LatticePoint> layer;
    for (const auto& x : pool) {
      if (x.sum() == level) layer.push_back(x);
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << layer.size()); ++mask) {
      const PointSet s = subset_of(layer, mask, 3);
      if (!is_base_polymatroid(s)) continue;
      ++tested;
      EXPECT_TRUE(check_symmetric_exchange(s)) << s.to_string();
    }
  }
  EXPECT_GT(tested, 50);
  EXPECT_TRUE(check_symmetric_exchange(reference::running_msupp()));
  EXPECT_TRUE(check_symmetric_exchange(PointSet(2, {{1, 1}})));
  EXPECT_THROW(check_symmetric_exchange(PointSet(2, {{2, 0}, {0, 2}})), PreconditionError);
}

TEST(GPolymatroidTest, SpecExamples) {
  for (GPolyMethod m : kAllGPolyMethods) {
    EXPECT_TRUE(is_g_polymatroid(reference::running_hilbert3().keys(), m)) << method_name(m);
    EXPECT_FALSE(is_g_polymatroid(PointSet(2, {{0, 0}, {1, 1}}), m)) << method_name(m);
    EXPECT_TRUE(is_g_polymatroid(reference::running_msupp(), m)) << method_name(m);
    EXPECT_TRUE(is_g_polymatroid(PointSet(2), m));
  }
  EXPECT_EQ(is_g_polymatroid(PointSet(2, {{0, 0}, {1, 1}})).witness()->rule, "expansion");
}

TEST(GPolymatroidTest, MethodsAgreeExhaustivelyOnTinyBoxes) {
  for (const auto& [p, max] : std::vector<std::pair<std::size_t, int>>{{1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    const auto pool = box(p, max);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
      expect_methods_agree(subset_of(pool, mask, p));
    }
  }
}

TEST(GPolymatroidTest, MethodsAgreeOnRandomSets) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t p = 2 + rng() % 3;
    expect_methods_agree(random_subset(rng, p, 3, 1 + rng() % 10));
  }
}

TEST(GPolymatroidTest, ProjectionsOfPolymatroidsAreAccepted) {
  // Dropping a coordinate of a base polymatroid gives a g-polymatroid.
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const PointSet base = random_polymatroid(2 + seed % 3, 3, seed);
    const PointSet g = drop_last_coordinate(base);
    for (GPolyMethod m : kAllGPolyMethods) {
      EXPECT_TRUE(is_g_polymatroid(g, m)) << method_name(m) << " " << g.to_string();
    }
  }
}

TEST(GPolymatroidTest, TightBoundsAloneAreNotEnough) {
  // Its tight bounds cut out exactly this set, yet Expansion fails for
  // (0,1,0) against (1,0,1); the bound pair is not paramodular.
  const PointSet g(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}});
  const GPolyInequalitySystem sys = inequality_system(g);
  EXPECT_EQ(integer_points(sys), g);
  EXPECT_FALSE(is_paramodular(sys));
  EXPECT_FALSE(is_g_polymatroid(g, GPolyMethod::kAxioms));
  EXPECT_FALSE(is_g_polymatroid(g, GPolyMethod::kHomogenization));
  EXPECT_FALSE(is_g_polymatroid(g, GPolyMethod::kInequalityPoints));
}

TEST(GPolymatroidTest, IntegerPointsRecoverEveryGPolymatroid) {
  std::mt19937_64 rng(99);
  int positives = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const PointSet g = random_subset(rng, 2 + rng() % 2, 2, 1 + rng() % 8);
    if (!is_g_polymatroid(g)) continue;
    ++positives;
    EXPECT_EQ(integer_points(inequality_system(g)), g);
  }
  EXPECT_GT(positives, 20);
}

TEST(InequalitySystemTest, RunningExampleBounds) {
  // Exponent vectors of the K-polynomial, first three coordinates.
  std::vector<LatticePoint> pts;
  for (const auto& t : reference::running_kpoly()) {
    pts.push_back(LatticePoint{t.exponent[0], t.exponent[1], t.exponent[2]});
  }
  const PointSet supp(3, pts);
  const GPolyInequalitySystem sys = inequality_system(supp);
  for (const auto& b : reference::running_bounds()) {
    std::uint32_t mask = 0;
    for (std::size_t i : b.subset) mask |= 1u << i;
    EXPECT_EQ(sys.c(mask), b.lower) << mask;
    EXPECT_EQ(sys.b(mask), b.upper) << mask;
  }
  EXPECT_EQ(integer_points(sys), supp);
  EXPECT_TRUE(is_paramodular(sys));
}

TEST(InequalitySystemTest, SmallCases) {
  const PointSet single(3, {{1, 2, 0}});
  const GPolyInequalitySystem s1 = inequality_system(single);
  for (std::uint32_t mask = 1; mask < 8; ++mask) EXPECT_EQ(s1.c(mask), s1.b(mask));
  EXPECT_EQ(s1.b(0b011u), 3);

  const GPolyInequalitySystem homog = inequality_system(reference::running_msupp());
  EXPECT_EQ(homog.c(0b11111u), homog.b(0b11111u));

  GPolyInequalitySystem interval{1, {0, 2}, {0, 4}};
  EXPECT_EQ(integer_points(interval), PointSet(1, {{2}, {3}, {4}}));
  GPolyInequalitySystem empty{1, {0, 5}, {0, 4}};
  EXPECT_TRUE(integer_points(empty).empty());
  EXPECT_THROW(inequality_system(PointSet(2)), ArgumentError);
}

TEST(RankFunctionTest, UniformMatroidBasePolytope) {
  const std::vector<std::int64_t> rank{0, 1, 1, 2, 1, 2, 2, 2};
  EXPECT_TRUE(is_polymatroid_rank(3, rank));
  EXPECT_EQ(base_polytope_points(3, rank), PointSet(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  const std::vector<std::int64_t> not_sub{0, 1, 1, 3};
  EXPECT_FALSE(is_polymatroid_rank(2, not_sub));
}

PointSet running_hilbert_support_3() { return reference::running_hilbert3().keys(); }

TEST(CaveTest, RunningExampleUnderBothOrders) {
  const PointSet c = running_hilbert_support_3();
  EXPECT_TRUE(is_cave(c, CaveOrderPolicy::natural()));
  EXPECT_TRUE(is_cave(c, CaveOrderPolicy::all_orders()));
  EXPECT_EQ(stalactite_union(top(c), natural_order(3)),
            stalactite_union(top(c), AxisOrder{2, 0, 1}));
}

TEST(CaveTest, SingletonIsACave) {
  // Every truncation is {(1,1)} or empty, and each condition holds.
  EXPECT_TRUE(is_cave(PointSet(2, {{1, 1}})));
}

TEST(CaveTest, GapBelowTopIsNotACave) {
  const Verdict v = is_cave(PointSet(2, {{0, 0}, {1, 1}}));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness()->rule, "stalactite-union");
}

TEST(CaveTest, ZeroOneHilbertSupportsInS4) {
  int zero_one = 0;
  for (std::uint64_t r = 0; r < 24; ++r) {
    const Permutation w = Permutation::unrank(4, r);
    if (!is_zero_one(w)) continue;
    ++zero_one;
    const PointSet h = hsupp_from_msupp(msupp_of_matrix_schubert(w).msupp).keys();
    EXPECT_TRUE(is_cave(h)) << w.to_string();
  }
  EXPECT_EQ(zero_one, 24);
}

TEST(CaveTest, CavesAreGPolymatroids) {
  std::mt19937_64 rng(8);
  int caves = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const PointSet c = random_subset(rng, 2, 2, 1 + rng() % 6);
    if (!is_cave(c)) continue;
    ++caves;
    EXPECT_TRUE(is_g_polymatroid(c)) << c.to_string();
  }
  EXPECT_GT(caves, 10);
}

TEST(CaveTest, OrderPolicies) {
  EXPECT_EQ(cave_orders(3, CaveOrderPolicy::all_orders()).size(), 6u);
  EXPECT_EQ(cave_orders(3, CaveOrderPolicy::natural()).size(), 1u);
  EXPECT_THROW(cave_orders(7, CaveOrderPolicy::all_orders()), ArgumentError);
  const auto a = cave_orders(7, CaveOrderPolicy::sample(5, 42));
  EXPECT_EQ(a, cave_orders(7, CaveOrderPolicy::sample(5, 42)));
  EXPECT_EQ(a.size(), 5u);
  EXPECT_THROW(is_cave(PointSet(2)), ArgumentError);
}

}  // namespace
}  // namespace kpoly

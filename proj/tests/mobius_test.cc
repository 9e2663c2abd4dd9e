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

#include "kpoly/mobius.h"

#include <gtest/gtest.h>

#include "kpoly/errors.h"
#include "kpoly/monomial_oracle.h"
#include "kpoly/polymatroid.h"
#include "kpoly/schubert.h"
#include "kpoly/stalactite.h"
#include "reference_data.h"

namespace kpoly {
namespace {

Matroid uniform(std::size_t r, std::size_t n) {
  std::vector<LatticePoint> bases;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    std::vector<int> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = mask >> i & 1u;
    bases.emplace_back(std::move(c));
  }
  return Matroid(PointSet(n, std::move(bases)));
}

TEST(DownsetTest, Box) {
  EXPECT_EQ(downset(PointSet(2, {{1, 1}})), PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  const PointSet d = downset(reference::running_msupp());
  EXPECT_TRUE(reference::running_msupp().is_subset_of(d));
  EXPECT_TRUE(hsupp_from_msupp(reference::running_msupp()).keys().is_subset_of(d));
  for (const auto& u : d) {
    for (std::size_t i = 0; i < 5; ++i) {
      if (u[i] > 0) EXPECT_TRUE(d.contains(u.sub_unit(i)));
    }
  }
}

TEST(MobiusTest, TopPointsAndRunningExample) {
  const SignedSupport mu = mobius_to_top(reference::running_msupp());
  for (const auto& t : reference::running_msupp()) EXPECT_EQ(mu.coefficient(t), -1);
  EXPECT_EQ(mu.coefficient(LatticePoint{1, 3, 3, 4, 4}), 2);
  EXPECT_THROW(mobius_to_top(PointSet(2, {{2, 0}, {0, 2}})), PreconditionError);
}

TEST(MobiusTest, ClosedFormMatchesRecursion) {
  EXPECT_EQ(mobius_to_top(reference::running_top3()),
            mobius_to_top_recursive(reference::running_top3()));
  for (std::size_t p = 1; p <= 5; ++p) {
    for (const auto& m : enumerate_matroids(p)) {
      EXPECT_EQ(mobius_to_top(m.bases()), mobius_to_top_recursive(m.bases()));
    }
  }
  EXPECT_THROW(mobius_to_top_recursive(reference::running_msupp(), 10), ResourceError);
}

TEST(MobiusTest, DegEqualsNegativeMobius) {
  EXPECT_TRUE(verify_deg_equals_neg_mobius(reference::running_msupp()));
  EXPECT_TRUE(verify_deg_equals_neg_mobius(PointSet(2, {{2, 1}})));
  for (std::uint64_t r = 0; r < 24; ++r) {
    const Permutation w = Permutation::unrank(4, r);
    EXPECT_TRUE(verify_deg_equals_neg_mobius(msupp_of_matrix_schubert(w).msupp)) << w.to_string();
  }
}

TEST(MobiusTest, SingletonIsMinusOneOnlyAtTheTop) {
  const SignedSupport mu = mobius_to_top(PointSet(2, {{2, 1}}));
  SignedSupport expect(2);
  expect.add({2, 1}, -1);
  EXPECT_EQ(mu, expect);
}

TEST(MobiusTest, SignsAlternate) {
  for (std::uint64_t r = 0; r < 120; r += 7) {
    const Permutation w = Permutation::unrank(5, r);
    if (!is_zero_one(w)) continue;
    const PointSet msupp = msupp_of_matrix_schubert(w).msupp;
    const std::int64_t d = msupp[0].sum();
    for (const auto& [u, value] : mobius_to_top(msupp)) {
      EXPECT_EQ(value > 0, (d - u.sum() + 1) % 2 == 0) << u.to_string();
    }
  }
}

TEST(KpolyFromMobiusTest, Examples) {
  EXPECT_EQ(kpoly_from_mobius(reference::running_msupp(), reference::running_m()),
            reference::running_kpoly());
  EXPECT_EQ(kpoly_from_mobius(PointSet(2, {{2, 3}}), LatticePoint{2, 3}),
            IntPolynomial::constant(2, 1));
  for (std::uint64_t r = 0; r < 24; ++r) {
    const MatrixSchubertSupport ms = msupp_of_matrix_schubert(Permutation::unrank(4, r));
    EXPECT_EQ(kpoly_from_mobius(ms.msupp, ms.m), k_poly_ie(msupp_to_ideal(ms.msupp, ms.m)));
  }
  EXPECT_THROW(kpoly_from_mobius(PointSet(1, {{3}}), LatticePoint{2}), ArgumentError);
}

TEST(MuSupportTest, MatchesHilbertSupport) {
  EXPECT_EQ(mu_support(reference::running_msupp()),
            hsupp_from_msupp(reference::running_msupp()).keys());
}

TEST(MatroidTest, Validation) {
  EXPECT_THROW(Matroid(PointSet(2, {{2, 0}})), ArgumentError);
  EXPECT_THROW(Matroid(PointSet(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})), ArgumentError);
  EXPECT_THROW(Matroid(PointSet(2)), ArgumentError);
}

TEST(MatroidTest, Coloops) {
  EXPECT_TRUE(coloops(uniform(2, 3)).empty());
  EXPECT_EQ(coloops(Matroid(PointSet(3, {{1, 1, 0}}))), (std::vector<std::size_t>{0, 1}));
  // A coloop in position 0 plus U_{1,2} on {1,2}.
  const Matroid m(PointSet(3, {{1, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(coloops(m), (std::vector<std::size_t>{0}));
}

TEST(MatroidTest, Contraction) {
  const Matroid u23 = uniform(2, 3);
  EXPECT_EQ(contraction(u23, LatticePoint{0, 0, 0}).bases(), u23.bases());
  EXPECT_EQ(contraction(u23, LatticePoint{1, 0, 0}).bases(), uniform(1, 2).bases());
  const Matroid rank0 = contraction(u23, LatticePoint{1, 1, 0});
  EXPECT_EQ(rank0.ground_size(), 1u);
  EXPECT_EQ(rank0.bases(), PointSet(1, {{0}}));
  EXPECT_THROW(contraction(u23, LatticePoint{1, 1, 1}), ArgumentError);
}

TEST(MatroidTest, EulerCharacteristicAndMuSupport) {
  const Matroid u11(PointSet(1, {{1}}));
  EXPECT_EQ(reduced_euler_characteristic(u11), 0);
  EXPECT_EQ(mu_support(u11.bases()), PointSet(1, {{1}}));
  const Matroid u23 = uniform(2, 3);
  // Faces: empty, 3 points, 3 edges.
  EXPECT_EQ(reduced_euler_characteristic(u23), -1 + 3 - 3);
  EXPECT_EQ(mu_support(u23.bases()), downset(u23.bases()));
  EXPECT_TRUE(verify_matroid_mu_theorem(u11));
  EXPECT_TRUE(verify_matroid_mu_theorem(u23));
}

TEST(MatroidTest, EnumerationCounts) {
  // Counted by hand: p = 1 has {0}, {1}; p = 2 has {00}, {10}, {01}, {10,01}, {11}.
  EXPECT_EQ(enumerate_matroids(1).size(), 2u);
  EXPECT_EQ(enumerate_matroids(2).size(), 5u);
}

TEST(MatroidTest, MuDescriptionHoldsForAllSmallMatroids) {
  std::size_t total = 0;
  for (std::size_t p = 1; p <= 5; ++p) {
    for (const auto& m : enumerate_matroids(p)) {
      ++total;
      const Verdict v = verify_matroid_mu_theorem(m);
      EXPECT_TRUE(v) << m.bases().to_string() << " " << v.describe();
    }
  }
  EXPECT_GT(total, 100u);
}

TEST(ExploreTest, ReportsWithoutAsserting) {
  const ExploreReport a = explore_mu_support(30, 4, 3, 5);
  const ExploreReport b = explore_mu_support(30, 4, 3, 5);
  EXPECT_EQ(a.trials, 30u);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_LE(a.holds, a.trials);
}

TEST(RandomPolymatroidTest, OutputsArePolymatroidsWithinBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PointSet p = random_polymatroid(1 + seed % 5, 4, seed);
    EXPECT_FALSE(p.empty());
    EXPECT_TRUE(is_base_polymatroid(p));
    for (const auto& x : p) {
      for (int c : x) EXPECT_LE(c, 4);
    }
  }
}

}  // namespace
}  // namespace kpoly

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

#include "kpoly/linear_polymatroid.h"

#include <gtest/gtest.h>

#include "kpoly/errors.h"
#include "kpoly/mobius.h"
#include "kpoly/polymatroid.h"

namespace kpoly {
namespace {

RationalVector vec(std::initializer_list<std::int64_t> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 2), b(-2, 6);
  EXPECT_EQ(b, Rational(-1, 3));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(a + b, Rational(1, 6));
  EXPECT_EQ(a - b, Rational(5, 6));
  EXPECT_EQ(a * b, Rational(-1, 6));
  EXPECT_EQ(a / b, Rational(-3, 2));
  EXPECT_EQ((a / b).to_string(), "-3/2");
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(a / Rational(0), DomainError);
  EXPECT_THROW(Rational(INT64_MAX) * Rational(INT64_MAX), OverflowError);
}

TEST(MatrixRankTest, Examples) {
  EXPECT_EQ(matrix_rank({}), 0);
  EXPECT_EQ(matrix_rank({vec({1, 2}), vec({2, 4})}), 1);
  EXPECT_EQ(matrix_rank({vec({1, 2, 3}), vec({0, 1, 1}), vec({1, 3, 4})}), 2);
  EXPECT_EQ(matrix_rank({vec({0, 0}), vec({0, 3})}), 1);
  EXPECT_EQ(matrix_rank({{Rational(1, 3), Rational(1, 2)}, {Rational(2, 3), Rational(1)}}), 1);
}

TEST(LinearPolymatroidTest, IndependentLines) {
  SubspaceConfig c{3, {{vec({1, 0, 0})}, {vec({0, 1, 0})}, {vec({0, 0, 1})}}};
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(rank(c, all), 3);
  EXPECT_EQ(linear_polymatroid(c), PointSet(3, {{1, 1, 1}}));
}

TEST(LinearPolymatroidTest, RepeatedLine) {
  SubspaceConfig c{2, {{vec({1, 1})}, {vec({2, 2})}}};
  const std::vector<std::size_t> both{0, 1}, first{0};
  EXPECT_EQ(rank(c, both), rank(c, first));
  EXPECT_EQ(linear_polymatroid(c), PointSet(2, {{1, 0}, {0, 1}}));
}

TEST(LinearPolymatroidTest, ThreeLinesInAPlane) {
  SubspaceConfig c{2, {{vec({1, 0})}, {vec({0, 1})}, {vec({1, 1})}}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = i + 1; k < 3; ++k) {
      const std::vector<std::size_t> pair{i, k};
      EXPECT_EQ(rank(c, pair), 2);
    }
  }
  EXPECT_EQ(linear_polymatroid(c), PointSet(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(LinearPolymatroidTest, Validation) {
  SubspaceConfig zero{2, {{vec({0, 0})}}};
  EXPECT_THROW(zero.validate(), ArgumentError);
  SubspaceConfig wrong{2, {{vec({1, 0, 0})}}};
  EXPECT_THROW(wrong.validate(), ArgumentError);
}

TEST(LinearPolymatroidTest, RandomConfigsAreSubmodularPolymatroids) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SubspaceConfig c = random_config(1 + seed % 5, 1 + (seed / 5) % 5, seed);
    const std::vector<std::int64_t> table = rank_table(c);
    EXPECT_TRUE(is_polymatroid_rank(c.p(), table));
    const PointSet pts = linear_polymatroid(c);
    EXPECT_TRUE(is_base_polymatroid(pts));
    EXPECT_EQ(random_config(c.p(), c.q, seed).subspaces.size(), c.subspaces.size());
  }
}

TEST(LinearMuSupportTest, IsAGPolymatroid) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const SubspaceConfig c = random_config(2 + seed % 4, 2 + (seed / 4) % 4, seed);
    const PointSet supp = mu_support(linear_polymatroid(c));
    EXPECT_TRUE(is_g_polymatroid(supp)) << seed;
  }
}

}  // namespace
}  // namespace kpoly

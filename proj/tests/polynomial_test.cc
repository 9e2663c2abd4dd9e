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

#include "kpoly/polynomial.h"

#include <gtest/gtest.h>

#include <random>

#include "kpoly/errors.h"

namespace kpoly {
namespace {

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t n, int terms, int max_exp) {
  std::vector<IntPolynomial::Term> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(n);
    for (auto& x : e) x = static_cast<int>(rng() % (max_exp + 1));
    t.push_back({LatticePoint(e), static_cast<std::int64_t>(rng() % 7) - 3});
  }
  return IntPolynomial::from_terms(n, std::move(t));
}

// Oracle: evaluate at an integer point by direct expansion.
std::int64_t eval(const IntPolynomial& f, const std::vector<std::int64_t>& x) {
  std::int64_t total = 0;
  for (const auto& t : f) {
    std::int64_t v = t.coeff;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int k = 0; k < t.exponent[i]; ++k) v *= x[i];
    }
    total += v;
  }
  return total;
}

TEST(IntPolynomialTest, LikeTermsCombineAndZerosDrop) {
  const IntPolynomial f = IntPolynomial::from_terms(
      2, {{LatticePoint{1, 0}, 2}, {LatticePoint{0, 1}, 1}, {LatticePoint{1, 0}, -2}});
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f.coefficient(LatticePoint{0, 1}), 1);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).to_text(), "0");
}

TEST(IntPolynomialTest, CanonicalText) {
  const IntPolynomial f = IntPolynomial::from_terms(
      3, {{LatticePoint{2, 1, 0}, -2}, {LatticePoint{0, 0, 0}, 1}, {LatticePoint{0, 3, 1}, 1}});
  EXPECT_EQ(f.to_text(), "+1 +1*z2^3*z3 -2*z1^2*z2");
  EXPECT_EQ(IntPolynomial::variable(2, 0).to_text(), "+1*z1");
}

TEST(IntPolynomialTest, RingLawsAgreeWithEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial a = random_poly(rng, 3, 5, 3);
    const IntPolynomial b = random_poly(rng, 3, 5, 3);
    const IntPolynomial c = random_poly(rng, 3, 4, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const std::vector<std::int64_t> x{static_cast<std::int64_t>(rng() % 5) - 2,
                                      static_cast<std::int64_t>(rng() % 5) - 2,
                                      static_cast<std::int64_t>(rng() % 5) - 2};
    EXPECT_EQ(eval(a * b, x), eval(a, x) * eval(b, x));
    EXPECT_EQ(eval(a - b, x), eval(a, x) - eval(b, x));
  }
}

TEST(IntPolynomialTest, DegreesAndParts) {
  const IntPolynomial f = IntPolynomial::from_terms(
      3, {{LatticePoint{3, 1, 0}, 1}, {LatticePoint{3, 2, 0}, -1}, {LatticePoint{0, 3, 1}, 1}});
  EXPECT_EQ(f.min_degree(), 4);
  EXPECT_EQ(f.max_degree(), 5);
  const std::vector<std::size_t> j{0, 2};
  EXPECT_EQ(f.degree_in(j), 3);
  EXPECT_EQ(f.lowest_degree_part().size(), 2u);
  EXPECT_EQ(f.homogeneous_part(5).coefficient(LatticePoint{3, 2, 0}), -1);
  EXPECT_THROW(IntPolynomial(3).max_degree(), DomainError);
  EXPECT_EQ(f.swap_variables(0, 1).coefficient(LatticePoint{1, 3, 0}), 1);
}

TEST(IntPolynomialTest, MismatchedVariableCounts) {
  EXPECT_THROW(IntPolynomial::constant(2, 1) + IntPolynomial::constant(3, 1),
               DimensionError);
}

TEST(DivideByDifferenceTest, ExactQuotientTimesDivisorRecoversInput) {
  std::mt19937_64 rng(5);
  const IntPolynomial d = IntPolynomial::variable(3, 0) - IntPolynomial::variable(3, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial q = random_poly(rng, 3, 6, 3);
    EXPECT_EQ(divide_by_difference(q * d, 0, 1), q);
  }
}

TEST(DivideByDifferenceTest, NonMultipleIsAnInternalError) {
  EXPECT_THROW(divide_by_difference(IntPolynomial::variable(2, 0), 0, 1), InternalError);
  EXPECT_THROW(divide_by_difference(IntPolynomial::variable(2, 0), 0, 0), ArgumentError);
}

TEST(SignedSupportBridgeTest, RoundTrip) {
  std::mt19937_64 rng(3);
  const IntPolynomial f = random_poly(rng, 4, 8, 2);
  EXPECT_EQ(poly_from_signed_support(to_signed_support(f)), f);
}

}  // namespace
}  // namespace kpoly

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

#include "kpoly/json_io.h"

#include <gtest/gtest.h>

#include "kpoly/errors.h"
#include "reference_data.h"

namespace kpoly::json_io {
namespace {

TEST(JsonIoTest, PointSetRoundTrip) {
  const PointSet s = reference::running_msupp();
  EXPECT_EQ(parse_point_set(to_json(s)), s);
  EXPECT_EQ(to_json(LatticePoint{1, 2}).dump(), "[1,2]");
  EXPECT_THROW(parse_point_set(Json::parse("[[1,2],[1]]")), ArgumentError);
  EXPECT_THROW(parse_point(Json::parse("[1,-2]")), ArgumentError);
}

TEST(JsonIoTest, PolynomialRoundTrip) {
  const IntPolynomial f = reference::running_kpoly();
  EXPECT_EQ(parse_polynomial(to_json(f)), f);
  EXPECT_EQ(to_json(IntPolynomial::monomial(LatticePoint{0, 1}, -2)).dump(),
            R"([{"coeff":-2,"exp":[0,1]}])");
  const SignedSupport h = reference::running_hilbert3();
  EXPECT_EQ(parse_signed_support(to_json(h)), h);
}

TEST(JsonIoTest, InequalitySystemUsesOneBasedSubsets) {
  const GPolyInequalitySystem sys = inequality_system(reference::running_top3());
  const Json j = to_json(sys);
  EXPECT_EQ(j["p"], 3);
  EXPECT_EQ(j["bounds"].size(), 7u);
  EXPECT_EQ(j["bounds"][0]["J"], Json::parse("[1]"));
  EXPECT_EQ(parse_inequality_system(j), sys);
  Json missing = j;
  missing["bounds"].erase(0);
  EXPECT_THROW(parse_inequality_system(missing), ArgumentError);
}

TEST(JsonIoTest, OtherTypesRoundTrip) {
  const SquareFreeIdeal ideal(LatticePoint{2, 2}, {{1, 0}, {0, 1}});
  const SquareFreeIdeal back = parse_ideal(to_json(ideal));
  EXPECT_EQ(back.primes(), ideal.primes());
  EXPECT_EQ(back.ambient(), ideal.ambient());

  const Matroid m(PointSet(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(parse_matroid(to_json(m)).bases(), m.bases());

  const SubspaceConfig c = random_config(3, 2, 9);
  const SubspaceConfig c2 = parse_subspace_config(to_json(c));
  EXPECT_EQ(c2.q, c.q);
  EXPECT_EQ(c2.subspaces, c.subspaces);
  EXPECT_EQ(parse_subspace_config(Json::parse(R"({"q":2,"subspaces":[[[[1,2],3]]]})"))
                .subspaces[0][0][0],
            Rational(1, 2));

  const Permutation w = Permutation::parse("1,5,3,2,4");
  EXPECT_EQ(to_json(w).dump(), "[1,5,3,2,4]");
  EXPECT_EQ(parse_permutation(to_json(w)), w);
}

TEST(JsonIoTest, VerdictCarriesWitness) {
  const Verdict v = Verdict::fail(Witness{"exchange", {LatticePoint{1, 0}}, {0}, "x"});
  const Json j = to_json(v);
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_EQ(j["witness"]["indices"], Json::parse("[1]"));
  EXPECT_EQ(to_json(Verdict::pass()).dump(), R"({"holds":true})");
}

TEST(JsonIoTest, MissingFile) {
  EXPECT_THROW(read_file("/nonexistent/kpoly.json"), ArgumentError);
}

}  // namespace
}  // namespace kpoly::json_io

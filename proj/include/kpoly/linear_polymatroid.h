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

#ifndef KPOLY_LINEAR_POLYMATROID_H_
#define KPOLY_LINEAR_POLYMATROID_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kpoly/lattice.h"

namespace kpoly {

// Exact fraction with int64 numerator and positive denominator in lowest
// terms. Arithmetic throws OverflowError rather than wrapping.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);  // NOLINT

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

using RationalVector = std::vector<Rational>;

// Rank of the row span over the rationals.
std::int64_t matrix_rank(std::vector<RationalVector> rows);

struct SubspaceConfig {
  std::size_t q = 0;
  // subspaces[i] lists generators of V_{i+1}, each of length q.
  std::vector<std::vector<RationalVector>> subspaces;

  std::size_t p() const { return subspaces.size(); }
  // Throws ArgumentError on wrong generator lengths or if every V_i is zero.
  void validate() const;
};

// dim of the sum of V_j over j in `subset` (0-based indices).
std::int64_t rank(const SubspaceConfig& config, std::span<const std::size_t> subset);

// rank for every subset, indexed by bitmask.
std::vector<std::int64_t> rank_table(const SubspaceConfig& config);

// Lattice points of the base polytope of the rank function.
PointSet linear_polymatroid(const SubspaceConfig& config);

// p subspaces of Q^q, each spanned by one or two vectors with integer entries
// in [-3, 3]; reproducible from the seed.
SubspaceConfig random_config(std::size_t p, std::size_t q, std::uint64_t seed);

}  // namespace kpoly

#endif  // KPOLY_LINEAR_POLYMATROID_H_

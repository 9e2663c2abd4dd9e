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

#ifndef KPOLY_POLYMATROID_H_
#define KPOLY_POLYMATROID_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kpoly/lattice.h"
#include "kpoly/verdict.h"

namespace kpoly {

// Homogeneity plus the (one-sided) exchange axiom: for u, v in P and i with
// u_i > v_i there is j with u_j < v_j and u - e_i + e_j in P. The empty set
// is accepted.
Verdict is_base_polymatroid(const PointSet& p);

// The symmetric strengthening, which every base polymatroid satisfies: the j
// above can be chosen so that v - e_j + e_i is in P as well. Throws
// PreconditionError if `p` is not a base polymatroid.
Verdict check_symmetric_exchange(const PointSet& p);

enum class GPolyMethod {
  // Exchange and Expansion checked directly on ordered pairs.
  kAxioms,
  // Homogenize, then test the base-polymatroid axiom.
  kHomogenization,
  // Tight bounds c(J), b(J) form a paramodular pair and their integer
  // points are exactly G.
  kInequalityPoints,
};

inline constexpr GPolyMethod kAllGPolyMethods[] = {
    GPolyMethod::kAxioms, GPolyMethod::kHomogenization,
    GPolyMethod::kInequalityPoints};

const char* method_name(GPolyMethod method);

// Generalized polymatroid test. The empty set is accepted.
Verdict is_g_polymatroid(const PointSet& g,
                         GPolyMethod method = GPolyMethod::kAxioms);

// Bounds c(J) <= sum_{j in J} y_j <= b(J) for every nonempty J of [p].
// Subsets are bitmasks over 0-based indices; entry 0 (the empty set) is 0.
struct GPolyInequalitySystem {
  std::size_t ambient_p = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  std::int64_t c(std::uint32_t mask) const { return lower.at(mask); }
  std::int64_t b(std::uint32_t mask) const { return upper.at(mask); }
  std::uint32_t num_subsets() const { return 1u << ambient_p; }

  friend bool operator==(const GPolyInequalitySystem&,
                         const GPolyInequalitySystem&) = default;
};

// Tight bounds of a nonempty set, from support_bounds over all 2^p - 1
// nonempty subsets.
GPolyInequalitySystem inequality_system(const PointSet& a);

// All y >= 0 satisfying every bound. Enumeration stays inside the box
// 0 <= y_i <= b({i}) and prunes partial assignments.
PointSet integer_points(const GPolyInequalitySystem& sys);

// b submodular, c supermodular and b(X) - c(Y) >= b(X \ Y) - c(Y \ X).
Verdict is_paramodular(const GPolyInequalitySystem& sys);

// Integer points of the base polytope of a set function given on bitmasks:
// y >= 0, y(J) <= rank(J) for all J, y([p]) = rank([p]).
PointSet base_polytope_points(std::size_t p,
                              std::span<const std::int64_t> rank_by_mask);

// Normalized, monotone and submodular.
bool is_polymatroid_rank(std::size_t p,
                         std::span<const std::int64_t> rank_by_mask);

struct CaveOrderPolicy {
  enum class Kind { kNatural, kAllOrders, kSample };
  Kind kind = Kind::kAllOrders;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static CaveOrderPolicy natural() { return {Kind::kNatural, 0, 0}; }
  static CaveOrderPolicy all_orders() { return {Kind::kAllOrders, 0, 0}; }
  static CaveOrderPolicy sample(std::size_t k, std::uint64_t seed) {
    return {Kind::kSample, k, seed};
  }
};

// Largest p for which kAllOrders is accepted.
inline constexpr std::size_t kMaxExhaustiveOrderP = 6;

std::vector<AxisOrder> cave_orders(std::size_t p, const CaveOrderPolicy& policy);

// For every b in the bounding box with C_b nonempty: top(C_b) is a base
// polymatroid, C_b is the union of the stalactites of its top under every
// requested axis order, and C_b is a g-polymatroid when b != 0.
Verdict is_cave(const PointSet& c,
                const CaveOrderPolicy& policy = CaveOrderPolicy::all_orders());

}  // namespace kpoly

#endif  // KPOLY_POLYMATROID_H_

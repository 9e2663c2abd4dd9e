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

#ifndef KPOLY_MOBIUS_H_
#define KPOLY_MOBIUS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kpoly/lattice.h"
#include "kpoly/polynomial.h"
#include "kpoly/verdict.h"

namespace kpoly {

// All u with u <= v for some v in p.
PointSet downset(const PointSet& p);

// u -> mu(u, 1) on the downset with a maximum adjoined, from the box formula
// mu(u, 1) = -sum_{S : u + 1_S in downset} (-1)^|S|. Zero values are omitted.
SignedSupport mobius_to_top(const PointSet& p);

inline constexpr std::size_t kMobiusRecursionCap = 10'000;

// Same values from the defining recursion mu(u, 1) = -1 - sum_{w > u} mu(w, 1).
// Quadratic in the downset size; refuses downsets above `cap`.
SignedSupport mobius_to_top_recursive(const PointSet& p,
                                      std::size_t cap = kMobiusRecursionCap);

Verdict verify_deg_equals_neg_mobius(const PointSet& msupp);

// sum over the downset of -mu(u, 1) z^(m - u).
IntPolynomial kpoly_from_mobius(const PointSet& msupp, const LatticePoint& m);

PointSet mu_support(const PointSet& p);

class Matroid {
 public:
  // Bases as 0/1 vectors of a common weight satisfying basis exchange.
  explicit Matroid(PointSet bases);

  std::size_t ground_size() const { return bases_.ambient_p(); }
  const PointSet& bases() const { return bases_; }
  std::int64_t rank() const { return bases_[0].sum(); }
  bool is_independent(const LatticePoint& x) const;

 private:
  PointSet bases_;
};

std::vector<std::size_t> coloops(const Matroid& m);

// M / I on the ground set [p] \ supp(I), coordinates kept in their order.
Matroid contraction(const Matroid& m, const LatticePoint& independent);

// Sum over independent sets I, empty set included, of (-1)^(|I| - 1).
std::int64_t reduced_euler_characteristic(const Matroid& m);

// {1_A + x : x independent in M / A} for the coloop set A, in ambient [p].
PointSet mu_support_from_coloops(const Matroid& m);

Verdict verify_matroid_mu_theorem(const Matroid& m);

// Every matroid on ground set [p] (bases filtered through the exchange axiom).
std::vector<Matroid> enumerate_matroids(std::size_t p);

// Random base polymatroid: lattice points of the base polytope of the rank
// function J -> sum_k w_k min(c_k, |J ∩ S_k|) for random blocks S_k.
PointSet random_polymatroid(std::size_t p, int max_coord, std::uint64_t seed);

struct ExploreReport {
  std::size_t trials = 0;
  std::size_t holds = 0;
  std::optional<PointSet> counterexample;
  std::optional<Witness> witness;
};

// Checks whether the mu-support of random polymatroids is a g-polymatroid.
// Reports only; a counterexample is a finding, not an error.
ExploreReport explore_mu_support(std::size_t trials, std::size_t max_p,
                                 int max_coord, std::uint64_t seed);

}  // namespace kpoly

#endif  // KPOLY_MOBIUS_H_

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

#ifndef KPOLY_STALACTITE_H_
#define KPOLY_STALACTITE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpoly/lattice.h"
#include "kpoly/verdict.h"

namespace kpoly {

// St(u; l_1..l_m): the 2^m points u - sum_{i in I} e_{l_i}, I subset of [m].
// Every index must be distinct with u_l > 0.
PointSet stalactite(const LatticePoint& u, std::span<const std::size_t> indices);

// All l such that u - e_l + e_j lies in `v` for some j != l (sorted).
std::vector<std::size_t> neighbor_directions(const LatticePoint& u,
                                             const PointSet& v);

struct StalactiteStep {
  LatticePoint apex;
  std::vector<std::size_t> directions;
  PointSet points;
};

// Sorts `top_points` by the lex order of `order` and attaches to each a_i
// the stalactite St(a_i; {a_1, ..., a_{i-1}}).
std::vector<StalactiteStep> stalactite_decomposition(const PointSet& top_points,
                                                     const AxisOrder& order);

PointSet stalactite_union(const PointSet& top_points, const AxisOrder& order);

// Drops coordinates that are constant over a point set and restores them.
class CoordinateCollapse {
 public:
  static CoordinateCollapse of(const PointSet& points);

  std::size_t full_p() const { return fixed_.size(); }
  std::size_t reduced_p() const { return kept_.size(); }
  const std::vector<std::size_t>& kept() const { return kept_; }

  LatticePoint collapse(const LatticePoint& a) const;
  LatticePoint expand(const LatticePoint& a) const;
  PointSet collapse(const PointSet& a) const;
  PointSet expand(const PointSet& a) const;
  SignedSupport collapse(const SignedSupport& s) const;
  SignedSupport expand(const SignedSupport& s) const;

 private:
  std::vector<std::size_t> kept_;
  // Value of every dropped coordinate; -1 for kept ones.
  std::vector<int> fixed_;
};

// Signed Hilbert support of a multiplicity-free multidegree support: the
// union of the lex-ordered stalactites, each point weighted by
// (-1)^(D - |n|) times the number of stalactites containing it, where D is
// the common coordinate sum. Requires a nonempty base polymatroid.
SignedSupport hsupp_from_msupp(const PointSet& msupp);

// Same computation on the coordinates that vary, then expanded back.
SignedSupport hsupp_from_msupp_collapsed(const PointSet& msupp);

// sum_n H(n) prod_i C(t_i + n_i, n_i), exact.
std::int64_t hilbert_eval(const SignedSupport& h, std::span<const std::int64_t> t);

// Terms "+c*C(t1+n1,n1)*..." in natural lex order; factors with n_i = 0
// are omitted.
std::string format_hilbert(const SignedSupport& h);

// Vertex x_{i,j} of the Stanley-Reisner complex (component i 0-based).
using FacetVertex = std::pair<int, int>;

struct Facet {
  LatticePoint generator;
  std::vector<FacetVertex> vertices;  // sorted
};

// F_n = union_i {x_{i, m_i - n_i}, ..., x_{i, m_i}}.
Facet facet_of(const LatticePoint& n, const LatticePoint& m);

// Facets of the points of `msupp`, in natural lex order of the generators.
std::vector<Facet> facets_from_msupp(const PointSet& msupp, const LatticePoint& m);

// Each F_i meets <F_1..F_{i-1}> in a pure codimension-one complex: for j < i
// there is k < i with F_j & F_i inside F_k & F_i and |F_k & F_i| = |F_i| - 1.
Verdict verify_shelling(const std::vector<Facet>& facets);

// Every support point reaches a point of maximal sum by +e_i steps that stay
// inside the support.
Verdict increasing_path_check(const SignedSupport& h);

// sum_{w >= n} H(w). Throws DomainError unless some top point dominates n.
std::int64_t mobius_sum_check(const SignedSupport& h, const LatticePoint& n);

}  // namespace kpoly

#endif  // KPOLY_STALACTITE_H_

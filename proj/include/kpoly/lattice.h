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

#ifndef KPOLY_LATTICE_H_
#define KPOLY_LATTICE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kpoly {

// A point of N^p. Coordinates are nonnegative; indices are 0-based.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> coords);
  LatticePoint(std::initializer_list<int> coords);

  static LatticePoint zero(std::size_t p);
  static LatticePoint unit(std::size_t p, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  // Coordinate sum |a|.
  std::int64_t sum() const;

  LatticePoint add_unit(std::size_t i) const;
  // Requires (*this)[i] > 0.
  LatticePoint sub_unit(std::size_t i) const;
  // this - e_minus + e_plus; requires (*this)[minus] > 0.
  LatticePoint exchanged(std::size_t minus, std::size_t plus) const;

  std::string to_string() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  // Natural lex order (coordinate 0 most significant).
  friend std::strong_ordering operator<=>(const LatticePoint& a,
                                          const LatticePoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<int> coords_;
};

// Componentwise a <= b.
bool leq(const LatticePoint& a, const LatticePoint& b);
LatticePoint componentwise_max(const LatticePoint& a, const LatticePoint& b);
LatticePoint componentwise_min(const LatticePoint& a, const LatticePoint& b);
// a - b; requires b <= a.
LatticePoint difference(const LatticePoint& a, const LatticePoint& b);

// A permutation of {0, ..., p-1}; order[0] is the most significant axis.
using AxisOrder = std::vector<std::size_t>;

AxisOrder natural_order(std::size_t p);
void check_axis_order(const AxisOrder& order, std::size_t p);

std::strong_ordering lex_compare(const LatticePoint& u, const LatticePoint& v,
                                 const AxisOrder& order);
std::strong_ordering lex_compare(const LatticePoint& u, const LatticePoint& v);

// Finite set of points of N^p kept in natural lex order without duplicates.
class PointSet {
 public:
  explicit PointSet(std::size_t ambient_p = 0) : p_(ambient_p) {}
  // Sorts and removes duplicates; every point must have length ambient_p.
  PointSet(std::size_t ambient_p, std::vector<LatticePoint> points);
  PointSet(std::size_t ambient_p, std::initializer_list<LatticePoint> points);

  std::size_t ambient_p() const { return p_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  bool contains(const LatticePoint& a) const;
  bool is_homogeneous() const;
  bool is_subset_of(const PointSet& other) const;

  // The points sorted by the lex order induced by `order`.
  std::vector<LatticePoint> sorted_by(const AxisOrder& order) const;

  std::string to_string() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t p_ = 0;
  std::vector<LatticePoint> points_;
};

PointSet set_union(const PointSet& a, const PointSet& b);

// max |a| over A. Throws EmptySetError on an empty set.
std::int64_t max_sum(const PointSet& a);

// Points of A componentwise >= b.
PointSet truncate(const PointSet& a, const LatticePoint& b);

// Appends max(A) - |a| to every point.
PointSet homogenize(const PointSet& a);

// Points of maximal coordinate sum.
PointSet top(const PointSet& a);

struct SumBounds {
  std::int64_t min_sum = 0;
  std::int64_t max_sum = 0;
  friend bool operator==(const SumBounds&, const SumBounds&) = default;
};

// min and max of sum_{j in J} a_j over a in A; J holds 0-based indices.
SumBounds support_bounds(const PointSet& a, std::span<const std::size_t> subset);

// Indices of the set bits of `mask`.
std::vector<std::size_t> mask_indices(std::uint32_t mask);

// Map from lattice points to nonzero integers.
class SignedSupport {
 public:
  explicit SignedSupport(std::size_t ambient_p = 0) : p_(ambient_p) {}

  std::size_t ambient_p() const { return p_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<LatticePoint, std::int64_t>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  // Adds `coeff` at `point`; zero results are erased.
  void add(const LatticePoint& point, std::int64_t coeff);
  std::int64_t coefficient(const LatticePoint& point) const;
  PointSet keys() const;
  std::int64_t coefficient_sum() const;

  friend bool operator==(const SignedSupport&, const SignedSupport&) = default;

 private:
  std::size_t p_ = 0;
  std::map<LatticePoint, std::int64_t> terms_;
};

}  // namespace kpoly

#endif  // KPOLY_LATTICE_H_

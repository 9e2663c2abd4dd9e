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

#include "kpoly/lattice.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "kpoly/checked.h"
#include "kpoly/errors.h"

namespace kpoly {

std::int64_t shifted_binomial(std::int64_t t, std::int64_t n) {
  if (n < 0) throw ArgumentError("shifted_binomial: negative n");
  __int128 r = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    r = r * (t + k);
    r /= k;
    if (r > std::numeric_limits<std::int64_t>::max() ||
        r < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("binomial C(" + std::to_string(t + n) + ", " +
                          std::to_string(n) + ") overflows int64");
    }
  }
  return static_cast<std::int64_t>(r);
}

LatticePoint::LatticePoint(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 0) throw ArgumentError("lattice point with negative coordinate");
  }
}

LatticePoint::LatticePoint(std::initializer_list<int> coords)
    : LatticePoint(std::vector<int>(coords)) {}

LatticePoint LatticePoint::zero(std::size_t p) {
  return LatticePoint(std::vector<int>(p, 0));
}

LatticePoint LatticePoint::unit(std::size_t p, std::size_t i) {
  std::vector<int> c(p, 0);
  c.at(i) = 1;
  return LatticePoint(std::move(c));
}

std::int64_t LatticePoint::sum() const {
  std::int64_t s = 0;
  for (int c : coords_) s += c;
  return s;
}

LatticePoint LatticePoint::add_unit(std::size_t i) const {
  LatticePoint r = *this;
  ++r.coords_.at(i);
  return r;
}

LatticePoint LatticePoint::sub_unit(std::size_t i) const {
  if (coords_.at(i) == 0) {
    throw ArgumentError("sub_unit: coordinate " + std::to_string(i + 1) +
                        " of " + to_string() + " is zero");
  }
  LatticePoint r = *this;
  --r.coords_[i];
  return r;
}

LatticePoint LatticePoint::exchanged(std::size_t minus, std::size_t plus) const {
  LatticePoint r = sub_unit(minus);
  ++r.coords_.at(plus);
  return r;
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void check_same_length(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) {
    throw DimensionError("length mismatch: " + a.to_string() + " vs " +
                         b.to_string());
  }
}

}  // namespace

bool leq(const LatticePoint& a, const LatticePoint& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

LatticePoint componentwise_max(const LatticePoint& a, const LatticePoint& b) {
  check_same_length(a, b);
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return LatticePoint(std::move(c));
}

LatticePoint componentwise_min(const LatticePoint& a, const LatticePoint& b) {
  check_same_length(a, b);
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::min(a[i], b[i]);
  return LatticePoint(std::move(c));
}

LatticePoint difference(const LatticePoint& a, const LatticePoint& b) {
  check_same_length(a, b);
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) {
      throw ArgumentError("difference: " + b.to_string() + " is not below " +
                          a.to_string());
    }
    c[i] = a[i] - b[i];
  }
  return LatticePoint(std::move(c));
}

AxisOrder natural_order(std::size_t p) {
  AxisOrder order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = i;
  return order;
}

void check_axis_order(const AxisOrder& order, std::size_t p) {
  if (order.size() != p) {
    throw DimensionError("axis order has length " +
                         std::to_string(order.size()) + ", expected " +
                         std::to_string(p));
  }
  std::vector<bool> seen(p, false);
  for (std::size_t i : order) {
    if (i >= p || seen[i]) throw ArgumentError("axis order is not a permutation");
    seen[i] = true;
  }
}

std::strong_ordering lex_compare(const LatticePoint& u, const LatticePoint& v,
                                 const AxisOrder& order) {
  check_same_length(u, v);
  if (order.size() != u.size()) {
    throw DimensionError("axis order length does not match point length");
  }
  for (std::size_t axis : order) {
    if (u[axis] != v[axis]) return u[axis] <=> v[axis];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const LatticePoint& u, const LatticePoint& v) {
  check_same_length(u, v);
  return u <=> v;
}

PointSet::PointSet(std::size_t ambient_p, std::vector<LatticePoint> points)
    : p_(ambient_p), points_(std::move(points)) {
  for (const auto& a : points_) {
    if (a.size() != p_) {
      throw DimensionError("point " + a.to_string() +
                           " does not have ambient length " +
                           std::to_string(p_));
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet::PointSet(std::size_t ambient_p,
                   std::initializer_list<LatticePoint> points)
    : PointSet(ambient_p, std::vector<LatticePoint>(points)) {}

bool PointSet::contains(const LatticePoint& a) const {
  return std::binary_search(points_.begin(), points_.end(), a);
}

bool PointSet::is_homogeneous() const {
  for (const auto& a : points_) {
    if (a.sum() != points_.front().sum()) return false;
  }
  return true;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(),
                       points_.begin(), points_.end());
}

std::vector<LatticePoint> PointSet::sorted_by(const AxisOrder& order) const {
  check_axis_order(order, p_);
  std::vector<LatticePoint> r = points_;
  std::sort(r.begin(), r.end(), [&](const auto& a, const auto& b) {
    return lex_compare(a, b, order) < 0;
  });
  return r;
}

std::string PointSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) s += ",";
    s += points_[i].to_string();
  }
  return s + "}";
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  if (a.ambient_p() != b.ambient_p()) {
    throw DimensionError("union of point sets with different ambient p");
  }
  std::vector<LatticePoint> all = a.points();
  all.insert(all.end(), b.begin(), b.end());
  return PointSet(a.ambient_p(), std::move(all));
}

std::int64_t max_sum(const PointSet& a) {
  if (a.empty()) throw EmptySetError("max of an empty point set");
  std::int64_t best = a[0].sum();
  for (const auto& x : a) best = std::max(best, x.sum());
  return best;
}

PointSet truncate(const PointSet& a, const LatticePoint& b) {
  if (b.size() != a.ambient_p()) {
    throw DimensionError("truncation vector has the wrong length");
  }
  std::vector<LatticePoint> kept;
  for (const auto& x : a) {
    if (leq(b, x)) kept.push_back(x);
  }
  return PointSet(a.ambient_p(), std::move(kept));
}

PointSet homogenize(const PointSet& a) {
  const std::int64_t m = max_sum(a);
  std::vector<LatticePoint> out;
  out.reserve(a.size());
  for (const auto& x : a) {
    std::vector<int> c = x.coords();
    c.push_back(static_cast<int>(m - x.sum()));
    out.emplace_back(std::move(c));
  }
  return PointSet(a.ambient_p() + 1, std::move(out));
}

PointSet top(const PointSet& a) {
  const std::int64_t m = max_sum(a);
  std::vector<LatticePoint> out;
  for (const auto& x : a) {
    if (x.sum() == m) out.push_back(x);
  }
  return PointSet(a.ambient_p(), std::move(out));
}

SumBounds support_bounds(const PointSet& a,
                         std::span<const std::size_t> subset) {
  if (a.empty()) throw ArgumentError("support_bounds of an empty set");
  if (subset.empty()) throw ArgumentError("support_bounds over an empty index set");
  for (std::size_t j : subset) {
    if (j >= a.ambient_p()) throw DimensionError("index outside [p]");
  }
  SumBounds r{std::numeric_limits<std::int64_t>::max(),
              std::numeric_limits<std::int64_t>::min()};
  for (const auto& x : a) {
    std::int64_t s = 0;
    for (std::size_t j : subset) s += x[j];
    r.min_sum = std::min(r.min_sum, s);
    r.max_sum = std::max(r.max_sum, s);
  }
  return r;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) r.push_back(i);
  }
  return r;
}

void SignedSupport::add(const LatticePoint& point, std::int64_t coeff) {
  if (point.size() != p_) {
    throw DimensionError("signed support key " + point.to_string() +
                         " has the wrong length");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(point, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t SignedSupport::coefficient(const LatticePoint& point) const {
  auto it = terms_.find(point);
  return it == terms_.end() ? 0 : it->second;
}

PointSet SignedSupport::keys() const {
  std::vector<LatticePoint> k;
  k.reserve(terms_.size());
  for (const auto& [a, c] : terms_) k.push_back(a);
  return PointSet(p_, std::move(k));
}

std::int64_t SignedSupport::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [a, c] : terms_) s = checked_add(s, c);
  return s;
}

}  // namespace kpoly

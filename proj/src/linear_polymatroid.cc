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

#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "kpoly/errors.h"
#include "kpoly/polymatroid.h"

namespace kpoly {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("rational arithmetic overflowed int64");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    if (num_ == std::numeric_limits<std::int64_t>::min() ||
        den_ == std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("rational normalization overflowed");
    }
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ +
                  static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ -
                  static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return make(static_cast<__int128>(a.num_) * b.den_,
              static_cast<__int128>(a.den_) * b.num_);
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_)
                   : std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t matrix_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::int64_t r = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
    const RationalVector& prow = rows[static_cast<std::size_t>(r)];
    for (std::size_t k = static_cast<std::size_t>(r) + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const Rational f = rows[k][c] / prow[c];
      for (std::size_t x = c; x < cols; ++x) rows[k][x] = rows[k][x] - f * prow[x];
    }
    ++r;
  }
  return r;
}

void SubspaceConfig::validate() const {
  if (subspaces.empty()) throw ArgumentError("configuration has no subspaces");
  if (subspaces.size() >= 31) throw ResourceError("too many subspaces");
  bool nonzero = false;
  for (const auto& gens : subspaces) {
    for (const auto& v : gens) {
      if (v.size() != q) {
        throw ArgumentError("generator of length " + std::to_string(v.size()) +
                            " in ambient dimension " + std::to_string(q));
      }
      for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    }
  }
  if (!nonzero) throw ArgumentError("every subspace is zero");
}

std::int64_t rank(const SubspaceConfig& config, std::span<const std::size_t> subset) {
  std::vector<RationalVector> rows;
  for (std::size_t i : subset) {
    if (i >= config.p()) throw ArgumentError("subspace index out of range");
    for (const auto& v : config.subspaces[i]) rows.push_back(v);
  }
  return matrix_rank(std::move(rows));
}

std::vector<std::int64_t> rank_table(const SubspaceConfig& config) {
  config.validate();
  std::vector<std::int64_t> table(std::size_t{1} << config.p(), 0);
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    const std::vector<std::size_t> idx = mask_indices(mask);
    table[mask] = rank(config, idx);
  }
  return table;
}

PointSet linear_polymatroid(const SubspaceConfig& config) {
  const std::vector<std::int64_t> table = rank_table(config);
  PointSet pts = base_polytope_points(config.p(), table);
  if (Verdict v = is_base_polymatroid(pts); !v || pts.empty()) {
    throw InternalError("linear polymatroid failed the exchange axiom: " + v.describe());
  }
  return pts;
}

SubspaceConfig random_config(std::size_t p, std::size_t q, std::uint64_t seed) {
  if (p == 0 || q == 0) throw ArgumentError("random_config needs p, q >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> gens(1, 2);
  while (true) {
    SubspaceConfig c;
    c.q = q;
    bool nonzero = false;
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<RationalVector> g;
      const int k = gens(rng);
      for (int t = 0; t < k; ++t) {
        RationalVector v(q);
        for (auto& x : v) {
          x = Rational(entry(rng));
          nonzero = nonzero || !x.is_zero();
        }
        g.push_back(std::move(v));
      }
      c.subspaces.push_back(std::move(g));
    }
    if (nonzero) return c;
  }
}

}  // namespace kpoly

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

#ifndef KPOLY_SCHUBERT_H_
#define KPOLY_SCHUBERT_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpoly/lattice.h"
#include "kpoly/polynomial.h"

namespace kpoly {

class Permutation {
 public:
  // One-line notation with values 1..p.
  explicit Permutation(std::vector<int> one_line);

  // Accepts "1,5,3,2,4" and "[1,5,3,2,4]".
  static Permutation parse(std::string_view text);
  static Permutation identity(std::size_t p);
  static Permutation longest(std::size_t p);
  // Inverse of rank().
  static Permutation unrank(std::size_t p, std::uint64_t rank);

  std::size_t size() const { return w_.size(); }
  // Value at 0-based position i, 1-based value.
  int operator[](std::size_t i) const { return w_[i]; }
  const std::vector<int>& one_line() const { return w_; }

  std::int64_t length() const;
  bool has_ascent(std::size_t j) const { return w_[j] < w_[j + 1]; }
  // Smallest 0-based j with w(j) < w(j+1); size() - 1 if none.
  std::size_t first_ascent() const;
  // Swaps the entries at positions j and j+1.
  Permutation swapped(std::size_t j) const;
  // Position in the lex order of S_p, 0 for the identity.
  std::uint64_t rank() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

// Cells (i, j), 1-based, with w(i) > j and w^{-1}(j) > i.
std::vector<std::pair<int, int>> rothe_diagram(const Permutation& w);

// (f - s_j f) / (z_{j+1} - z_{j+2}) for 0-based j.
IntPolynomial divided_difference(const IntPolynomial& f, std::size_t j);
// divided_difference((1 - z_{j+2}) f, j).
IntPolynomial isobaric_divided_difference(const IntPolynomial& f, std::size_t j);

// z1^{p-1} z2^{p-2} ... z_{p-1} in p variables.
IntPolynomial staircase_monomial(std::size_t p);

IntPolynomial grothendieck(const Permutation& w);

// Grothendieck polynomials of all of S_p, computed once from the longest
// element downward.
class GrothendieckTable {
 public:
  explicit GrothendieckTable(std::size_t p);
  std::size_t p() const { return p_; }
  const IntPolynomial& operator()(const Permutation& w) const;

 private:
  std::size_t p_;
  std::vector<IntPolynomial> by_rank_;
};

// Lowest-degree part of the Grothendieck polynomial.
IntPolynomial schubert(const Permutation& w);
// Direct recursion with the plain operators from the staircase monomial.
IntPolynomial schubert_by_divided_differences(const Permutation& w);

bool is_zero_one(const IntPolynomial& schubert_poly);
bool is_zero_one(const Permutation& w);

inline constexpr std::size_t kCensusCap = 8;

// Number of w in S_p whose Schubert polynomial has 0/1 coefficients.
std::int64_t count_zero_one(std::size_t p, std::size_t jobs = 1,
                            std::size_t cap = kCensusCap);

struct MatrixSchubertSupport {
  PointSet msupp;
  LatticePoint m;
};

// m = (p-1, ..., p-1) and msupp = m - supp(schubert(w)). Zero-one w only.
MatrixSchubertSupport msupp_of_matrix_schubert(const Permutation& w);

IntPolynomial grothendieck_via_stalactites(const Permutation& w);
IntPolynomial grothendieck_via_mobius(const Permutation& w);

}  // namespace kpoly

#endif  // KPOLY_SCHUBERT_H_

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

#ifndef KPOLY_MONOMIAL_ORACLE_H_
#define KPOLY_MONOMIAL_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kpoly/lattice.h"
#include "kpoly/polynomial.h"

namespace kpoly {

// Square-free monomial ideal p_{a_1} ∩ ... ∩ p_{a_k} in the polynomial ring
// with variables x_{i,j}, 0 <= j <= m_i, where p_a = (x_{i,j} : j < a_i).
// Each prime is stored as its vector a.
class SquareFreeIdeal {
 public:
  // Validates 0 <= a <= m, a nonempty list, and pairwise incomparability.
  SquareFreeIdeal(LatticePoint m, std::vector<LatticePoint> primes);

  const LatticePoint& ambient() const { return m_; }
  std::size_t ambient_p() const { return m_.size(); }
  const std::vector<LatticePoint>& primes() const { return primes_; }

 private:
  LatticePoint m_;
  std::vector<LatticePoint> primes_;
};

inline constexpr std::size_t kDefaultSubsetCap = 20;
inline constexpr std::int64_t kDefaultEnumerationCap = 10'000'000;

LatticePoint prime_sum(const std::vector<LatticePoint>& primes);

// The single Hilbert term of S/p_a, located at m - a.
SignedSupport hilbert_poly_prime(const LatticePoint& a, const LatticePoint& m);

SignedSupport hilbert_poly_ie(const SquareFreeIdeal& j,
                              std::size_t cap = kDefaultSubsetCap);

// Alternative evaluator that follows a shelling order of the primes (the
// order stored in the ideal): sum over j of P(p_j) minus the
// inclusion-exclusion over the codimension-one extensions by earlier primes.
// Throws PreconditionError if the primes do not share a codimension or an
// extension is not p_j plus a single variable.
SignedSupport hilbert_poly_shelled(const SquareFreeIdeal& j,
                                   std::size_t cap = kDefaultSubsetCap);

IntPolynomial k_poly_ie(const SquareFreeIdeal& j,
                        std::size_t cap = kDefaultSubsetCap);

// Number of monomials of multidegree v outside the ideal, by listing them.
std::int64_t hilbert_function_enumerate(const SquareFreeIdeal& j,
                                        const LatticePoint& v,
                                        std::int64_t cap = kDefaultEnumerationCap);

// Same count through inclusion-exclusion of polynomial-subring counts.
std::int64_t hilbert_function_closed_form(const SquareFreeIdeal& j,
                                          const LatticePoint& v,
                                          std::size_t cap = kDefaultSubsetCap);

// Runs both paths above and throws InternalError if they disagree.
std::int64_t hilbert_function_bruteforce(const SquareFreeIdeal& j,
                                         const LatticePoint& v,
                                         std::int64_t cap = kDefaultEnumerationCap);

// Primes p_{m-n} for n in msupp, listed in natural lex order of n.
SquareFreeIdeal msupp_to_ideal(const PointSet& msupp, const LatticePoint& m);

}  // namespace kpoly

#endif  // KPOLY_MONOMIAL_ORACLE_H_

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

#ifndef KPOLY_POLYNOMIAL_H_
#define KPOLY_POLYNOMIAL_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kpoly/lattice.h"

namespace kpoly {

// Sparse polynomial in z_1..z_n with exact int64 coefficients. Terms are kept
// in natural lex order of their exponent vectors and no zero coefficient is
// ever stored. Arithmetic is checked; overflow throws OverflowError.
class IntPolynomial {
 public:
  struct Term {
    LatticePoint exponent;
    std::int64_t coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit IntPolynomial(std::size_t num_vars = 0) : n_(num_vars) {}

  // Combines like terms of an arbitrary term list.
  static IntPolynomial from_terms(std::size_t num_vars, std::vector<Term> terms);
  static IntPolynomial constant(std::size_t num_vars, std::int64_t c);
  static IntPolynomial monomial(const LatticePoint& exponent, std::int64_t c = 1);
  // z_{i+1} (0-based index i).
  static IntPolynomial variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  std::int64_t coefficient(const LatticePoint& exponent) const;
  PointSet support() const;

  // Max / min total degree over the terms. Zero polynomial throws.
  std::int64_t max_degree() const;
  std::int64_t min_degree() const;
  // Max of sum_{j in vars} e_j over the terms (degree in those variables).
  std::int64_t degree_in(std::span<const std::size_t> vars) const;

  IntPolynomial homogeneous_part(std::int64_t degree) const;
  IntPolynomial lowest_degree_part() const;

  // Exchanges z_{i+1} and z_{j+1}.
  IntPolynomial swap_variables(std::size_t i, std::size_t j) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(std::int64_t scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, std::int64_t s) {
    return a *= s;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Canonical text: terms in natural lex order, "+c*z1^a1*z2" style, zero
  // exponents omitted, exponent 1 written bare, coefficient always explicit.
  // The zero polynomial prints as "0".
  std::string to_text() const;

 private:
  void check_compatible(const IntPolynomial& other) const;

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient f / (z_{i+1} - z_{k+1}). A nonzero remainder throws
// InternalError since every caller divides an antisymmetric numerator.
IntPolynomial divide_by_difference(const IntPolynomial& f, std::size_t i,
                                   std::size_t k);

SignedSupport to_signed_support(const IntPolynomial& f);
IntPolynomial poly_from_signed_support(const SignedSupport& s);

}  // namespace kpoly

#endif  // KPOLY_POLYNOMIAL_H_

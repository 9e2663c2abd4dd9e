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

#include "kpoly/polynomial.h"

#include <algorithm>
#include <limits>
#include <sstream>

#include "kpoly/checked.h"
#include "kpoly/errors.h"

namespace kpoly {

namespace {

void normalize(std::vector<IntPolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.exponent < b.exponent;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::int64_t c = terms[i].coeff;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
      c = checked_add(c, terms[j].coeff);
      ++j;
    }
    if (c != 0) {
      if (out != i) terms[out].exponent = std::move(terms[i].exponent);
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

IntPolynomial IntPolynomial::from_terms(std::size_t num_vars,
                                        std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponent.size() != num_vars) {
      throw DimensionError("exponent " + t.exponent.to_string() +
                           " does not match " + std::to_string(num_vars) +
                           " variables");
    }
  }
  IntPolynomial f(num_vars);
  normalize(terms);
  f.terms_ = std::move(terms);
  return f;
}

IntPolynomial IntPolynomial::constant(std::size_t num_vars, std::int64_t c) {
  return from_terms(num_vars, {{LatticePoint::zero(num_vars), c}});
}

IntPolynomial IntPolynomial::monomial(const LatticePoint& exponent,
                                      std::int64_t c) {
  return from_terms(exponent.size(), {{exponent, c}});
}

IntPolynomial IntPolynomial::variable(std::size_t num_vars, std::size_t i) {
  return monomial(LatticePoint::unit(num_vars, i));
}

std::int64_t IntPolynomial::coefficient(const LatticePoint& exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, const LatticePoint& e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coeff : 0;
}

PointSet IntPolynomial::support() const {
  std::vector<LatticePoint> pts;
  pts.reserve(terms_.size());
  for (const auto& t : terms_) pts.push_back(t.exponent);
  return PointSet(n_, std::move(pts));
}

std::int64_t IntPolynomial::max_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : terms_) d = std::max(d, t.exponent.sum());
  return d;
}

std::int64_t IntPolynomial::min_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  std::int64_t d = std::numeric_limits<std::int64_t>::max();
  for (const auto& t : terms_) d = std::min(d, t.exponent.sum());
  return d;
}

std::int64_t IntPolynomial::degree_in(std::span<const std::size_t> vars) const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  std::int64_t d = std::numeric_limits<std::int64_t>::min();
  for (const auto& t : terms_) {
    std::int64_t s = 0;
    for (std::size_t v : vars) s += t.exponent[v];
    d = std::max(d, s);
  }
  return d;
}

IntPolynomial IntPolynomial::homogeneous_part(std::int64_t degree) const {
  IntPolynomial r(n_);
  for (const auto& t : terms_) {
    if (t.exponent.sum() == degree) r.terms_.push_back(t);
  }
  return r;
}

IntPolynomial IntPolynomial::lowest_degree_part() const {
  if (is_zero()) return *this;
  return homogeneous_part(min_degree());
}

IntPolynomial IntPolynomial::swap_variables(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw DimensionError("swap_variables: index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> c = t.exponent.coords();
    std::swap(c[i], c[j]);
    out.push_back({LatticePoint(std::move(c)), t.coeff});
  }
  return from_terms(n_, std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = checked_neg(t.coeff);
  return r;
}

void IntPolynomial::check_compatible(const IntPolynomial& other) const {
  if (n_ != other.n_) {
    throw DimensionError("polynomials in " + std::to_string(n_) + " and " +
                         std::to_string(other.n_) + " variables");
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  check_compatible(other);
  std::vector<Term> all;
  all.reserve(terms_.size() + other.terms_.size());
  std::merge(terms_.begin(), terms_.end(), other.terms_.begin(),
             other.terms_.end(), std::back_inserter(all),
             [](const auto& a, const auto& b) { return a.exponent < b.exponent; });
  normalize(all);
  terms_ = std::move(all);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  return *this += -other;
}

IntPolynomial& IntPolynomial::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = checked_mul(t.coeff, scalar);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.check_compatible(b);
  std::vector<IntPolynomial::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      std::vector<int> e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) {
        e[i] = s.exponent[i] + t.exponent[i];
      }
      out.push_back({LatticePoint(std::move(e)), checked_mul(s.coeff, t.coeff)});
    }
  }
  return IntPolynomial::from_terms(a.n_, std::move(out));
}

std::string IntPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << ' ';
    first = false;
    os << (t.coeff < 0 ? '-' : '+');
    // abs via unsigned to survive INT64_MIN.
    os << (t.coeff < 0 ? 0 - static_cast<std::uint64_t>(t.coeff)
                       : static_cast<std::uint64_t>(t.coeff));
    for (std::size_t i = 0; i < n_; ++i) {
      const int e = t.exponent[i];
      if (e == 0) continue;
      os << "*z" << (i + 1);
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

IntPolynomial divide_by_difference(const IntPolynomial& f, std::size_t i,
                                   std::size_t k) {
  const std::size_t n = f.num_vars();
  if (i >= n || k >= n || i == k) {
    throw ArgumentError("divide_by_difference: bad variable pair");
  }
  // z_i^a z_k^b = (z_i - z_k) * z_k^b * sum_{t<a} z_i^t z_k^{a-1-t} + z_k^{a+b}
  std::vector<IntPolynomial::Term> quotient;
  std::vector<IntPolynomial::Term> remainder;
  for (const auto& term : f) {
    std::vector<int> e = term.exponent.coords();
    const int a = e[i];
    const int b = e[k];
    for (int t = 0; t < a; ++t) {
      e[i] = t;
      e[k] = b + a - 1 - t;
      quotient.push_back({LatticePoint(e), term.coeff});
    }
    e[i] = 0;
    e[k] = a + b;
    remainder.push_back({LatticePoint(std::move(e)), term.coeff});
  }
  if (!IntPolynomial::from_terms(n, std::move(remainder)).is_zero()) {
    throw InternalError("nonzero remainder dividing by z" + std::to_string(i + 1) +
                        " - z" + std::to_string(k + 1));
  }
  return IntPolynomial::from_terms(n, std::move(quotient));
}

SignedSupport to_signed_support(const IntPolynomial& f) {
  SignedSupport s(f.num_vars());
  for (const auto& t : f) s.add(t.exponent, t.coeff);
  return s;
}

IntPolynomial poly_from_signed_support(const SignedSupport& s) {
  std::vector<IntPolynomial::Term> terms;
  terms.reserve(s.size());
  for (const auto& [e, c] : s) terms.push_back({e, c});
  return IntPolynomial::from_terms(s.ambient_p(), std::move(terms));
}

}  // namespace kpoly

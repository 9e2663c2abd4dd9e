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

#include "kpoly/schubert.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <string>
#include <thread>

#include "kpoly/checked.h"
#include "kpoly/errors.h"
#include "kpoly/mobius.h"
#include "kpoly/stalactite.h"

namespace kpoly {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  if (w_.empty()) throw ArgumentError("permutation of length zero");
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || static_cast<std::size_t>(v) > w_.size() || seen[v]) {
      throw ArgumentError("not a permutation of 1.." + std::to_string(w_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ArgumentError("unbalanced bracket in permutation");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
          return std::isdigit(c);
        })) {
      throw ArgumentError("malformed permutation '" + std::string(text) + "'");
    }
    if (tok.size() > 3) throw ArgumentError("permutation entry too large");
    values.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t p) {
  std::vector<int> w(p);
  for (std::size_t i = 0; i < p; ++i) w[i] = static_cast<int>(i + 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(std::size_t p) {
  std::vector<int> w(p);
  for (std::size_t i = 0; i < p; ++i) w[i] = static_cast<int>(p - i);
  return Permutation(std::move(w));
}

Permutation Permutation::unrank(std::size_t p, std::uint64_t rank) {
  if (p == 0 || p > 20) throw ArgumentError("unrank: p out of range");
  std::vector<std::uint64_t> fact(p + 1, 1);
  for (std::size_t i = 1; i <= p; ++i) fact[i] = fact[i - 1] * i;
  if (rank >= fact[p]) throw ArgumentError("unrank: rank out of range");
  std::vector<int> pool(p);
  for (std::size_t i = 0; i < p; ++i) pool[i] = static_cast<int>(i + 1);
  std::vector<int> w;
  for (std::size_t i = 0; i < p; ++i) {
    const std::uint64_t f = fact[p - 1 - i];
    const std::size_t k = rank / f;
    rank %= f;
    w.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(std::move(w));
}

std::int64_t Permutation::length() const {
  std::int64_t inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    for (std::size_t k = i + 1; k < w_.size(); ++k) inv += w_[i] > w_[k];
  }
  return inv;
}

std::size_t Permutation::first_ascent() const {
  std::size_t j = 0;
  while (j + 1 < w_.size() && !has_ascent(j)) ++j;
  return j;
}

Permutation Permutation::swapped(std::size_t j) const {
  if (j + 1 >= w_.size()) throw ArgumentError("swap position out of range");
  std::vector<int> w = w_;
  std::swap(w[j], w[j + 1]);
  return Permutation(std::move(w));
}

std::uint64_t Permutation::rank() const {
  const std::size_t p = w_.size();
  if (p > 20) throw ArgumentError("rank: permutation too long");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < p; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t k = i + 1; k < p; ++k) smaller += w_[k] < w_[i];
    r = r * (p - i) + smaller;
  }
  return r;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + "]";
}

std::vector<std::pair<int, int>> rothe_diagram(const Permutation& w) {
  const std::size_t p = w.size();
  std::vector<int> inv(p + 1);
  for (std::size_t i = 0; i < p; ++i) inv[w[i]] = static_cast<int>(i + 1);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= static_cast<int>(p); ++i) {
    for (int j = 1; j <= static_cast<int>(p); ++j) {
      if (w[i - 1] > j && inv[j] > i) cells.emplace_back(i, j);
    }
  }
  return cells;
}

namespace {

void check_operator_index(const IntPolynomial& f, std::size_t j) {
  if (j + 1 >= f.num_vars()) {
    throw ArgumentError("divided difference index " + std::to_string(j + 1) +
                        " out of range for " + std::to_string(f.num_vars()) +
                        " variables");
  }
}

}  // namespace

IntPolynomial divided_difference(const IntPolynomial& f, std::size_t j) {
  check_operator_index(f, j);
  return divide_by_difference(f - f.swap_variables(j, j + 1), j, j + 1);
}

IntPolynomial isobaric_divided_difference(const IntPolynomial& f, std::size_t j) {
  check_operator_index(f, j);
  const IntPolynomial one_minus =
      IntPolynomial::constant(f.num_vars(), 1) - IntPolynomial::variable(f.num_vars(), j + 1);
  return divided_difference(one_minus * f, j);
}

IntPolynomial staircase_monomial(std::size_t p) {
  std::vector<int> e(p);
  for (std::size_t i = 0; i < p; ++i) e[i] = static_cast<int>(p - 1 - i);
  return IntPolynomial::monomial(LatticePoint(std::move(e)));
}

namespace {

using Operator = IntPolynomial (*)(const IntPolynomial&, std::size_t);

// Walks from w up to the longest element through smallest ascents, then
// applies `op` back down that chain.
IntPolynomial from_longest(const Permutation& w, Operator op) {
  std::vector<std::size_t> steps;
  Permutation u = w;
  const std::size_t p = w.size();
  while (u.first_ascent() + 1 < p) {
    const std::size_t j = u.first_ascent();
    steps.push_back(j);
    u = u.swapped(j);
  }
  IntPolynomial f = staircase_monomial(p);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) f = op(f, *it);
  return f;
}

}  // namespace

IntPolynomial grothendieck(const Permutation& w) {
  return from_longest(w, &isobaric_divided_difference);
}

GrothendieckTable::GrothendieckTable(std::size_t p) : p_(p) {
  if (p == 0 || p > 8) throw ResourceError("GrothendieckTable supports 1 <= p <= 8");
  std::uint64_t count = 1;
  for (std::size_t i = 2; i <= p; ++i) count *= i;
  std::vector<Permutation> perms;
  perms.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) perms.push_back(Permutation::unrank(p, r));
  std::stable_sort(perms.begin(), perms.end(), [](const auto& a, const auto& b) {
    return a.length() > b.length();
  });
  by_rank_.assign(count, IntPolynomial(p));
  for (const auto& w : perms) {
    const std::size_t j = w.first_ascent();
    if (j + 1 >= p) {
      by_rank_[w.rank()] = staircase_monomial(p);
    } else {
      by_rank_[w.rank()] = isobaric_divided_difference(by_rank_[w.swapped(j).rank()], j);
    }
  }
}

const IntPolynomial& GrothendieckTable::operator()(const Permutation& w) const {
  if (w.size() != p_) throw DimensionError("permutation size does not match the table");
  return by_rank_[w.rank()];
}

IntPolynomial schubert(const Permutation& w) {
  return grothendieck(w).lowest_degree_part();
}

IntPolynomial schubert_by_divided_differences(const Permutation& w) {
  return from_longest(w, &divided_difference);
}

bool is_zero_one(const IntPolynomial& schubert_poly) {
  return std::all_of(schubert_poly.begin(), schubert_poly.end(),
                     [](const auto& t) { return t.coeff == 0 || t.coeff == 1; });
}

bool is_zero_one(const Permutation& w) {
  return is_zero_one(schubert(w));
}

std::int64_t count_zero_one(std::size_t p, std::size_t jobs, std::size_t cap) {
  if (p == 0) throw ArgumentError("census needs p >= 1");
  if (p > cap) {
    throw ResourceError("census for p = " + std::to_string(p) +
                        " exceeds the cap " + std::to_string(cap));
  }
  jobs = std::max<std::size_t>(jobs, 1);
  struct Entry {
    Permutation w;
    IntPolynomial poly;
  };
  // Level by level from the longest element: each w of length l is produced
  // exactly once, from w s_j with j its smallest ascent.
  std::vector<Entry> level;
  level.push_back({Permutation::longest(p), staircase_monomial(p)});
  std::int64_t count = 0;
  while (!level.empty()) {
    for (const auto& e : level) count += is_zero_one(e.poly);
    struct Task {
      std::size_t parent;
      std::size_t j;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < level.size(); ++k) {
      const Permutation& u = level[k].w;
      for (std::size_t j = 0; j + 1 < p; ++j) {
        if (u.has_ascent(j)) continue;
        if (u.swapped(j).first_ascent() == j) tasks.push_back({k, j});
      }
    }
    std::vector<Entry> next(tasks.size(), Entry{Permutation::identity(p), IntPolynomial(p)});
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t t = cursor++; t < tasks.size(); t = cursor++) {
        const Entry& parent = level[tasks[t].parent];
        next[t] = Entry{parent.w.swapped(tasks[t].j),
                        divided_difference(parent.poly, tasks[t].j)};
      }
    };
    if (jobs == 1 || tasks.size() < 2) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < std::min(jobs, tasks.size()); ++i) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    level = std::move(next);
  }
  return count;
}

MatrixSchubertSupport msupp_of_matrix_schubert(const Permutation& w) {
  const IntPolynomial s = schubert(w);
  if (!is_zero_one(s)) {
    throw PreconditionError(w.to_string() + " does not have a zero-one Schubert polynomial");
  }
  const std::size_t p = w.size();
  LatticePoint m(std::vector<int>(p, static_cast<int>(p) - 1));
  std::vector<LatticePoint> pts;
  for (const auto& t : s) pts.push_back(difference(m, t.exponent));
  return {PointSet(p, std::move(pts)), std::move(m)};
}

IntPolynomial grothendieck_via_stalactites(const Permutation& w) {
  const MatrixSchubertSupport ms = msupp_of_matrix_schubert(w);
  const SignedSupport h = hsupp_from_msupp(ms.msupp);
  std::vector<IntPolynomial::Term> terms;
  for (const auto& [n, c] : h) terms.push_back({difference(ms.m, n), c});
  return IntPolynomial::from_terms(w.size(), std::move(terms));
}

IntPolynomial grothendieck_via_mobius(const Permutation& w) {
  const MatrixSchubertSupport ms = msupp_of_matrix_schubert(w);
  return kpoly_from_mobius(ms.msupp, ms.m);
}

}  // namespace kpoly

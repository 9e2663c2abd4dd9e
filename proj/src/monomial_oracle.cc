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

#include "kpoly/monomial_oracle.h"

#include <algorithm>
#include <functional>
#include <string>

#include "kpoly/checked.h"
#include "kpoly/errors.h"

namespace kpoly {

SquareFreeIdeal::SquareFreeIdeal(LatticePoint m, std::vector<LatticePoint> primes)
    : m_(std::move(m)), primes_(std::move(primes)) {
  if (primes_.empty()) throw ArgumentError("ideal needs at least one prime");
  for (const auto& a : primes_) {
    if (a.size() != m_.size()) {
      throw DimensionError("prime " + a.to_string() + " has the wrong length");
    }
    if (!leq(a, m_)) {
      throw DomainError("prime " + a.to_string() + " exceeds the ambient " +
                        m_.to_string());
    }
  }
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    for (std::size_t k = 0; k < primes_.size(); ++k) {
      if (i != k && leq(primes_[i], primes_[k])) {
        throw ArgumentError("primes " + primes_[i].to_string() + " and " +
                            primes_[k].to_string() +
                            " are comparable; the decomposition is not minimal");
      }
    }
  }
}

LatticePoint prime_sum(const std::vector<LatticePoint>& primes) {
  if (primes.empty()) throw ArgumentError("prime_sum of an empty list");
  LatticePoint r = primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i) {
    r = componentwise_max(r, primes[i]);
  }
  return r;
}

SignedSupport hilbert_poly_prime(const LatticePoint& a, const LatticePoint& m) {
  if (a.size() != m.size()) throw DimensionError("prime and ambient differ in length");
  SignedSupport h(m.size());
  h.add(difference(m, a), 1);
  return h;
}

namespace {

std::size_t subset_cap_check(std::size_t k, std::size_t cap) {
  if (k > cap || k >= 63) {
    throw ResourceError("inclusion-exclusion over " + std::to_string(k) +
                        " primes exceeds the cap of " + std::to_string(cap));
  }
  return k;
}

// Visits every nonempty subset of `primes` once, passing the componentwise max
// and the subset size. The running max is carried down the recursion.
void for_each_prime_subset(
    const std::vector<LatticePoint>& primes,
    const std::function<void(const LatticePoint&, std::size_t)>& visit) {
  std::function<void(std::size_t, const LatticePoint&, std::size_t)> rec =
      [&](std::size_t next, const LatticePoint& acc, std::size_t size) {
        for (std::size_t i = next; i < primes.size(); ++i) {
          const LatticePoint s = size == 0 ? primes[i] : componentwise_max(acc, primes[i]);
          visit(s, size + 1);
          rec(i + 1, s, size + 1);
        }
      };
  rec(0, LatticePoint(), 0);
}

SignedSupport ie_support(const std::vector<LatticePoint>& primes,
                         const LatticePoint& m, std::size_t cap) {
  subset_cap_check(primes.size(), cap);
  SignedSupport h(m.size());
  for_each_prime_subset(primes, [&](const LatticePoint& a, std::size_t size) {
    h.add(difference(m, a), size % 2 == 1 ? 1 : -1);
  });
  return h;
}

}  // namespace

SignedSupport hilbert_poly_ie(const SquareFreeIdeal& j, std::size_t cap) {
  return ie_support(j.primes(), j.ambient(), cap);
}

SignedSupport hilbert_poly_shelled(const SquareFreeIdeal& j, std::size_t cap) {
  const auto& primes = j.primes();
  const LatticePoint& m = j.ambient();
  const std::int64_t c = primes[0].sum();
  for (const auto& a : primes) {
    if (a.sum() != c) {
      throw PreconditionError("primes of different codimension; the complex is not pure");
    }
  }
  SignedSupport h(m.size());
  for (std::size_t k = 0; k < primes.size(); ++k) {
    h.add(difference(m, primes[k]), 1);
    std::vector<LatticePoint> ext;
    for (std::size_t l = 0; l < k; ++l) {
      const LatticePoint s = componentwise_max(primes[l], primes[k]);
      if (s.sum() != c + 1) continue;
      if (std::find(ext.begin(), ext.end(), s) == ext.end()) ext.push_back(s);
    }
    if (k > 0 && ext.empty()) {
      throw PreconditionError("prime " + primes[k].to_string() +
                              " has no codimension-one extension by an earlier "
                              "prime; the order is not a shelling");
    }
    for (const auto& s : ext) {
      // codim(p_k + p_l) = c + 1 with p_k ⊆ p_k + p_l forces one extra variable.
      const LatticePoint d = difference(s, primes[k]);
      if (d.sum() != 1) {
        throw InternalError("extension " + s.to_string() + " of " +
                            primes[k].to_string() + " is not a single variable");
      }
    }
    if (!ext.empty()) {
      for (const auto& [n, coeff] : ie_support(ext, m, cap)) h.add(n, -coeff);
    }
  }
  return h;
}

IntPolynomial k_poly_ie(const SquareFreeIdeal& j, std::size_t cap) {
  subset_cap_check(j.primes().size(), cap);
  SignedSupport s(j.ambient_p());
  for_each_prime_subset(j.primes(), [&](const LatticePoint& a, std::size_t size) {
    s.add(a, size % 2 == 1 ? 1 : -1);
  });
  return poly_from_signed_support(s);
}

namespace {

void check_degree(const SquareFreeIdeal& j, const LatticePoint& v) {
  if (v.size() != j.ambient_p()) {
    throw DimensionError("multidegree has the wrong length");
  }
}

}  // namespace

std::int64_t hilbert_function_enumerate(const SquareFreeIdeal& j,
                                        const LatticePoint& v, std::int64_t cap) {
  check_degree(j, v);
  const std::size_t p = j.ambient_p();
  const LatticePoint& m = j.ambient();
  std::int64_t total_monomials = 1;
  for (std::size_t i = 0; i < p; ++i) {
    total_monomials = checked_mul(total_monomials, shifted_binomial(v[i], m[i]));
    if (total_monomials > cap) {
      throw ResourceError("hilbert_function_enumerate: more than " +
                          std::to_string(cap) + " monomials");
    }
  }
  // A monomial avoids p_a iff in each component i its smallest variable index
  // is at least a_i. Enumerate every monomial as a tuple of per-component
  // exponent vectors and record only those minima.
  std::vector<std::vector<int>> minima(p);
  for (std::size_t i = 0; i < p; ++i) {
    const int vars = m[i] + 1;
    if (v[i] == 0) {
      minima[i].push_back(vars);
      continue;
    }
    std::vector<int> e(vars, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == vars - 1) {
        e[idx] = left;
        int lo = 0;
        while (e[lo] == 0) ++lo;
        minima[i].push_back(lo);
        return;
      }
      for (int x = left; x >= 0; --x) {
        e[idx] = x;
        rec(idx + 1, left - x);
      }
    };
    rec(0, v[i]);
  }
  std::int64_t count = 0;
  std::vector<int> lows(p, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == p) {
      for (const auto& a : j.primes()) {
        bool avoids = true;
        for (std::size_t r = 0; r < p && avoids; ++r) avoids = lows[r] >= a[r];
        if (avoids) {
          ++count;
          return;
        }
      }
      return;
    }
    for (int lo : minima[i]) {
      lows[i] = lo;
      walk(i + 1);
    }
  };
  walk(0);
  return count;
}

std::int64_t hilbert_function_closed_form(const SquareFreeIdeal& j,
                                          const LatticePoint& v, std::size_t cap) {
  check_degree(j, v);
  subset_cap_check(j.primes().size(), cap);
  const LatticePoint& m = j.ambient();
  std::int64_t total = 0;
  for_each_prime_subset(j.primes(), [&](const LatticePoint& a, std::size_t size) {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      term = checked_mul(term, shifted_binomial(v[i], m[i] - a[i]));
    }
    total = size % 2 == 1 ? checked_add(total, term) : checked_sub(total, term);
  });
  return total;
}

std::int64_t hilbert_function_bruteforce(const SquareFreeIdeal& j,
                                         const LatticePoint& v, std::int64_t cap) {
  const std::int64_t listed = hilbert_function_enumerate(j, v, cap);
  const std::int64_t closed = hilbert_function_closed_form(j, v);
  if (listed != closed) {
    throw InternalError("Hilbert function at " + v.to_string() +
                        ": enumeration gives " + std::to_string(listed) +
                        ", inclusion-exclusion gives " + std::to_string(closed));
  }
  return listed;
}

SquareFreeIdeal msupp_to_ideal(const PointSet& msupp, const LatticePoint& m) {
  if (msupp.empty()) throw ArgumentError("msupp_to_ideal of an empty set");
  if (msupp.ambient_p() != m.size()) throw DimensionError("msupp and m differ in length");
  std::vector<LatticePoint> primes;
  for (const auto& n : msupp) {
    if (!leq(n, m)) {
      throw ArgumentError(n.to_string() + " is not below " + m.to_string());
    }
    primes.push_back(difference(m, n));
  }
  return SquareFreeIdeal(m, std::move(primes));
}

}  // namespace kpoly

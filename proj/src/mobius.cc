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

#include "kpoly/mobius.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "kpoly/checked.h"
#include "kpoly/errors.h"
#include "kpoly/polymatroid.h"
#include "kpoly/stalactite.h"

namespace kpoly {

namespace {

void require_polymatroid(const PointSet& p, const char* what) {
  if (p.empty()) throw PreconditionError(std::string(what) + ": empty set");
  if (Verdict v = is_base_polymatroid(p); !v) {
    throw PreconditionError(std::string(what) + " needs a base polymatroid: " +
                            v.describe());
  }
}

}  // namespace

PointSet downset(const PointSet& p) {
  if (p.empty()) throw EmptySetError("downset of an empty set");
  const std::size_t n = p.ambient_p();
  std::vector<LatticePoint> out;
  for (const auto& v : p) {
    std::vector<int> u(n, 0);
    while (true) {
      out.emplace_back(u);
      std::size_t k = 0;
      while (k < n && u[k] == v[k]) u[k++] = 0;
      if (k == n) break;
      ++u[k];
    }
  }
  return PointSet(n, std::move(out));
}

SignedSupport mobius_to_top(const PointSet& p) {
  require_polymatroid(p, "mobius_to_top");
  const PointSet down = downset(p);
  const std::size_t n = p.ambient_p();
  if (n >= 31) throw ResourceError("mobius_to_top: too many coordinates");
  SignedSupport mu(n);
  for (const auto& u : down) {
    std::int64_t s = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w = u.coords();
      for (std::size_t i = 0; i < n; ++i) w[i] += mask >> i & 1u;
      if (down.contains(LatticePoint(std::move(w)))) {
        s += std::popcount(mask) % 2 == 0 ? 1 : -1;
      }
    }
    mu.add(u, -s);
  }
  return mu;
}

SignedSupport mobius_to_top_recursive(const PointSet& p, std::size_t cap) {
  require_polymatroid(p, "mobius_to_top_recursive");
  const PointSet down = downset(p);
  if (down.size() > cap) {
    throw ResourceError("downset of size " + std::to_string(down.size()) +
                        " exceeds the recursion cap " + std::to_string(cap));
  }
  std::vector<LatticePoint> order(down.begin(), down.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.sum() > b.sum();
  });
  std::vector<std::pair<LatticePoint, std::int64_t>> done;
  SignedSupport mu(p.ambient_p());
  for (const auto& u : order) {
    std::int64_t value = -1;
    for (const auto& [w, mw] : done) {
      if (w != u && leq(u, w)) value = checked_sub(value, mw);
    }
    done.emplace_back(u, value);
    mu.add(u, value);
  }
  return mu;
}

Verdict verify_deg_equals_neg_mobius(const PointSet& msupp) {
  const SignedSupport h = hsupp_from_msupp(msupp);
  const SignedSupport mu = mobius_to_top(msupp);
  const PointSet down = downset(msupp);
  for (const auto& [n, c] : h) {
    if (!down.contains(n)) {
      return Verdict::fail(Witness{"hilbert-support-outside-downset", {n}, {}, {}});
    }
  }
  for (const auto& u : down) {
    const std::int64_t deg = h.coefficient(u);
    const std::int64_t m = mu.coefficient(u);
    if (deg != -m) {
      return Verdict::fail(Witness{
          "deg-equals-neg-mobius", {u}, {},
          "deg=" + std::to_string(deg) + " mu=" + std::to_string(m)});
    }
  }
  return Verdict::pass();
}

IntPolynomial kpoly_from_mobius(const PointSet& msupp, const LatticePoint& m) {
  if (msupp.ambient_p() != m.size()) throw DimensionError("msupp and m differ in length");
  for (const auto& n : msupp) {
    if (!leq(n, m)) throw ArgumentError(n.to_string() + " is not below " + m.to_string());
  }
  const SignedSupport mu = mobius_to_top(msupp);
  std::vector<IntPolynomial::Term> terms;
  for (const auto& [u, value] : mu) {
    terms.push_back({difference(m, u), checked_neg(value)});
  }
  return IntPolynomial::from_terms(m.size(), std::move(terms));
}

PointSet mu_support(const PointSet& p) { return mobius_to_top(p).keys(); }

Matroid::Matroid(PointSet bases) : bases_(std::move(bases)) {
  if (bases_.empty()) throw ArgumentError("a matroid needs at least one basis");
  for (const auto& b : bases_) {
    for (int x : b) {
      if (x > 1) throw ArgumentError("basis " + b.to_string() + " is not a 0/1 vector");
    }
  }
  if (Verdict v = is_base_polymatroid(bases_); !v) {
    throw ArgumentError("bases fail the exchange axiom: " + v.describe());
  }
}

bool Matroid::is_independent(const LatticePoint& x) const {
  return std::any_of(bases_.begin(), bases_.end(),
                     [&](const auto& b) { return leq(x, b); });
}

std::vector<std::size_t> coloops(const Matroid& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.ground_size(); ++i) {
    if (std::all_of(m.bases().begin(), m.bases().end(),
                    [&](const auto& b) { return b[i] == 1; })) {
      out.push_back(i);
    }
  }
  return out;
}

Matroid contraction(const Matroid& m, const LatticePoint& independent) {
  if (independent.size() != m.ground_size()) {
    throw DimensionError("contraction: vector has the wrong length");
  }
  for (int x : independent) {
    if (x > 1) throw ArgumentError("contraction needs a 0/1 vector");
  }
  if (!m.is_independent(independent)) {
    throw ArgumentError(independent.to_string() + " is not independent");
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.ground_size(); ++i) {
    if (independent[i] == 0) kept.push_back(i);
  }
  std::vector<LatticePoint> bases;
  for (const auto& b : m.bases()) {
    if (!leq(independent, b)) continue;
    std::vector<int> c;
    for (std::size_t i : kept) c.push_back(b[i]);
    bases.emplace_back(std::move(c));
  }
  return Matroid(PointSet(kept.size(), std::move(bases)));
}

std::int64_t reduced_euler_characteristic(const Matroid& m) {
  std::int64_t chi = 0;
  for (const auto& face : downset(m.bases())) {
    chi += face.sum() % 2 == 1 ? 1 : -1;
  }
  return chi;
}

PointSet mu_support_from_coloops(const Matroid& m) {
  const std::size_t p = m.ground_size();
  const std::vector<std::size_t> a = coloops(m);
  std::vector<int> ones(p, 0);
  for (std::size_t i : a) ones[i] = 1;
  const Matroid minor = contraction(m, LatticePoint(ones));
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < p; ++i) {
    if (ones[i] == 0) kept.push_back(i);
  }
  std::vector<LatticePoint> out;
  for (const auto& x : downset(minor.bases())) {
    std::vector<int> c = ones;
    for (std::size_t k = 0; k < kept.size(); ++k) c[kept[k]] = x[k];
    out.emplace_back(std::move(c));
  }
  return PointSet(p, std::move(out));
}

Verdict verify_matroid_mu_theorem(const Matroid& m) {
  const PointSet& b = m.bases();
  const SignedSupport mu = mobius_to_top(b);
  const SignedSupport mu_rec = mobius_to_top_recursive(b);
  if (mu != mu_rec) {
    return Verdict::fail(Witness{"mobius-methods-disagree", {}, {}, b.to_string()});
  }
  const std::int64_t chi = reduced_euler_characteristic(m);
  const LatticePoint zero = LatticePoint::zero(m.ground_size());
  if (chi != mu.coefficient(zero)) {
    return Verdict::fail(Witness{"euler-characteristic", {zero}, {},
                                 "chi=" + std::to_string(chi) + " mu(0,1)=" +
                                     std::to_string(mu.coefficient(zero))});
  }
  const std::vector<std::size_t> cl = coloops(m);
  if ((chi == 0) != !cl.empty()) {
    return Verdict::fail(Witness{"coloop-criterion", {}, cl,
                                 "chi=" + std::to_string(chi)});
  }
  const PointSet direct = mu.keys();
  const PointSet predicted = mu_support_from_coloops(m);
  if (direct != predicted) {
    return Verdict::fail(Witness{"mu-support-description", {}, cl,
                                 "direct " + direct.to_string() + " predicted " +
                                     predicted.to_string()});
  }
  if (Verdict g = is_g_polymatroid(direct); !g) {
    Witness w = *g.witness();
    w.rule = "mu-support-g-polymatroid/" + w.rule;
    return Verdict::fail(std::move(w));
  }
  return Verdict::pass();
}

std::vector<Matroid> enumerate_matroids(std::size_t p) {
  if (p > 6) throw ResourceError("enumerate_matroids is limited to p <= 6");
  std::vector<Matroid> out;
  for (std::size_t r = 0; r <= p; ++r) {
    std::vector<LatticePoint> layer;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
      std::vector<int> c(p);
      for (std::size_t i = 0; i < p; ++i) c[i] = mask >> i & 1u;
      layer.emplace_back(std::move(c));
    }
    if (layer.size() > 24) throw ResourceError("enumerate_matroids: layer too large");
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << layer.size()); ++pick) {
      std::vector<LatticePoint> bases;
      for (std::size_t k = 0; k < layer.size(); ++k) {
        if (pick >> k & 1u) bases.push_back(layer[k]);
      }
      PointSet set(p, std::move(bases));
      if (is_base_polymatroid(set)) out.emplace_back(std::move(set));
    }
  }
  return out;
}

PointSet random_polymatroid(std::size_t p, int max_coord, std::uint64_t seed) {
  if (p == 0 || p > 8) throw ArgumentError("random_polymatroid: p must be in [1, 8]");
  if (max_coord < 1) throw ArgumentError("random_polymatroid: max_coord must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  struct Block {
    std::uint32_t members;
    int cap;
    int weight;
  };
  std::vector<Block> blocks;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    blocks.clear();
    const int count = uniform(1, static_cast<int>(p) + 1);
    for (int k = 0; k < count; ++k) {
      const auto members =
          static_cast<std::uint32_t>(uniform(1, (1 << p) - 1));
      blocks.push_back({members, uniform(1, max_coord), uniform(1, 2)});
    }
    bool ok = true;
    for (std::size_t i = 0; i < p && ok; ++i) {
      int single = 0;
      for (const auto& b : blocks) {
        if (b.members >> i & 1u) single += b.weight;
      }
      ok = single <= max_coord;
    }
    if (ok) break;
    blocks = {{(1u << p) - 1, 1, 1}};
  }
  std::vector<std::int64_t> rank(std::size_t{1} << p, 0);
  for (std::uint32_t mask = 0; mask < rank.size(); ++mask) {
    for (const auto& b : blocks) {
      rank[mask] += static_cast<std::int64_t>(b.weight) *
                    std::min(b.cap, std::popcount(mask & b.members));
    }
  }
  return base_polytope_points(p, rank);
}

ExploreReport explore_mu_support(std::size_t trials, std::size_t max_p,
                                 int max_coord, std::uint64_t seed) {
  if (max_p == 0) throw ArgumentError("explore: max_p must be positive");
  std::mt19937_64 rng(seed);
  ExploreReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t p = 1 + rng() % max_p;
    const PointSet poly = random_polymatroid(p, max_coord, rng());
    ++report.trials;
    const PointSet supp = mu_support(poly);
    if (Verdict v = is_g_polymatroid(supp); v) {
      ++report.holds;
    } else if (!report.counterexample) {
      report.counterexample = poly;
      report.witness = v.witness();
    }
  }
  return report;
}

}  // namespace kpoly

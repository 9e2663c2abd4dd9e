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

#include "kpoly/polymatroid.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <map>
#include <tuple>
#include <string>

#include "kpoly/errors.h"
#include "kpoly/stalactite.h"

namespace kpoly {

namespace {

Witness make_witness(std::string rule, std::vector<LatticePoint> points,
                     std::vector<std::size_t> indices = {},
                     std::string detail = {}) {
  return Witness{std::move(rule), std::move(points), std::move(indices),
                 std::move(detail)};
}

Verdict exchange_axiom(const PointSet& p) {
  const std::size_t n = p.ambient_p();
  for (const auto& u : p) {
    for (const auto& v : p) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (u[j] < v[j] && p.contains(u.exchanged(i, j))) found = true;
        }
        if (!found) return Verdict::fail(make_witness("exchange", {u, v}, {i}));
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_base_polymatroid(const PointSet& p) {
  if (p.empty()) return Verdict::pass();
  const std::int64_t d = p[0].sum();
  for (const auto& a : p) {
    if (a.sum() != d) {
      return Verdict::fail(make_witness("homogeneity", {p[0], a}, {},
                                        "coordinate sums differ"));
    }
  }
  return exchange_axiom(p);
}

Verdict check_symmetric_exchange(const PointSet& p) {
  if (Verdict base = is_base_polymatroid(p); !base) {
    throw PreconditionError("symmetric exchange needs a base polymatroid: " +
                            base.describe());
  }
  const std::size_t n = p.ambient_p();
  for (const auto& u : p) {
    for (const auto& v : p) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          found = u[j] < v[j] && p.contains(u.exchanged(i, j)) &&
                  p.contains(v.exchanged(j, i));
        }
        if (!found) {
          return Verdict::fail(make_witness("symmetric-exchange", {u, v}, {i}));
        }
      }
    }
  }
  return Verdict::pass();
}

const char* method_name(GPolyMethod method) {
  switch (method) {
    case GPolyMethod::kAxioms:
      return "axioms";
    case GPolyMethod::kHomogenization:
      return "homogenization";
    case GPolyMethod::kInequalityPoints:
      return "inequality_points";
  }
  return "?";
}

namespace {

// Exchange and Expansion, quantifying only over moves of u.
Verdict g_axioms(const PointSet& g) {
  const std::size_t n = g.ambient_p();
  for (const auto& u : g) {
    const std::int64_t su = u.sum();
    for (const auto& v : g) {
      const std::int64_t sv = v.sum();
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool ok = su > sv && g.contains(u.sub_unit(i));
        for (std::size_t j = 0; j < n && !ok; ++j) {
          ok = u[j] < v[j] && g.contains(u.exchanged(i, j));
        }
        if (!ok) return Verdict::fail(make_witness("exchange", {u, v}, {i}));
      }
      if (su < sv) {
        bool ok = false;
        for (std::size_t j = 0; j < n && !ok; ++j) {
          ok = u[j] < v[j] && g.contains(u.add_unit(j));
        }
        if (!ok) return Verdict::fail(make_witness("expansion", {u, v}));
      }
    }
  }
  return Verdict::pass();
}

Verdict g_homogenization(const PointSet& g) {
  Verdict v = is_base_polymatroid(homogenize(g));
  if (v) return v;
  Witness w = *v.witness();
  w.rule = "homogenization/" + w.rule;
  return Verdict::fail(std::move(w));
}

Verdict g_inequality_points(const PointSet& g) {
  const GPolyInequalitySystem sys = inequality_system(g);
  if (Verdict pm = is_paramodular(sys); !pm) return pm;
  const PointSet pts = integer_points(sys);
  if (pts == g) return Verdict::pass();
  for (const auto& y : pts) {
    if (!g.contains(y)) {
      return Verdict::fail(make_witness("inequality-points", {y}, {},
                                        "lattice point of the system missing "
                                        "from the set"));
    }
  }
  // Every point of g satisfies its own tight bounds, so this is unreachable.
  throw InternalError("integer_points lost a point of the generating set");
}

}  // namespace

Verdict is_g_polymatroid(const PointSet& g, GPolyMethod method) {
  if (g.empty()) return Verdict::pass();
  switch (method) {
    case GPolyMethod::kAxioms:
      return g_axioms(g);
    case GPolyMethod::kHomogenization:
      return g_homogenization(g);
    case GPolyMethod::kInequalityPoints:
      return g_inequality_points(g);
  }
  throw ArgumentError("unknown g-polymatroid method");
}

GPolyInequalitySystem inequality_system(const PointSet& a) {
  if (a.empty()) throw ArgumentError("inequality_system of an empty set");
  const std::size_t p = a.ambient_p();
  if (p >= 31) throw ResourceError("inequality_system: too many coordinates");
  GPolyInequalitySystem sys;
  sys.ambient_p = p;
  sys.lower.assign(std::size_t{1} << p, 0);
  sys.upper.assign(std::size_t{1} << p, 0);
  for (std::uint32_t mask = 1; mask < sys.num_subsets(); ++mask) {
    const std::vector<std::size_t> idx = mask_indices(mask);
    const SumBounds sb = support_bounds(a, idx);
    sys.lower[mask] = sb.min_sum;
    sys.upper[mask] = sb.max_sum;
  }
  return sys;
}

namespace {

struct PointSearch {
  const GPolyInequalitySystem& sys;
  std::size_t p;
  std::vector<int> y;
  std::vector<LatticePoint> out;

  // Every mask touching only fixed coordinates is checked exactly; the rest
  // are checked for feasibility against what the free coordinates can add.
  bool feasible(std::size_t fixed) const {
    const std::uint32_t fixed_mask =
        fixed >= 32 ? ~0u : static_cast<std::uint32_t>((std::uint64_t{1} << fixed) - 1);
    for (std::uint32_t mask = 1; mask < sys.num_subsets(); ++mask) {
      std::int64_t s = 0;
      std::int64_t room = 0;
      for (std::size_t i = 0; i < p; ++i) {
        if (!(mask >> i & 1u)) continue;
        if (fixed_mask >> i & 1u) {
          s += y[i];
        } else {
          room += std::max<std::int64_t>(0, sys.b(1u << i));
        }
      }
      if (s > sys.b(mask)) return false;
      if (s + room < sys.c(mask)) return false;
    }
    return true;
  }

  void run(std::size_t k) {
    if (!feasible(k)) return;
    if (k == p) {
      out.emplace_back(y);
      return;
    }
    const std::int64_t hi = sys.b(1u << k);
    for (std::int64_t v = 0; v <= hi; ++v) {
      y[k] = static_cast<int>(v);
      run(k + 1);
    }
    y[k] = 0;
  }
};

}  // namespace

PointSet integer_points(const GPolyInequalitySystem& sys) {
  const std::size_t p = sys.ambient_p;
  if (sys.lower.size() != (std::size_t{1} << p) ||
      sys.upper.size() != (std::size_t{1} << p)) {
    throw DimensionError("inequality system tables do not have 2^p entries");
  }
  if (p == 0) return PointSet(0, {LatticePoint()});
  PointSearch search{sys, p, std::vector<int>(p, 0), {}};
  for (std::size_t i = 0; i < p; ++i) {
    if (sys.b(1u << i) < 0) return PointSet(p);
  }
  search.run(0);
  return PointSet(p, std::move(search.out));
}

Verdict is_paramodular(const GPolyInequalitySystem& sys) {
  const std::uint32_t n = sys.num_subsets();
  auto bound_witness = [&](const char* rule, std::uint32_t x, std::uint32_t y) {
    return Verdict::fail(make_witness(
        rule, {}, {},
        "X=" + std::to_string(x) + " Y=" + std::to_string(y) + " (bitmasks)"));
  };
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (sys.b(x) + sys.b(y) < sys.b(x | y) + sys.b(x & y)) {
        return bound_witness("upper-bound-submodularity", x, y);
      }
      if (sys.c(x) + sys.c(y) > sys.c(x | y) + sys.c(x & y)) {
        return bound_witness("lower-bound-supermodularity", x, y);
      }
      if (sys.b(x) - sys.c(y) < sys.b(x & ~y) - sys.c(y & ~x)) {
        return bound_witness("cross-inequality", x, y);
      }
    }
  }
  return Verdict::pass();
}

PointSet base_polytope_points(std::size_t p,
                              std::span<const std::int64_t> rank_by_mask) {
  if (p >= 31) throw ResourceError("base_polytope_points: too many coordinates");
  const std::uint32_t n = 1u << p;
  if (rank_by_mask.size() != n) {
    throw DimensionError("rank table does not have 2^p entries");
  }
  const std::uint32_t full = n - 1;
  GPolyInequalitySystem sys;
  sys.ambient_p = p;
  sys.lower.assign(n, 0);
  sys.upper.assign(rank_by_mask.begin(), rank_by_mask.end());
  sys.upper[0] = 0;
  for (std::uint32_t mask = 1; mask < n; ++mask) {
    // y(J) = y([p]) - y([p] \ J) >= rank([p]) - rank([p] \ J).
    sys.lower[mask] = rank_by_mask[full] - rank_by_mask[full & ~mask];
  }
  return integer_points(sys);
}

bool is_polymatroid_rank(std::size_t p,
                         std::span<const std::int64_t> rank_by_mask) {
  const std::uint32_t n = 1u << p;
  if (rank_by_mask.size() != n || rank_by_mask[0] != 0) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < p; ++i) {
      if (rank_by_mask[x] > rank_by_mask[x | (1u << i)]) return false;
    }
    for (std::uint32_t y = 0; y < n; ++y) {
      if (rank_by_mask[x] + rank_by_mask[y] <
          rank_by_mask[x | y] + rank_by_mask[x & y]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<AxisOrder> cave_orders(std::size_t p, const CaveOrderPolicy& policy) {
  switch (policy.kind) {
    case CaveOrderPolicy::Kind::kNatural:
      return {natural_order(p)};
    case CaveOrderPolicy::Kind::kAllOrders: {
      if (p > kMaxExhaustiveOrderP) {
        throw ArgumentError("all axis orders requested for p = " +
                            std::to_string(p) +
                            "; pass an explicit sample(k, seed) policy");
      }
      std::vector<AxisOrder> all;
      AxisOrder order = natural_order(p);
      do {
        all.push_back(order);
      } while (std::next_permutation(order.begin(), order.end()));
      return all;
    }
    case CaveOrderPolicy::Kind::kSample: {
      std::mt19937_64 rng(policy.seed);
      std::vector<AxisOrder> picked;
      for (std::size_t k = 0; k < policy.samples; ++k) {
        AxisOrder order = natural_order(p);
        std::shuffle(order.begin(), order.end(), rng);
        picked.push_back(std::move(order));
      }
      return picked;
    }
  }
  throw ArgumentError("unknown cave order policy");
}

namespace {

// Conditions (a) and (b) of a cave for one nonempty truncation.
Verdict cave_layer_conditions(const PointSet& trunc,
                              const std::vector<AxisOrder>& orders,
                              const LatticePoint& bp) {
  const PointSet t = top(trunc);
  if (Verdict base = is_base_polymatroid(t); !base) {
    Witness w = *base.witness();
    w.rule = "cave-top/" + w.rule;
    w.points.insert(w.points.begin(), bp);
    w.detail = "first point is the truncation vector b";
    return Verdict::fail(std::move(w));
  }
  for (const auto& order : orders) {
    const PointSet cover = stalactite_union(t, order);
    if (cover == trunc) continue;
    std::vector<LatticePoint> pts{bp};
    for (const auto& x : trunc) {
      if (!cover.contains(x)) pts.push_back(x);
    }
    for (const auto& x : cover) {
      if (!trunc.contains(x)) pts.push_back(x);
    }
    return Verdict::fail(make_witness(
        "stalactite-union", std::move(pts), order,
        "b followed by the points in exactly one of truncation and "
        "stalactite union; indices give the axis order"));
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_cave(const PointSet& c, const CaveOrderPolicy& policy) {
  if (c.empty()) throw ArgumentError("is_cave of an empty set");
  const std::size_t p = c.ambient_p();
  const std::vector<AxisOrder> orders = cave_orders(p, policy);

  std::vector<int> box(p, 0);
  for (const auto& a : c) {
    for (std::size_t i = 0; i < p; ++i) box[i] = std::max(box[i], a[i]);
  }

  // Truncation -> whether its g-polymatroid condition has been checked.
  std::map<std::vector<LatticePoint>, bool> seen;
  std::vector<int> b(p, 0);
  while (true) {
    const LatticePoint bp(b);
    const PointSet trunc = truncate(c, bp);
    const bool nonzero =
        std::any_of(b.begin(), b.end(), [](int x) { return x != 0; });
    auto it = seen.end();
    if (!trunc.empty()) {
      bool fresh = false;
      std::tie(it, fresh) = seen.try_emplace(trunc.points(), false);
      if (fresh) {
        if (Verdict v = cave_layer_conditions(trunc, orders, bp); !v) return v;
      }
    }
    if (it != seen.end() && nonzero && !it->second) {
      it->second = true;
      if (Verdict g = is_g_polymatroid(trunc); !g) {
        Witness w = *g.witness();
        w.rule = "cave-truncation/" + w.rule;
        w.points.insert(w.points.begin(), bp);
        w.detail = "first point is the truncation vector b";
        return Verdict::fail(std::move(w));
      }
    }
    std::size_t k = 0;
    while (k < p && b[k] == box[k]) b[k++] = 0;
    if (k == p) break;
    ++b[k];
  }
  return Verdict::pass();
}

}  // namespace kpoly

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

#include "kpoly/stalactite.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>

#include "kpoly/checked.h"
#include "kpoly/errors.h"
#include "kpoly/polymatroid.h"

namespace kpoly {

PointSet stalactite(const LatticePoint& u, std::span<const std::size_t> indices) {
  std::set<std::size_t> distinct;
  for (std::size_t l : indices) {
    if (l >= u.size()) throw DimensionError("stalactite index out of range");
    if (u[l] == 0) {
      throw ArgumentError("stalactite index " + std::to_string(l + 1) +
                          " is outside the support of " + u.to_string());
    }
    if (!distinct.insert(l).second) {
      throw ArgumentError("duplicate stalactite index " + std::to_string(l + 1));
    }
  }
  if (indices.size() >= 31) throw ResourceError("stalactite too large");
  std::vector<LatticePoint> pts;
  const std::uint32_t n = 1u << indices.size();
  pts.reserve(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) {
    std::vector<int> c = u.coords();
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (mask >> k & 1u) --c[indices[k]];
    }
    pts.emplace_back(std::move(c));
  }
  return PointSet(u.size(), std::move(pts));
}

std::vector<std::size_t> neighbor_directions(const LatticePoint& u,
                                             const PointSet& v) {
  std::vector<std::size_t> dirs;
  if (v.empty()) return dirs;
  if (v.ambient_p() != u.size()) {
    throw DimensionError("neighbor_directions: point and set lengths differ");
  }
  for (std::size_t l = 0; l < u.size(); ++l) {
    if (u[l] == 0) continue;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (j != l && v.contains(u.exchanged(l, j))) {
        dirs.push_back(l);
        break;
      }
    }
  }
  return dirs;
}

std::vector<StalactiteStep> stalactite_decomposition(const PointSet& top_points,
                                                     const AxisOrder& order) {
  const std::vector<LatticePoint> sorted = top_points.sorted_by(order);
  std::vector<StalactiteStep> steps;
  steps.reserve(sorted.size());
  std::vector<LatticePoint> earlier;
  for (const auto& a : sorted) {
    const PointSet before(top_points.ambient_p(), earlier);
    std::vector<std::size_t> dirs = neighbor_directions(a, before);
    PointSet pts = stalactite(a, dirs);
    steps.push_back(StalactiteStep{a, std::move(dirs), std::move(pts)});
    earlier.push_back(a);
  }
  return steps;
}

PointSet stalactite_union(const PointSet& top_points, const AxisOrder& order) {
  std::vector<LatticePoint> all;
  for (const auto& step : stalactite_decomposition(top_points, order)) {
    all.insert(all.end(), step.points.begin(), step.points.end());
  }
  return PointSet(top_points.ambient_p(), std::move(all));
}

CoordinateCollapse CoordinateCollapse::of(const PointSet& points) {
  if (points.empty()) throw EmptySetError("coordinate collapse of an empty set");
  CoordinateCollapse cc;
  const std::size_t p = points.ambient_p();
  cc.fixed_.assign(p, -1);
  for (std::size_t i = 0; i < p; ++i) {
    const int v = points[0][i];
    const bool constant = std::all_of(points.begin(), points.end(),
                                      [&](const auto& a) { return a[i] == v; });
    if (constant) {
      cc.fixed_[i] = v;
    } else {
      cc.kept_.push_back(i);
    }
  }
  return cc;
}

LatticePoint CoordinateCollapse::collapse(const LatticePoint& a) const {
  if (a.size() != full_p()) throw DimensionError("collapse: wrong length");
  std::vector<int> c;
  c.reserve(kept_.size());
  for (std::size_t i = 0; i < full_p(); ++i) {
    if (fixed_[i] < 0) {
      c.push_back(a[i]);
    } else if (a[i] != fixed_[i]) {
      throw ArgumentError("collapse: " + a.to_string() +
                          " differs from the fixed value in coordinate " +
                          std::to_string(i + 1));
    }
  }
  return LatticePoint(std::move(c));
}

LatticePoint CoordinateCollapse::expand(const LatticePoint& a) const {
  if (a.size() != reduced_p()) throw DimensionError("expand: wrong length");
  std::vector<int> c(full_p());
  std::size_t k = 0;
  for (std::size_t i = 0; i < full_p(); ++i) {
    c[i] = fixed_[i] < 0 ? a[k++] : fixed_[i];
  }
  return LatticePoint(std::move(c));
}

PointSet CoordinateCollapse::collapse(const PointSet& a) const {
  std::vector<LatticePoint> out;
  for (const auto& x : a) out.push_back(collapse(x));
  return PointSet(reduced_p(), std::move(out));
}

PointSet CoordinateCollapse::expand(const PointSet& a) const {
  std::vector<LatticePoint> out;
  for (const auto& x : a) out.push_back(expand(x));
  return PointSet(full_p(), std::move(out));
}

SignedSupport CoordinateCollapse::collapse(const SignedSupport& s) const {
  SignedSupport out(reduced_p());
  for (const auto& [pt, c] : s) out.add(collapse(pt), c);
  return out;
}

SignedSupport CoordinateCollapse::expand(const SignedSupport& s) const {
  SignedSupport out(full_p());
  for (const auto& [pt, c] : s) out.add(expand(pt), c);
  return out;
}

SignedSupport hsupp_from_msupp(const PointSet& msupp) {
  if (msupp.empty()) throw PreconditionError("hsupp_from_msupp: empty support");
  if (Verdict v = is_base_polymatroid(msupp); !v) {
    throw PreconditionError("hsupp_from_msupp needs a base polymatroid: " +
                            v.describe());
  }
  const std::int64_t d = msupp[0].sum();
  std::map<LatticePoint, std::int64_t> count;
  for (const auto& step :
       stalactite_decomposition(msupp, natural_order(msupp.ambient_p()))) {
    for (const auto& x : step.points) ++count[x];
  }
  SignedSupport h(msupp.ambient_p());
  for (const auto& [x, c] : count) {
    h.add(x, (d - x.sum()) % 2 == 0 ? c : -c);
  }
  return h;
}

SignedSupport hsupp_from_msupp_collapsed(const PointSet& msupp) {
  if (msupp.empty()) throw PreconditionError("hsupp_from_msupp: empty support");
  const CoordinateCollapse cc = CoordinateCollapse::of(msupp);
  return cc.expand(hsupp_from_msupp(cc.collapse(msupp)));
}

std::int64_t hilbert_eval(const SignedSupport& h, std::span<const std::int64_t> t) {
  if (t.size() != h.ambient_p()) {
    throw DimensionError("hilbert_eval: evaluation point has the wrong length");
  }
  std::int64_t total = 0;
  for (const auto& [n, c] : h) {
    std::int64_t term = c;
    for (std::size_t i = 0; i < n.size(); ++i) {
      term = checked_mul(term, shifted_binomial(t[i], n[i]));
    }
    total = checked_add(total, term);
  }
  return total;
}

std::string format_hilbert(const SignedSupport& h) {
  if (h.empty()) return "0";
  std::string s;
  for (const auto& [n, c] : h) {
    if (!s.empty()) s += " ";
    s += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == 0) continue;
      const std::string k = std::to_string(n[i]);
      s += "*C(t" + std::to_string(i + 1) + "+" + k + "," + k + ")";
    }
  }
  return s;
}

Facet facet_of(const LatticePoint& n, const LatticePoint& m) {
  if (n.size() != m.size()) throw DimensionError("facet_of: length mismatch");
  if (!leq(n, m)) {
    throw ArgumentError("facet_of: " + n.to_string() + " is not below " +
                        m.to_string());
  }
  Facet f{n, {}};
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (int j = m[i] - n[i]; j <= m[i]; ++j) {
      f.vertices.emplace_back(static_cast<int>(i), j);
    }
  }
  std::sort(f.vertices.begin(), f.vertices.end());
  return f;
}

std::vector<Facet> facets_from_msupp(const PointSet& msupp, const LatticePoint& m) {
  std::vector<Facet> out;
  out.reserve(msupp.size());
  for (const auto& n : msupp) out.push_back(facet_of(n, m));
  return out;
}

namespace {

std::vector<FacetVertex> intersect(const std::vector<FacetVertex>& a,
                                   const std::vector<FacetVertex>& b) {
  std::vector<FacetVertex> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

}  // namespace

Verdict verify_shelling(const std::vector<Facet>& facets) {
  if (facets.empty()) return Verdict::pass();
  const std::size_t dim = facets[0].vertices.size();
  for (const auto& f : facets) {
    if (f.vertices.size() != dim) {
      throw PreconditionError("verify_shelling: facets of different sizes");
    }
  }
  for (std::size_t i = 1; i < facets.size(); ++i) {
    const auto& fi = facets[i].vertices;
    std::vector<std::vector<FacetVertex>> ridges;
    for (std::size_t k = 0; k < i; ++k) {
      auto r = intersect(facets[k].vertices, fi);
      if (r.size() + 1 == dim) ridges.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto meet = intersect(facets[j].vertices, fi);
      const bool covered = std::any_of(ridges.begin(), ridges.end(), [&](const auto& r) {
        return std::includes(r.begin(), r.end(), meet.begin(), meet.end());
      });
      if (!covered) {
        return Verdict::fail(Witness{"shelling",
                                     {facets[j].generator, facets[i].generator},
                                     {j, i},
                                     "intersection not contained in a ridge of "
                                     "an earlier facet"});
      }
    }
  }
  return Verdict::pass();
}

Verdict increasing_path_check(const SignedSupport& h) {
  if (h.empty()) return Verdict::pass();
  const PointSet supp = h.keys();
  const std::int64_t top_sum = max_sum(supp);
  std::vector<LatticePoint> by_sum(supp.begin(), supp.end());
  std::stable_sort(by_sum.begin(), by_sum.end(), [](const auto& a, const auto& b) {
    return a.sum() > b.sum();
  });
  std::set<LatticePoint> good;
  for (const auto& x : by_sum) {
    bool ok = x.sum() == top_sum;
    for (std::size_t i = 0; i < x.size() && !ok; ++i) {
      ok = good.count(x.add_unit(i)) > 0;
    }
    if (!ok) {
      return Verdict::fail(Witness{"increasing-path", {x}, {},
                                   "no increasing path to a top point"});
    }
    good.insert(x);
  }
  return Verdict::pass();
}

std::int64_t mobius_sum_check(const SignedSupport& h, const LatticePoint& n) {
  if (h.empty()) throw DomainError("mobius_sum_check: empty support");
  if (n.size() != h.ambient_p()) {
    throw DimensionError("mobius_sum_check: point has the wrong length");
  }
  const std::int64_t top_sum = max_sum(h.keys());
  bool dominated = false;
  std::int64_t total = 0;
  for (const auto& [w, c] : h) {
    if (!leq(n, w)) continue;
    total = checked_add(total, c);
    if (w.sum() == top_sum) dominated = true;
  }
  if (!dominated) {
    throw DomainError("mobius_sum_check: no top point dominates " + n.to_string());
  }
  return total;
}

}  // namespace kpoly

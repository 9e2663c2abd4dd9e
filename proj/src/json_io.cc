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

#include "kpoly/json_io.h"

#include <fstream>
#include <limits>
#include <string>

#include "kpoly/errors.h"

namespace kpoly::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw ArgumentError("malformed JSON: " + what);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int as_coord(const Json& j) {
  const std::int64_t v = as_int(j, "coordinate");
  if (v < 0 || v > std::numeric_limits<int>::max()) bad("coordinate out of range");
  return static_cast<int>(v);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json index_list(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(i + 1);
  return a;
}

std::uint32_t parse_subset(const Json& j, std::size_t p) {
  if (!j.is_array() || j.empty()) bad("J must be a nonempty index array");
  std::uint32_t mask = 0;
  for (const auto& x : j) {
    const std::int64_t i = as_int(x, "index");
    if (i < 1 || static_cast<std::size_t>(i) > p) bad("index out of range in J");
    mask |= 1u << (i - 1);
  }
  return mask;
}

Json rational_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_array() || j.size() != 2) bad("rational must be [num, den]");
  const std::int64_t den = as_int(j[1], "denominator");
  if (den == 0) bad("zero denominator");
  return Rational(as_int(j[0], "numerator"), den);
}

}  // namespace

Json to_json(const LatticePoint& a) { return Json(a.coords()); }

Json to_json(const PointSet& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(to_json(x));
  return a;
}

Json to_json(const SignedSupport& s) {
  Json a = Json::array();
  for (const auto& [n, c] : s) a.push_back({{"exp", to_json(n)}, {"coeff", c}});
  return a;
}

Json to_json(const IntPolynomial& f) {
  Json a = Json::array();
  for (const auto& t : f) a.push_back({{"exp", to_json(t.exponent)}, {"coeff", t.coeff}});
  return a;
}

Json to_json(const GPolyInequalitySystem& sys) {
  Json bounds = Json::array();
  for (std::uint32_t mask = 1; mask < sys.num_subsets(); ++mask) {
    bounds.push_back(
        {{"J", index_list(mask_indices(mask))}, {"c", sys.c(mask)}, {"b", sys.b(mask)}});
  }
  return {{"p", sys.ambient_p}, {"bounds", bounds}};
}

Json to_json(const SquareFreeIdeal& j) {
  Json primes = Json::array();
  for (const auto& a : j.primes()) primes.push_back(to_json(a));
  return {{"m", to_json(j.ambient())}, {"primes", primes}};
}

Json to_json(const Matroid& m) {
  return {{"p", m.ground_size()}, {"bases", to_json(m.bases())}};
}

Json to_json(const SubspaceConfig& c) {
  Json subspaces = Json::array();
  for (const auto& gens : c.subspaces) {
    Json g = Json::array();
    for (const auto& v : gens) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(rational_json(x));
      g.push_back(row);
    }
    subspaces.push_back(g);
  }
  return {{"q", c.q}, {"subspaces", subspaces}};
}

Json to_json(const Permutation& w) { return Json(w.one_line()); }

Json to_json(const Witness& w) {
  Json pts = Json::array();
  for (const auto& x : w.points) pts.push_back(to_json(x));
  return {{"rule", w.rule},
          {"points", pts},
          {"indices", index_list(w.indices)},
          {"detail", w.detail}};
}

Json to_json(const Verdict& v) {
  Json j = {{"holds", v.holds()}};
  if (!v.holds()) j["witness"] = to_json(*v.witness());
  return j;
}

LatticePoint parse_point(const Json& j) {
  if (!j.is_array()) bad("lattice point must be an array");
  std::vector<int> c;
  for (const auto& x : j) c.push_back(as_coord(x));
  return LatticePoint(std::move(c));
}

PointSet parse_point_set(const Json& j, std::size_t p_hint) {
  if (!j.is_array()) bad("point set must be an array of arrays");
  std::vector<LatticePoint> pts;
  for (const auto& x : j) pts.push_back(parse_point(x));
  const std::size_t p = pts.empty() ? p_hint : pts[0].size();
  for (const auto& x : pts) {
    if (x.size() != p) bad("points of different lengths");
  }
  return PointSet(p, std::move(pts));
}

SignedSupport parse_signed_support(const Json& j, std::size_t p_hint) {
  if (!j.is_array()) bad("signed support must be an array of {exp, coeff}");
  std::size_t p = p_hint;
  if (!j.empty()) p = parse_point(field(j[0], "exp")).size();
  SignedSupport s(p);
  for (const auto& t : j) {
    const LatticePoint e = parse_point(field(t, "exp"));
    if (e.size() != p) bad("exponents of different lengths");
    s.add(e, as_int(field(t, "coeff"), "coeff"));
  }
  return s;
}

IntPolynomial parse_polynomial(const Json& j, std::size_t p_hint) {
  return poly_from_signed_support(parse_signed_support(j, p_hint));
}

GPolyInequalitySystem parse_inequality_system(const Json& j) {
  const std::int64_t p = as_int(field(j, "p"), "p");
  if (p < 1 || p > 20) bad("p out of range");
  GPolyInequalitySystem sys;
  sys.ambient_p = static_cast<std::size_t>(p);
  sys.lower.assign(std::size_t{1} << p, 0);
  sys.upper.assign(std::size_t{1} << p, 0);
  std::vector<bool> seen(sys.lower.size(), false);
  const Json& bounds = field(j, "bounds");
  if (!bounds.is_array()) bad("bounds must be an array");
  for (const auto& b : bounds) {
    const std::uint32_t mask = parse_subset(field(b, "J"), sys.ambient_p);
    if (seen[mask]) bad("duplicate subset in bounds");
    seen[mask] = true;
    sys.lower[mask] = as_int(field(b, "c"), "c");
    sys.upper[mask] = as_int(field(b, "b"), "b");
  }
  for (std::size_t mask = 1; mask < seen.size(); ++mask) {
    if (!seen[mask]) bad("bounds must list every nonempty subset");
  }
  return sys;
}

SquareFreeIdeal parse_ideal(const Json& j) {
  LatticePoint m = parse_point(field(j, "m"));
  const Json& primes = field(j, "primes");
  if (!primes.is_array()) bad("primes must be an array");
  std::vector<LatticePoint> a;
  for (const auto& x : primes) a.push_back(parse_point(x));
  return SquareFreeIdeal(std::move(m), std::move(a));
}

Matroid parse_matroid(const Json& j) {
  const std::int64_t p = as_int(field(j, "p"), "p");
  if (p < 0) bad("p must be nonnegative");
  PointSet bases = parse_point_set(field(j, "bases"), static_cast<std::size_t>(p));
  if (bases.ambient_p() != static_cast<std::size_t>(p)) bad("basis length differs from p");
  return Matroid(std::move(bases));
}

SubspaceConfig parse_subspace_config(const Json& j) {
  SubspaceConfig c;
  const std::int64_t q = as_int(field(j, "q"), "q");
  if (q < 1) bad("q must be positive");
  c.q = static_cast<std::size_t>(q);
  const Json& subspaces = field(j, "subspaces");
  if (!subspaces.is_array()) bad("subspaces must be an array");
  for (const auto& gens : subspaces) {
    if (!gens.is_array()) bad("each subspace is an array of generators");
    std::vector<RationalVector> g;
    for (const auto& v : gens) {
      if (!v.is_array()) bad("generator must be an array");
      RationalVector row;
      for (const auto& x : v) row.push_back(parse_rational(x));
      g.push_back(std::move(row));
    }
    c.subspaces.push_back(std::move(g));
  }
  c.validate();
  return c;
}

Permutation parse_permutation(const Json& j) {
  if (!j.is_array()) bad("permutation must be an array");
  std::vector<int> w;
  for (const auto& x : j) w.push_back(static_cast<int>(as_int(x, "permutation entry")));
  return Permutation(std::move(w));
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(path + ": " + e.what());
  }
}

}  // namespace kpoly::json_io

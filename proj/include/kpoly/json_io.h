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

#ifndef KPOLY_JSON_IO_H_
#define KPOLY_JSON_IO_H_

#include "json.hpp"
#include "kpoly/lattice.h"
#include "kpoly/linear_polymatroid.h"
#include "kpoly/mobius.h"
#include "kpoly/monomial_oracle.h"
#include "kpoly/polymatroid.h"
#include "kpoly/polynomial.h"
#include "kpoly/schubert.h"
#include "kpoly/verdict.h"

// Conversions between library types and their JSON encodings. Index lists
// (subsets J, witness indices, permutations) are 1-based on the JSON side.
// Every parse_* function throws ArgumentError on malformed input.
namespace kpoly::json_io {

using Json = nlohmann::json;

Json to_json(const LatticePoint& a);
Json to_json(const PointSet& s);
// [{"exp": [...], "coeff": c}, ...]
Json to_json(const SignedSupport& s);
Json to_json(const IntPolynomial& f);
Json to_json(const GPolyInequalitySystem& sys);
Json to_json(const SquareFreeIdeal& j);
Json to_json(const Matroid& m);
Json to_json(const SubspaceConfig& c);
Json to_json(const Permutation& w);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);

LatticePoint parse_point(const Json& j);
// Ambient length is taken from the points; `p_hint` is used for an empty array.
PointSet parse_point_set(const Json& j, std::size_t p_hint = 0);
SignedSupport parse_signed_support(const Json& j, std::size_t p_hint = 0);
IntPolynomial parse_polynomial(const Json& j, std::size_t p_hint = 0);
GPolyInequalitySystem parse_inequality_system(const Json& j);
SquareFreeIdeal parse_ideal(const Json& j);
Matroid parse_matroid(const Json& j);
SubspaceConfig parse_subspace_config(const Json& j);
Permutation parse_permutation(const Json& j);

// Reads and parses a UTF-8 JSON file.
Json read_file(const std::string& path);

}  // namespace kpoly::json_io

#endif  // KPOLY_JSON_IO_H_

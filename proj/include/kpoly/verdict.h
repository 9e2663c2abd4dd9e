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

#ifndef KPOLY_VERDICT_H_
#define KPOLY_VERDICT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kpoly/lattice.h"

namespace kpoly {

// Counterexample attached to a failed check. `rule` names the violated
// condition (e.g. "exchange", "expansion", "stalactite-union"); `points` and
// `indices` carry the offending data (indices are 0-based).
struct Witness {
  std::string rule;
  std::vector<LatticePoint> points;
  std::vector<std::size_t> indices;
  std::string detail;
};

class Verdict {
 public:
  static Verdict pass() { return Verdict(); }
  static Verdict fail(Witness w) {
    Verdict v;
    v.witness_ = std::move(w);
    return v;
  }

  bool holds() const { return !witness_.has_value(); }
  explicit operator bool() const { return holds(); }
  const std::optional<Witness>& witness() const { return witness_; }

  // One-line human description.
  std::string describe() const;

 private:
  std::optional<Witness> witness_;
};

}  // namespace kpoly

#endif  // KPOLY_VERDICT_H_

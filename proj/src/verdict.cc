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

#include "kpoly/verdict.h"

namespace kpoly {

std::string Verdict::describe() const {
  if (holds()) return "ok";
  const Witness& w = *witness_;
  std::string s = "violation: " + w.rule;
  if (!w.points.empty()) {
    s += " points=";
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      if (i) s += ",";
      s += w.points[i].to_string();
    }
  }
  if (!w.indices.empty()) {
    s += " indices=";
    for (std::size_t i = 0; i < w.indices.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w.indices[i] + 1);
    }
  }
  if (!w.detail.empty()) s += " (" + w.detail + ")";
  return s;
}

}  // namespace kpoly

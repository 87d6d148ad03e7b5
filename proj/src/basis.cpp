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

#include "fca/basis.hpp"

#include <string>

#include "fca/covering.hpp"

namespace fca {

IncompleteCoveringError::IncompleteCoveringError(std::size_t uncovered,
                                                 std::size_t total)
    : std::invalid_argument("covering is incomplete: " +
                            std::to_string(uncovered) + " of " +
                            std::to_string(total) + " extents uncovered"),
      uncovered_(uncovered),
      total_(total) {}

FormalContext build_basis(const FormalContext& k,
                          const std::vector<Motif>& covering) {
  ExtentIndex index(k);
  ExtentIndexSet covered(index.size());
  for (const auto& m : covering)
    for (const auto& e : covered_extents(k, m)) covered.set(index.find(e));
  if (covered.count() != index.size())
    throw IncompleteCoveringError(index.size() - covered.count(), index.size());

  // Each scale enters through its extent context (one attribute per extent),
  // which has the same extents as the scale. With attribute extents alone the
  // closure of an intersection can be lost, since phi(A) & phi(B) may exceed
  // phi(A & B).
  std::vector<std::string> attributes;
  std::vector<ObjectSet> columns;
  for (std::size_t i = 0; i < covering.size(); ++i) {
    const auto& m = covering[i];
    for (const auto& e : standard_scale_extents(m.family, m.size())) {
      ObjectSet pre(k.object_count());
      std::string label = std::to_string(i + 1) + ":{";
      bool first = true;
      for (auto s : e) {
        pre.set(m.domain[s]);
        label += (first ? "" : ",") + std::to_string(s + 1);
        first = false;
      }
      columns.push_back(object_closure(k, pre));
      attributes.push_back(label + "}");
    }
  }

  std::vector<AttributeSet> rows(k.object_count(), AttributeSet(columns.size()));
  for (std::size_t a = 0; a < columns.size(); ++a)
    for (auto g : columns[a]) rows[g].set(a);
  return FormalContext::from_rows(k.objects(), std::move(attributes),
                                  std::move(rows));
}

}  // namespace fca

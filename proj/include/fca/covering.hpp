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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fca/context.hpp"
#include "fca/recognition.hpp"

namespace fca {

enum class HeuristicKind {
  // Marginal number of newly covered extents.
  Standard,
  // Marginal count divided by the number of extents of the motif's scale.
  Normalized,
};

std::string_view heuristic_name(HeuristicKind h);
std::optional<HeuristicKind> parse_heuristic(std::string_view name);

struct CoveringStep {
  Motif motif;
  // Families whose scale the selected domain realizes (rank order).
  std::vector<ScaleFamily> families;
  std::size_t new_extents = 0;
  std::size_t cumulative = 0;
  // new_extents / |Ext(scale)| for Normalized, new_extents for Standard.
  double score = 0.0;
  // Other candidates that had exactly the same score at this step.
  std::size_t tied = 0;
  // Indices (into the context's ExtentIndex) covered by this motif.
  ExtentIndexSet covered;
};

// {phi_K(sigma^-1(A)) : A in Ext(scale)}, in the scale's extent order.
std::vector<ObjectSet> covered_extents(const FormalContext& k, const Motif& m);

// Greedy ordinal motif covering. Picks up to `steps` motifs, stopping early
// once no candidate covers anything new. Ties go to the lower family rank,
// then to the lexicographically smallest sorted domain. Motifs must be valid
// for k; k must be object-clarified (realized families are recognized).
std::vector<CoveringStep> greedy_cover(const FormalContext& k,
                                       const std::vector<Motif>& motifs,
                                       std::size_t steps, HeuristicKind heuristic);

// Same, against a precomputed extent index of k.
std::vector<CoveringStep> greedy_cover(const FormalContext& k,
                                       const ExtentIndex& index,
                                       const std::vector<Motif>& motifs,
                                       std::size_t steps, HeuristicKind heuristic);

// Share of each family among the first `up_to` selections; a selection
// realizing q families adds 1/q to each of them.
std::map<ScaleFamily, double> family_ratios(const std::vector<CoveringStep>& steps,
                                            std::size_t up_to);

struct CoverageRow {
  std::size_t step;  // 1-based
  std::size_t new_extents;
  std::size_t cumulative;
};
std::vector<CoverageRow> coverage_curve(const std::vector<CoveringStep>& steps);

}  // namespace fca

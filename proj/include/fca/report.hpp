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

// Machine-readable and tabular output shared by the CLI and tests.

#pragma once

#include <string>
#include <vector>

#include "fca/context.hpp"
#include "fca/covering.hpp"
#include "fca/enumeration.hpp"
#include "fca/explain.hpp"
#include "json.hpp"

namespace fca {

inline constexpr int kSchemaVersion = 1;

nlohmann::json motif_json(const FormalContext& k, const Motif& m);

// Columns per family; rows "motifs", "maximal", "largest".
std::string stats_table(const std::vector<FamilyStats>& stats);

nlohmann::json inventory_json(const FormalContext& k,
                              const MotifInventory& inventory,
                              bool include_motifs);

// step,new,cumulative
std::string coverage_csv(const std::vector<CoveringStep>& steps);
// step,nominal,ordinal,interordinal,contranominal,crown (cumulative shares)
std::string ratio_csv(const std::vector<CoveringStep>& steps);

nlohmann::json covering_json(const FormalContext& k,
                             const std::vector<CoveringStep>& steps,
                             HeuristicKind heuristic, std::size_t total_extents);

nlohmann::json explanation_json(const FormalContext& k, const ExplanationDoc& doc);

}  // namespace fca

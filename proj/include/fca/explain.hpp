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

#include <span>
#include <string>
#include <vector>

#include "fca/context.hpp"
#include "fca/covering.hpp"
#include "fca/recognition.hpp"

namespace fca {

// "a", "a and b", "a, b and c" (no serial comma).
std::string join_names(std::span<const std::string> names);

// One template sentence (or two, for crowns) with the names in the given
// order.
std::string render_template(ScaleFamily family,
                            std::span<const std::string> names);

// Renders the motif's own family, naming domain objects in witness order.
// With a clarification map, objects stand for every merged label, joined by
// "/". Throws std::out_of_range for an object without a label.
std::string render_motif(const Motif& motif,
                         std::span<const std::string> labels,
                         const ClarificationMap* clarification = nullptr);

struct ExplanationEntry {
  std::string text;  // paragraphs separated by '\n'
  Motif motif;
  std::vector<ScaleFamily> families_rendered;
};

struct ExplanationDoc {
  std::vector<ExplanationEntry> entries;

  // "1. ...", one entry per block, blank line between entries.
  std::string to_text() const;
};

// One entry per covering step, in order. The selected family is rendered
// first, then every other family the domain realizes, each with its own
// canonical witness order.
ExplanationDoc explain_covering(const FormalContext& k,
                                const std::vector<CoveringStep>& steps,
                                const ClarificationMap* clarification = nullptr);

}  // namespace fca

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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fca/context.hpp"

namespace fca {

// Declaration order is the family rank used for tie-breaking.
enum class ScaleFamily { Nominal, Ordinal, Interordinal, Contranominal, Crown };

inline constexpr std::array<ScaleFamily, 5> kAllFamilies = {
    ScaleFamily::Nominal, ScaleFamily::Ordinal, ScaleFamily::Interordinal,
    ScaleFamily::Contranominal, ScaleFamily::Crown};

std::string_view family_name(ScaleFamily f);
std::optional<ScaleFamily> parse_family(std::string_view name);
inline std::size_t family_rank(ScaleFamily f) { return static_cast<std::size_t>(f); }

// Crowns start at 3, every other family at 1.
std::size_t min_scale_size(ScaleFamily f);

// Standard scale on objects 1..n:
//   nominal       ([n],[n],=)
//   ordinal       ([n],[n],<=)
//   interordinal  ([n],[n],<=) | ([n],[n],>=), attributes "≤k" then "≥k"
//   contranominal ([n],[n],!=)
//   crown         g has g and g+1, object n has n and 1
// Throws std::invalid_argument below the family minimum.
FormalContext build_scale(ScaleFamily f, std::size_t n);

// |Ext(build_scale(f, n))| in closed form.
std::size_t expected_extent_count(ScaleFamily f, std::size_t n);

// Side-by-side composition over a shared object list. Attribute labels get
// the prefixes "1:" and "2:". Throws std::invalid_argument if the object
// lists differ.
FormalContext apposition(const FormalContext& left, const FormalContext& right);

// Semi-product: objects are tuples of operand objects (labelled
// "(a,b,...)"), attributes the tagged disjoint union "j:m" (j 1-based), and a
// tuple has (j,m) iff its j-th component has m in operand j.
FormalContext semiproduct(std::span<const FormalContext> scales);

// Parses "family:n", e.g. "ordinal:4".
struct ScaleSpec {
  ScaleFamily family;
  std::size_t size;
};
ScaleSpec parse_scale_spec(std::string_view text);

}  // namespace fca

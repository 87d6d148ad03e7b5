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
#include <optional>
#include <span>
#include <vector>

#include "fca/context.hpp"

namespace fca {

inline constexpr std::size_t kMaxScalingObjects = 8;
inline constexpr std::size_t kMaxScalingDimension = 4;

// True iff the maps (maps[j][g] is the object of scales[j] assigned to g)
// form a full scale-measure of k into the semi-product of `scales`, decided
// without building the product: every preimage of an attribute extent must
// be an extent of k, and their intersection closure together with G must
// be all of Ext(k).
bool full_into_semiproduct(const FormalContext& k,
                           std::span<const FormalContext> scales,
                           std::span<const std::vector<std::size_t>> maps);

struct ScalingWitness {
  std::vector<std::size_t> scales;             // indices into the family
  std::vector<std::vector<std::size_t>> maps;  // one map per chosen scale
};

// Least d <= max_d such that d scales from the family (repetition allowed)
// admit a full scale-measure of k into their semi-product, with a witness.
// The search enumerates every map G -> G_S per scale, keeps the
// scale-measures, and looks for d of them whose attribute-extent preimages
// contain every meet-irreducible extent of k. Throws std::invalid_argument
// when |G| > max_objects or max_d > kMaxScalingDimension.
std::optional<ScalingWitness> find_scaling(
    const FormalContext& k, std::span<const FormalContext> family,
    std::size_t max_d, std::size_t max_objects = kMaxScalingObjects);

std::optional<std::size_t> scaling_dimension(
    const FormalContext& k, std::span<const FormalContext> family,
    std::size_t max_d, std::size_t max_objects = kMaxScalingObjects);

}  // namespace fca

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
#include <limits>
#include <vector>

#include "fca/context.hpp"
#include "fca/recognition.hpp"
#include "fca/scales.hpp"

namespace fca {

struct EnumerationConfig {
  std::vector<ScaleFamily> families{kAllFamilies.begin(), kAllFamilies.end()};
  // Indexed by family_rank().
  std::array<std::size_t, 5> min_size{2, 2, 2, 2, 3};
  std::array<std::size_t, 5> max_size{
      std::numeric_limits<std::size_t>::max(),
      std::numeric_limits<std::size_t>::max(),
      std::numeric_limits<std::size_t>::max(),
      std::numeric_limits<std::size_t>::max(),
      std::numeric_limits<std::size_t>::max()};
  // Crown search is exhaustive only up to this cycle length.
  std::size_t crown_size_cap = 8;
  // Restricts the covering pool to maximal motifs; counts are unaffected.
  bool maximal_only = false;

  std::size_t min_for(ScaleFamily f) const { return min_size[family_rank(f)]; }
  std::size_t max_for(ScaleFamily f) const { return max_size[family_rank(f)]; }
  // Throws std::invalid_argument on min > max or sizes below the family
  // minimum.
  void validate() const;
};

struct FamilyInventory {
  ScaleFamily family = ScaleFamily::Nominal;
  std::vector<Motif> motifs;   // ordered by size, then sorted domain
  std::vector<Motif> maximal;  // subsequence of motifs

  std::size_t total() const { return motifs.size(); }
  std::size_t maximal_count() const { return maximal.size(); }
  std::size_t largest() const { return motifs.empty() ? 0 : motifs.back().size(); }
};

struct MotifInventory {
  std::vector<FamilyInventory> families;

  const FamilyInventory* find(ScaleFamily f) const;
  // All motifs (or only maximal ones) across families in rank order.
  std::vector<Motif> pool(bool maximal_only) const;
};

struct FamilyStats {
  ScaleFamily family;
  std::size_t total = 0;
  std::size_t maximal = 0;
  std::size_t largest = 0;
};

// Level-wise search for nominal, ordinal, interordinal and contranominal
// motifs with min <= |H| <= max. A candidate of size k >= 3 is tested only if
// all of its (k-1)-subsets were motifs; ordinal candidates, which stay motifs
// only on subsets through the bottom object, grow by single-object
// extension instead. Requires an object-clarified context.
std::vector<Motif> enumerate_hereditary(const FormalContext& k,
                                        ScaleFamily family,
                                        const EnumerationConfig& cfg);

// Crown motifs of size 3..min(max, crown_size_cap) via depth-first cycle
// search over object pairs that can be crown neighbours. Each cycle is
// reported once, canonically rotated, and confirmed by the recognizer.
std::vector<Motif> enumerate_crowns(const FormalContext& k,
                                    const EnumerationConfig& cfg);

// Motifs whose domain has no proper superset among `motifs` (all of one
// family). Order is preserved.
std::vector<Motif> maximal_filter(const std::vector<Motif>& motifs);

// Runs every configured family. Throws NotClarifiedError if k has repeated
// object rows.
MotifInventory enumerate_motifs(const FormalContext& k,
                                const EnumerationConfig& cfg);

std::vector<FamilyStats> motif_stats(const MotifInventory& inventory);

}  // namespace fca

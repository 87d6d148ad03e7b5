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
#include <stdexcept>
#include <vector>

#include "fca/context.hpp"
#include "fca/scales.hpp"

namespace fca {

// One local full scale-measure into a standard scale. domain[i] is the
// object of the source context mapped onto scale object i (0-based), so the
// order of `domain` is the witnessing bijection.
struct Motif {
  ScaleFamily family = ScaleFamily::Nominal;
  std::vector<std::size_t> domain;

  std::size_t size() const { return domain.size(); }
  ObjectSet domain_set(std::size_t universe) const {
    return ObjectSet::from_range(universe, domain);
  }
  std::vector<std::size_t> sorted_domain() const;

  bool operator==(const Motif&) const = default;
};

// Identity used for deduplication and tie-breaking: family rank, then the
// sorted domain, shorter first on a common prefix.
bool motif_less(const Motif& a, const Motif& b);

// Raised when a recognizer is handed an object set with repeated rows.
class NotClarifiedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Process-wide cache of build_scale results; safe to call concurrently.
const FormalContext& standard_scale(ScaleFamily f, std::size_t n);
// extents(standard_scale(f, n)), cached the same way.
const std::vector<ObjectSet>& standard_scale_extents(ScaleFamily f,
                                                     std::size_t n);

// sigma[g] is the scale object of source object g. Every attribute extent of
// `scale` must have a preimage that is an extent of `k`.
bool verify_scale_measure(const FormalContext& k,
                          std::span<const std::size_t> sigma,
                          const FormalContext& scale);

// Ext(k) == sigma^-1(Ext(scale)).
bool verify_full(const FormalContext& k, std::span<const std::size_t> sigma,
                 const FormalContext& scale);

// verify_full on k[H, M] where H = domain and domain[i] maps to targets[i];
// evaluated in place without materializing the subcontext.
bool verify_local_full(const FormalContext& k,
                       std::span<const std::size_t> domain,
                       std::span<const std::size_t> targets,
                       const FormalContext& scale);

// Checks that `m` is a local full scale-measure of k onto
// build_scale(m.family, m.size()).
bool verify_motif(const FormalContext& k, const Motif& m);

// Decides whether k[H, M] admits a full scale-measure onto the standard scale
// of the family and size |H|, returning the canonical witness:
//   nominal, contranominal  ascending object index
//   ordinal                 object with the most attributes first
//   interordinal            path order from the smaller-indexed end
//   crown                   cycle from the smallest index, smaller neighbour
//                           first
// Throws NotClarifiedError if two objects of H share a row, and
// std::invalid_argument if |H| is below the family minimum.
std::optional<Motif> recognize(const FormalContext& k, const ObjectSet& h,
                               ScaleFamily family);

// Same as recognize() without the row-distinctness check; the caller
// guarantees that k is object-clarified.
std::optional<Motif> recognize_clarified(const FormalContext& k,
                                         const ObjectSet& h, ScaleFamily family);

// Families (in rank order) whose standard scale of size |H| the subcontext
// on H realizes. k must be object-clarified.
std::vector<ScaleFamily> realized_families(const FormalContext& k,
                                           const ObjectSet& h);

}  // namespace fca

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

#include "fca/scaling_dimension.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace fca {

bool full_into_semiproduct(const FormalContext& k,
                           std::span<const FormalContext> scales,
                           std::span<const std::vector<std::size_t>> maps) {
  if (scales.size() != maps.size() || scales.empty())
    throw std::invalid_argument("need one map per scale");
  ExtentIndex index(k);
  std::vector<ObjectSet> generators;
  for (std::size_t j = 0; j < scales.size(); ++j) {
    if (maps[j].size() != k.object_count())
      throw std::invalid_argument("scale-measure map is not total");
    for (std::size_t a = 0; a < scales[j].attribute_count(); ++a) {
      ObjectSet pre(k.object_count());
      for (std::size_t g = 0; g < k.object_count(); ++g) {
        if (maps[j][g] >= scales[j].object_count())
          throw std::invalid_argument("scale-measure map leaves the scale");
        if (scales[j].column(a).test(maps[j][g])) pre.set(g);
      }
      if (!index.contains(pre)) return false;
      generators.push_back(std::move(pre));
    }
  }
  // Intersection closure of the generators plus G.
  std::unordered_set<ObjectSet, IndexSetHash> closed{k.all_objects()};
  std::vector<ObjectSet> frontier{k.all_objects()};
  while (!frontier.empty()) {
    std::vector<ObjectSet> next;
    for (const auto& s : frontier)
      for (const auto& gen : generators) {
        auto meet = s & gen;
        if (closed.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  return closed.size() == index.size();
}

namespace {

// Extents that are not the intersection of the extents strictly above them.
ExtentIndexSet meet_irreducibles(const ExtentIndex& index,
                                 std::size_t object_count) {
  ExtentIndexSet out(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    auto upper = ObjectSet::full(object_count);
    bool has_upper = false;
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (i != j && index[i].is_subset_of(index[j])) {
        upper &= index[j];
        has_upper = true;
      }
    }
    if (has_upper && upper != index[i]) out.set(i);
  }
  return out;
}

struct Candidate {
  ExtentIndexSet mask;  // meet-irreducibles among the preimages
  std::size_t scale;
  std::vector<std::size_t> map;
};

bool cover(const std::vector<Candidate>& pool, const ExtentIndexSet& target,
           const ExtentIndexSet& have, std::size_t budget,
           std::vector<std::size_t>& chosen) {
  auto missing = target - have;
  if (missing.none()) return true;
  if (budget == 0) return false;
  const auto e = missing.first();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!pool[i].mask.test(e)) continue;
    chosen.push_back(i);
    if (cover(pool, target, have | pool[i].mask, budget - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ScalingWitness> find_scaling(const FormalContext& k,
                                           std::span<const FormalContext> family,
                                           std::size_t max_d,
                                           std::size_t max_objects) {
  if (k.object_count() > max_objects)
    throw std::invalid_argument("context has " + std::to_string(k.object_count()) +
                                " objects; scaling dimension search is bounded "
                                "to " + std::to_string(max_objects));
  if (max_d > kMaxScalingDimension)
    throw std::invalid_argument("max_d above " +
                                std::to_string(kMaxScalingDimension));
  if (max_d == 0) return std::nullopt;

  ExtentIndex index(k);
  const auto irreducible = meet_irreducibles(index, k.object_count());
  const std::size_t n = k.object_count();

  std::vector<Candidate> pool;
  std::map<ExtentIndexSet, std::size_t> seen;
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto& scale = family[j];
    if (scale.object_count() == 0 && n > 0) continue;
    std::vector<std::size_t> map(n, 0);
    while (true) {
      ExtentIndexSet mask(index.size());
      bool measure = true;
      for (std::size_t a = 0; a < scale.attribute_count() && measure; ++a) {
        ObjectSet pre(n);
        for (std::size_t g = 0; g < n; ++g)
          if (scale.column(a).test(map[g])) pre.set(g);
        auto pos = index.find(pre);
        measure = pos != ExtentIndex::npos;
        if (measure) mask.set(pos);
      }
      if (measure) {
        mask &= irreducible;
        if (seen.emplace(mask, pool.size()).second)
          pool.push_back({mask, j, map});
      }
      std::size_t g = 0;
      while (g < n && ++map[g] == scale.object_count()) map[g++] = 0;
      if (g == n) break;
    }
  }
  if (pool.empty()) return std::nullopt;

  for (std::size_t d = 1; d <= max_d; ++d) {
    std::vector<std::size_t> chosen;
    if (!cover(pool, irreducible, ExtentIndexSet(index.size()), d, chosen))
      continue;
    if (chosen.empty()) chosen.push_back(0);
    ScalingWitness w;
    for (auto i : chosen) {
      w.scales.push_back(pool[i].scale);
      w.maps.push_back(pool[i].map);
    }
    return w;
  }
  return std::nullopt;
}

std::optional<std::size_t> scaling_dimension(const FormalContext& k,
                                             std::span<const FormalContext> family,
                                             std::size_t max_d,
                                             std::size_t max_objects) {
  auto w = find_scaling(k, family, max_d, max_objects);
  if (!w) return std::nullopt;
  return w->scales.size();
}

}  // namespace fca

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

#include "fca/covering.hpp"

#include <stdexcept>

#include "fca/scales.hpp"

namespace fca {

std::string_view heuristic_name(HeuristicKind h) {
  return h == HeuristicKind::Standard ? "standard" : "normalized";
}

std::optional<HeuristicKind> parse_heuristic(std::string_view name) {
  if (name == "standard") return HeuristicKind::Standard;
  if (name == "normalized") return HeuristicKind::Normalized;
  return std::nullopt;
}

std::vector<ObjectSet> covered_extents(const FormalContext& k, const Motif& m) {
  std::vector<ObjectSet> out;
  for (const auto& e : standard_scale_extents(m.family, m.size())) {
    ObjectSet pre(k.object_count());
    for (auto i : e) pre.set(m.domain[i]);
    out.push_back(object_closure(k, pre));
  }
  return out;
}

std::vector<CoveringStep> greedy_cover(const FormalContext& k,
                                       const std::vector<Motif>& motifs,
                                       std::size_t steps,
                                       HeuristicKind heuristic) {
  return greedy_cover(k, ExtentIndex(k), motifs, steps, heuristic);
}

namespace {

struct Candidate {
  const Motif* motif;
  std::vector<std::size_t> sorted_domain;
  ExtentIndexSet covered;
  std::size_t weight;  // |Ext(scale)|
};

// a/b > c/d on non-negative integers.
bool ratio_greater(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return static_cast<unsigned __int128>(a) * d >
         static_cast<unsigned __int128>(c) * b;
}

}  // namespace

std::vector<CoveringStep> greedy_cover(const FormalContext& k,
                                       const ExtentIndex& index,
                                       const std::vector<Motif>& motifs,
                                       std::size_t steps,
                                       HeuristicKind heuristic) {
  std::vector<Candidate> pool;
  pool.reserve(motifs.size());
  for (const auto& m : motifs) {
    ExtentIndexSet covered(index.size());
    for (const auto& e : covered_extents(k, m)) {
      auto pos = index.find(e);
      if (pos == ExtentIndex::npos)
        throw std::invalid_argument("motif preimage closure is not an extent");
      covered.set(pos);
    }
    pool.push_back({&m, m.sorted_domain(), std::move(covered),
                    heuristic == HeuristicKind::Normalized
                        ? expected_extent_count(m.family, m.size())
                        : 1});
  }

  std::vector<CoveringStep> out;
  ExtentIndexSet union_so_far(index.size());
  std::vector<bool> used(pool.size(), false);
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t best = pool.size();
    std::size_t best_gain = 0;
    std::size_t tied = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      const auto& c = pool[i];
      std::size_t gain = c.covered.count_minus(union_so_far);
      if (gain == 0) continue;
      if (best == pool.size()) {
        best = i;
        best_gain = gain;
        tied = 0;
        continue;
      }
      const auto& b = pool[best];
      if (ratio_greater(gain, c.weight, best_gain, b.weight)) {
        best = i;
        best_gain = gain;
        tied = 0;
      } else if (!ratio_greater(best_gain, b.weight, gain, c.weight)) {
        ++tied;
        auto rc = family_rank(c.motif->family);
        auto rb = family_rank(b.motif->family);
        if (rc < rb || (rc == rb && c.sorted_domain < b.sorted_domain)) {
          best = i;
          best_gain = gain;
        }
      }
    }
    if (best == pool.size()) break;

    used[best] = true;
    const auto& chosen = pool[best];
    union_so_far |= chosen.covered;
    CoveringStep s;
    s.motif = *chosen.motif;
    s.families = realized_families(k, chosen.motif->domain_set(k.object_count()));
    s.new_extents = best_gain;
    s.cumulative = union_so_far.count();
    s.score = static_cast<double>(best_gain) / static_cast<double>(chosen.weight);
    s.tied = tied;
    s.covered = chosen.covered;
    out.push_back(std::move(s));
  }
  return out;
}

std::map<ScaleFamily, double> family_ratios(const std::vector<CoveringStep>& steps,
                                            std::size_t up_to) {
  if (up_to > steps.size())
    throw std::out_of_range("family_ratios: up_to exceeds the number of steps");
  std::map<ScaleFamily, double> out;
  if (up_to == 0) return out;
  for (std::size_t i = 0; i < up_to; ++i) {
    const auto& fams = steps[i].families;
    if (fams.empty()) {
      out[steps[i].motif.family] += 1.0;
      continue;
    }
    for (auto f : fams) out[f] += 1.0 / static_cast<double>(fams.size());
  }
  for (auto& [f, v] : out) v /= static_cast<double>(up_to);
  return out;
}

std::vector<CoverageRow> coverage_curve(const std::vector<CoveringStep>& steps) {
  std::vector<CoverageRow> out;
  for (std::size_t i = 0; i < steps.size(); ++i)
    out.push_back({i + 1, steps[i].new_extents, steps[i].cumulative});
  return out;
}

}  // namespace fca

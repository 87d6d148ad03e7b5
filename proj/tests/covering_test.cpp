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


#include <random>

#include "doctest.h"
#include "fca/basis.hpp"
#include "fca/covering.hpp"
#include "fca/enumeration.hpp"
#include "oracles.hpp"

using namespace fca;

namespace {

std::set<oracle::Mask> covered_masks(const FormalContext& k, const Motif& m) {
  // Closure of every scale-extent preimage, computed from the raw incidence.
  oracle::Table t(k);
  std::set<oracle::Mask> out;
  for (auto e : oracle::scale_extents(m.family, m.size())) {
    oracle::Mask pre = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (e >> i & 1) pre |= oracle::Mask{1} << m.domain[i];
    out.insert(oracle::closure(t, pre));
  }
  return out;
}

// Greedy selection re-derived on masks with the documented tie rule.
std::vector<std::size_t> greedy_reference(const FormalContext& k,
                                          const std::vector<Motif>& pool,
                                          std::size_t steps, bool normalized) {
  std::vector<std::set<oracle::Mask>> cov;
  for (const auto& m : pool) cov.push_back(covered_masks(k, m));
  std::set<oracle::Mask> done;
  std::vector<bool> used(pool.size());
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t best = pool.size();
    double best_score = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      std::size_t gain = 0;
      for (auto e : cov[i]) gain += !done.count(e);
      if (!gain) continue;
      double score = normalized ? double(gain) / double(cov[i].size()) : double(gain);
      bool better = best == pool.size() || score > best_score + 1e-12;
      if (!better && std::abs(score - best_score) <= 1e-12) {
        auto rb = family_rank(pool[best].family), ri = family_rank(pool[i].family);
        better = ri < rb || (ri == rb && pool[i].sorted_domain() < pool[best].sorted_domain());
      }
      if (better) {
        best = i;
        best_score = score;
      }
    }
    if (best == pool.size()) break;
    used[best] = true;
    done.insert(cov[best].begin(), cov[best].end());
    out.push_back(best);
  }
  return out;
}

}  // namespace

TEST_CASE("covered extents of whole scales") {
  auto b3 = build_scale(ScaleFamily::Contranominal, 3);
  Motif whole{ScaleFamily::Contranominal, {0, 1, 2}};
  CHECK(covered_extents(b3, whole).size() == 8);
  Motif crown{ScaleFamily::Crown, {0, 1, 2}};
  CHECK(covered_extents(b3, crown).size() == 8);
}

TEST_CASE("covered extent counts equal the scale's extent count") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 150; ++round) {
    auto k = oracle::random_clarified(rng, 6, 6, 0.3 + 0.4 * (rng() % 100) / 100.0);
    auto ek = oracle::extents(oracle::Table(k));
    auto inv = enumerate_motifs(k, EnumerationConfig{});
    for (const auto& m : inv.pool(false)) {
      auto cov = covered_extents(k, m);
      std::set<oracle::Mask> masks;
      for (const auto& e : cov) masks.insert(oracle::to_mask(e));
      CHECK(masks.size() == expected_extent_count(m.family, m.size()));
      CHECK(masks == covered_masks(k, m));
      for (auto e : masks) CHECK(ek.count(e));
    }
  }
}

TEST_CASE("greedy covering basics") {
  auto b3 = build_scale(ScaleFamily::Contranominal, 3);
  auto inv = enumerate_motifs(b3, EnumerationConfig{});
  CHECK(greedy_cover(b3, inv.pool(true), 0, HeuristicKind::Standard).empty());
  auto steps = greedy_cover(b3, inv.pool(true), 5, HeuristicKind::Standard);
  REQUIRE(steps.size() == 1);
  // Contranominal and crown tie on the same domain; rank decides.
  CHECK(steps[0].motif.family == ScaleFamily::Contranominal);
  CHECK(steps[0].tied == 1);
  CHECK(steps[0].cumulative == 8);
  CHECK(steps[0].families ==
        std::vector<ScaleFamily>{ScaleFamily::Contranominal, ScaleFamily::Crown});
}

TEST_CASE("greedy matches the reference and satisfies the coverage laws") {
  std::mt19937_64 rng(52);
  for (int round = 0; round < 150; ++round) {
    auto k = oracle::random_clarified(rng, 6, 6, 0.3 + 0.4 * (rng() % 100) / 100.0);
    auto total = oracle::extents(oracle::Table(k)).size();
    auto inv = enumerate_motifs(k, EnumerationConfig{});
    auto pool = inv.pool(rng() % 2);
    for (auto h : {HeuristicKind::Standard, HeuristicKind::Normalized}) {
      auto steps = greedy_cover(k, pool, 20, h);
      auto ref = greedy_reference(k, pool, 20, h == HeuristicKind::Normalized);
      REQUIRE(steps.size() == ref.size());
      std::set<oracle::Mask> seen;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        CHECK(steps[i].motif == pool[ref[i]]);
        auto cov = covered_masks(k, steps[i].motif);
        std::size_t before = seen.size();
        seen.insert(cov.begin(), cov.end());
        CHECK(steps[i].new_extents == seen.size() - before);
        CHECK(steps[i].cumulative == seen.size());
        CHECK(steps[i].cumulative <= total);
        if (h == HeuristicKind::Standard && i > 0)
          CHECK(steps[i].new_extents <= steps[i - 1].new_extents);
        if (h == HeuristicKind::Normalized && i > 0) {
          double w = double(expected_extent_count(steps[i].motif.family, steps[i].motif.size()));
          CHECK(steps[i].score <= (w - 1) / w + 1e-12);
        }
      }
      CHECK(greedy_cover(k, pool, 20, h).size() == steps.size());
    }
  }
}

TEST_CASE("family ratios") {
  std::vector<CoveringStep> steps(10);
  for (auto& s : steps) {
    s.motif = {ScaleFamily::Contranominal, {0, 1}};
    s.families = {ScaleFamily::Contranominal};
  }
  auto r = family_ratios(steps, 10);
  REQUIRE(r.size() == 1);
  CHECK(r[ScaleFamily::Contranominal] == doctest::Approx(1.0));

  CoveringStep dual;
  dual.motif = {ScaleFamily::Contranominal, {0, 1, 2}};
  dual.families = {ScaleFamily::Contranominal, ScaleFamily::Crown};
  std::vector<CoveringStep> one{dual};
  auto half = family_ratios(one, 1);
  CHECK(half[ScaleFamily::Crown] == doctest::Approx(0.5));
  CHECK(half[ScaleFamily::Contranominal] == doctest::Approx(0.5));

  CHECK(family_ratios(one, 0).empty());
  CHECK_THROWS_AS(family_ratios(one, 2), std::out_of_range);

  auto curve = coverage_curve(one);
  REQUIRE(curve.size() == 1);
  CHECK(curve[0].step == 1);
}

TEST_CASE("basis of B_3 from its contranominal motif") {
  auto b3 = build_scale(ScaleFamily::Contranominal, 3);
  std::vector<Motif> cover{{ScaleFamily::Contranominal, {0, 1, 2}}};
  auto basis = build_basis(b3, cover);
  // One attribute per extent of B_3, labelled by motif and scale extent.
  CHECK(basis.attribute_count() == 8);
  CHECK(basis.attributes()[0] == "1:{}");
  CHECK(basis.attributes()[7] == "1:{1,2,3}");
  CHECK(oracle::extents(oracle::Table(basis)).size() == 8);
}

TEST_CASE("incomplete coverings are rejected with the uncovered count") {
  auto b3 = build_scale(ScaleFamily::Contranominal, 3);
  std::vector<Motif> cover{{ScaleFamily::Contranominal, {0, 1}}};
  try {
    build_basis(b3, cover);
    FAIL("expected IncompleteCoveringError");
  } catch (const IncompleteCoveringError& e) {
    CHECK(e.total() == 8);
    CHECK(e.uncovered() == 4);
  }
}

TEST_CASE("basis preserves extents and local full scale-measures") {
  std::mt19937_64 rng(53);
  int complete = 0;
  for (int round = 0; round < 200 && complete < 40; ++round) {
    auto k = oracle::random_clarified(rng, 5, 5, 0.5);
    auto inv = enumerate_motifs(k, EnumerationConfig{});
    auto steps = greedy_cover(k, inv.pool(false), 1000, HeuristicKind::Standard);
    auto total = extents(k).size();
    if (steps.empty() || steps.back().cumulative != total) continue;
    ++complete;
    std::vector<Motif> cover;
    for (const auto& s : steps) cover.push_back(s.motif);
    auto basis = build_basis(k, cover);
    oracle::Table tk(k), tb(basis);
    CHECK(oracle::extents(tk) == oracle::extents(tb));
    std::vector<std::size_t> id(k.object_count());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(oracle::full_measure(tk, id, tb));
    for (int trial = 0; trial < 20; ++trial) {
      oracle::Mask h = 1 + rng() % tk.all();
      auto f = kAllFamilies[rng() % 5];
      std::size_t n = std::max<std::size_t>(min_scale_size(f), 1 + rng() % 4);
      auto hs = ObjectSet::from_range(k.object_count(), oracle::bits(h));
      std::vector<std::size_t> sigma(hs.count());
      for (auto& x : sigma) x = rng() % n;
      oracle::Table s(build_scale(f, n));
      CHECK(oracle::full_measure(oracle::Table(induced_subcontext(k, hs)), sigma, s) ==
            oracle::full_measure(oracle::Table(induced_subcontext(basis, hs)), sigma, s));
    }
  }
  CHECK(complete >= 10);
}

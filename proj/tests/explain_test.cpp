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
#include <regex>

#include "doctest.h"
#include "fca/enumeration.hpp"
#include "fca/explain.hpp"
#include "fca/report.hpp"
#include "oracles.hpp"

using namespace fca;

namespace {

const std::string kName = R"([^,]+?)";
const std::string kList = kName + "(, " + kName + ")* and " + kName;

const std::regex& pattern(ScaleFamily f) {
  static const std::regex nominal("The elements " + kList +
                                  " are incomparable, i\\.e\\., all elements have at "
                                  "least one property that the other elements do not "
                                  "have\\.");
  static const std::regex ordinal("There is a ranking of elements " + kList +
                                  " such that an element has all the properties its "
                                  "successors has\\.");
  static const std::regex interordinal("The elements " + kList +
                                       " are ordered in such a way that each interval "
                                       "of elements has a unique set of properties "
                                       "they have in common\\.");
  static const std::regex contranominal("Each combination of the elements " + kList +
                                        " has a unique set of properties they have "
                                        "in common\\.");
  static const std::regex crown("The elements " + kList +
                                " are incomparable\\. Furthermore, there is a closed "
                                "cycle from (" + kName + ") over " + kList +
                                " back to \\2 by pairwise shared properties\\.");
  switch (f) {
    case ScaleFamily::Nominal: return nominal;
    case ScaleFamily::Ordinal: return ordinal;
    case ScaleFamily::Interordinal: return interordinal;
    case ScaleFamily::Contranominal: return contranominal;
    case ScaleFamily::Crown: return crown;
  }
  return nominal;
}

}  // namespace

TEST_CASE("name lists") {
  std::vector<std::string> none, one{"a"}, two{"a", "b"}, three{"a", "b", "c"};
  CHECK(join_names(none).empty());
  CHECK(join_names(one) == "a");
  CHECK(join_names(two) == "a and b");
  CHECK(join_names(three) == "a, b and c");
}

TEST_CASE("golden sentences") {
  std::vector<std::string> spices{"Thyme", "Sweet Paprika", "Oregano", "Caraway",
                                  "Black Pepper"};
  Motif contra{ScaleFamily::Contranominal, {0, 1, 2, 3, 4}};
  CHECK(render_motif(contra, spices) ==
        "Each combination of the elements Thyme, Sweet Paprika, Oregano, Caraway "
        "and Black Pepper has a unique set of properties they have in common.");

  std::vector<std::string> nominal_labels{"Majoram", "Tarragon", "Potatos"};
  Motif nominal{ScaleFamily::Nominal, {1, 2, 0}};
  CHECK(render_motif(nominal, nominal_labels) ==
        "The elements Tarragon, Potatos and Majoram are incomparable, i.e., all "
        "elements have at least one property that the other elements do not have.");

  std::vector<std::string> inter_labels{"Poultry", "Thyme", "Caraway"};
  Motif inter{ScaleFamily::Interordinal, {1, 2, 0}};
  CHECK(render_motif(inter, inter_labels) ==
        "The elements Thyme, Caraway and Poultry are ordered in such a way that "
        "each interval of elements has a unique set of properties they have in "
        "common.");

  std::vector<std::string> crown_labels{"Basil", "Sauces", "Mugwort"};
  CHECK(render_motif({ScaleFamily::Crown, {0, 1, 2}}, crown_labels) ==
        "The elements Basil, Sauces and Mugwort are incomparable. Furthermore, "
        "there is a closed cycle from Basil over Sauces and Mugwort back to Basil "
        "by pairwise shared properties.");
}

TEST_CASE("ordinal sentences list the chain from the top") {
  std::vector<std::string> labels{"low", "high", "mid"};
  CHECK(render_motif({ScaleFamily::Ordinal, {1, 2, 0}}, labels) ==
        "There is a ranking of elements high, mid and low such that an element "
        "has all the properties its successors has.");
}

TEST_CASE("merged labels are joined with a slash") {
  FormalContext k({"a", "b", "c"}, {"x", "y"},
                  {{true, false}, {false, true}, {true, false}});
  auto [c, map] = clarify_objects(k);
  CHECK(render_motif({ScaleFamily::Nominal, {0, 1}}, c.objects(), &map) ==
        "The elements a/c and b are incomparable, i.e., all elements have at least "
        "one property that the other elements do not have.");
  CHECK_THROWS_AS(render_motif({ScaleFamily::Nominal, {0, 7}}, c.objects()),
                  std::out_of_range);
}

TEST_CASE("explanations of a covering") {
  auto b3 = build_scale(ScaleFamily::Contranominal, 3);
  CHECK(explain_covering(b3, {}).entries.empty());
  CHECK(explain_covering(b3, {}).to_text().empty());

  auto inv = enumerate_motifs(b3, EnumerationConfig{});
  auto steps = greedy_cover(b3, inv.pool(true), 10, HeuristicKind::Standard);
  auto doc = explain_covering(b3, steps);
  REQUIRE(doc.entries.size() == 1);
  CHECK(doc.entries[0].families_rendered ==
        std::vector<ScaleFamily>{ScaleFamily::Contranominal, ScaleFamily::Crown});
  CHECK(doc.to_text() ==
        "1. Each combination of the elements 1, 2 and 3 has a unique set of "
        "properties they have in common.\nThe elements 1, 2 and 3 are "
        "incomparable. Furthermore, there is a closed cycle from 1 over 2 and 3 "
        "back to 1 by pairwise shared properties.\n");
}

TEST_CASE("every rendered sentence matches its family pattern") {
  std::mt19937_64 rng(71);
  std::size_t checked = 0;
  for (int round = 0; round < 100; ++round) {
    auto k = oracle::random_clarified(rng, 6, 6, 0.5);
    auto inv = enumerate_motifs(k, EnumerationConfig{});
    for (const auto& m : inv.pool(false)) {
      auto text = render_motif(m, k.objects());
      CHECK_MESSAGE(std::regex_match(text, pattern(m.family)), text);
      ++checked;
    }
    auto steps = greedy_cover(k, inv.pool(true), 5, HeuristicKind::Normalized);
    auto doc = explain_covering(k, steps);
    REQUIRE(doc.entries.size() == steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i)
      CHECK(doc.entries[i].motif == steps[i].motif);
    CHECK(doc.to_text() == explain_covering(k, steps).to_text());
  }
  CHECK(checked > 100);
}

TEST_CASE("reports") {
  auto b3 = build_scale(ScaleFamily::Contranominal, 3);
  auto inv = enumerate_motifs(b3, EnumerationConfig{});
  auto table = stats_table(motif_stats(inv));
  CHECK(table.find("contranominal") != std::string::npos);
  CHECK(table.find("maximal") != std::string::npos);

  auto j = inventory_json(b3, inv, true);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["families"][3]["total"] == 4);

  auto steps = greedy_cover(b3, inv.pool(true), 10, HeuristicKind::Standard);
  CHECK(coverage_csv(steps) == "step,new,cumulative\n1,8,8\n");
  CHECK(ratio_csv(steps) ==
        "step,nominal,ordinal,interordinal,contranominal,crown\n1,0,0,0,0.5,0.5\n");
  auto cj = covering_json(b3, steps, HeuristicKind::Standard, 8);
  CHECK(cj["covered"] == 8);
  CHECK(cj["heuristic"] == "standard");
  CHECK(cj["steps"][0]["motif"]["labels"][0] == "1");
  auto ej = explanation_json(b3, explain_covering(b3, steps));
  CHECK(ej["entries"][0]["families_rendered"].size() == 2);
}

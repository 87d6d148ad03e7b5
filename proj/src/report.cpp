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

#include "fca/report.hpp"

#include <iomanip>
#include <sstream>

namespace fca {

nlohmann::json motif_json(const FormalContext& k, const Motif& m) {
  nlohmann::json labels = nlohmann::json::array();
  for (auto g : m.domain) labels.push_back(k.objects()[g]);
  return {{"family", family_name(m.family)},
          {"size", m.size()},
          {"domain", m.domain},
          {"labels", labels}};
}

std::string stats_table(const std::vector<FamilyStats>& stats) {
  std::ostringstream out;
  const int label_width = 8;
  out << std::left << std::setw(label_width) << "";
  for (const auto& s : stats)
    out << std::right << std::setw(15) << family_name(s.family);
  out << "\n";
  auto row = [&](const char* name, auto field) {
    out << std::left << std::setw(label_width) << name;
    for (const auto& s : stats) out << std::right << std::setw(15) << field(s);
    out << "\n";
  };
  row("motifs", [](const FamilyStats& s) { return s.total; });
  row("maximal", [](const FamilyStats& s) { return s.maximal; });
  row("largest", [](const FamilyStats& s) { return s.largest; });
  return out.str();
}

nlohmann::json inventory_json(const FormalContext& k,
                              const MotifInventory& inventory,
                              bool include_motifs) {
  nlohmann::json fams = nlohmann::json::array();
  for (const auto& fi : inventory.families) {
    nlohmann::json f = {{"family", family_name(fi.family)},
                        {"total", fi.total()},
                        {"maximal", fi.maximal_count()},
                        {"largest", fi.largest()}};
    if (include_motifs) {
      f["motifs"] = nlohmann::json::array();
      for (const auto& m : fi.motifs) f["motifs"].push_back(motif_json(k, m));
      f["maximal_motifs"] = nlohmann::json::array();
      for (const auto& m : fi.maximal)
        f["maximal_motifs"].push_back(m.sorted_domain());
    }
    fams.push_back(std::move(f));
  }
  return {{"schema_version", kSchemaVersion},
          {"objects", k.object_count()},
          {"attributes", k.attribute_count()},
          {"families", fams}};
}

std::string coverage_csv(const std::vector<CoveringStep>& steps) {
  std::ostringstream out;
  out << "step,new,cumulative\n";
  for (const auto& r : coverage_curve(steps))
    out << r.step << "," << r.new_extents << "," << r.cumulative << "\n";
  return out.str();
}

std::string ratio_csv(const std::vector<CoveringStep>& steps) {
  std::ostringstream out;
  out << "step";
  for (auto f : kAllFamilies) out << "," << family_name(f);
  out << "\n";
  for (std::size_t i = 1; i <= steps.size(); ++i) {
    auto ratios = family_ratios(steps, i);
    out << i;
    for (auto f : kAllFamilies) {
      auto it = ratios.find(f);
      out << "," << std::setprecision(6)
          << (it == ratios.end() ? 0.0 : it->second);
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json covering_json(const FormalContext& k,
                             const std::vector<CoveringStep>& steps,
                             HeuristicKind heuristic, std::size_t total_extents) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    nlohmann::json fams = nlohmann::json::array();
    for (auto f : s.families) fams.push_back(family_name(f));
    arr.push_back({{"step", i + 1},
                   {"motif", motif_json(k, s.motif)},
                   {"realized_families", fams},
                   {"new_extents", s.new_extents},
                   {"cumulative", s.cumulative},
                   {"score", s.score},
                   {"tied", s.tied}});
  }
  nlohmann::json ratios = nlohmann::json::object();
  if (!steps.empty())
    for (const auto& [f, v] : family_ratios(steps, steps.size()))
      ratios[std::string(family_name(f))] = v;
  return {{"schema_version", kSchemaVersion},
          {"heuristic", heuristic_name(heuristic)},
          {"total_extents", total_extents},
          {"covered", steps.empty() ? 0 : steps.back().cumulative},
          {"steps", arr},
          {"family_ratios", ratios}};
}

nlohmann::json explanation_json(const FormalContext& k, const ExplanationDoc& doc) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < doc.entries.size(); ++i) {
    const auto& e = doc.entries[i];
    nlohmann::json fams = nlohmann::json::array();
    for (auto f : e.families_rendered) fams.push_back(family_name(f));
    arr.push_back({{"index", i + 1},
                   {"text", e.text},
                   {"motif", motif_json(k, e.motif)},
                   {"families_rendered", fams}});
  }
  return {{"schema_version", kSchemaVersion}, {"entries", arr}};
}

}  // namespace fca

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

#include "fca/explain.hpp"

#include <sstream>
#include <stdexcept>

namespace fca {

std::string join_names(std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += i + 1 == names.size() ? " and " : ", ";
    out += names[i];
  }
  return out;
}

std::string render_template(ScaleFamily family,
                            std::span<const std::string> names) {
  const std::string all = join_names(names);
  switch (family) {
    case ScaleFamily::Nominal:
      return "The elements " + all +
             " are incomparable, i.e., all elements have at least one property "
             "that the other elements do not have.";
    case ScaleFamily::Ordinal:
      return "There is a ranking of elements " + all +
             " such that an element has all the properties its successors has.";
    case ScaleFamily::Interordinal:
      return "The elements " + all +
             " are ordered in such a way that each interval of elements has a "
             "unique set of properties they have in common.";
    case ScaleFamily::Contranominal:
      return "Each combination of the elements " + all +
             " has a unique set of properties they have in common.";
    case ScaleFamily::Crown: {
      const std::string& first = names.empty() ? std::string() : names.front();
      return "The elements " + all +
             " are incomparable. Furthermore, there is a closed cycle from " +
             first + " over " + join_names(names.subspan(names.empty() ? 0 : 1)) +
             " back to " + first + " by pairwise shared properties.";
    }
  }
  return {};
}

namespace {

std::vector<std::string> names_for(const std::vector<std::size_t>& order,
                                   std::span<const std::string> labels,
                                   const ClarificationMap* clarification) {
  std::vector<std::string> names;
  for (auto g : order) {
    if (g >= labels.size())
      throw std::out_of_range("no label for object " + std::to_string(g));
    if (clarification && g < clarification->groups.size()) {
      std::string merged;
      for (const auto& l : clarification->labels_of(g)) {
        if (!merged.empty()) merged += "/";
        merged += l;
      }
      names.push_back(merged);
    } else {
      names.push_back(labels[g]);
    }
  }
  return names;
}

}  // namespace

std::string render_motif(const Motif& motif, std::span<const std::string> labels,
                         const ClarificationMap* clarification) {
  return render_template(motif.family,
                         names_for(motif.domain, labels, clarification));
}

std::string ExplanationDoc::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << "\n";
    out << i + 1 << ". " << entries[i].text << "\n";
  }
  return out.str();
}

ExplanationDoc explain_covering(const FormalContext& k,
                                const std::vector<CoveringStep>& steps,
                                const ClarificationMap* clarification) {
  ExplanationDoc doc;
  for (const auto& step : steps) {
    ExplanationEntry entry;
    entry.motif = step.motif;
    entry.text = render_motif(step.motif, k.objects(), clarification);
    entry.families_rendered.push_back(step.motif.family);
    const auto h = step.motif.domain_set(k.object_count());
    for (auto f : step.families) {
      if (f == step.motif.family) continue;
      auto witness = recognize_clarified(k, h, f);
      if (!witness) continue;
      entry.text += "\n" + render_motif(*witness, k.objects(), clarification);
      entry.families_rendered.push_back(f);
    }
    doc.entries.push_back(std::move(entry));
  }
  return doc;
}

}  // namespace fca

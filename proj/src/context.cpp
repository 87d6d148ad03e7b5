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

#include "fca/context.hpp"

#include <map>
#include <unordered_set>

namespace fca {

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
  if (incidence.size() != objects_.size()) {
    throw std::invalid_argument("incidence has " +
                                std::to_string(incidence.size()) +
                                " rows, expected " +
                                std::to_string(objects_.size()));
  }
  rows_.reserve(objects_.size());
  for (std::size_t g = 0; g < incidence.size(); ++g) {
    if (incidence[g].size() != attributes_.size()) {
      throw std::invalid_argument(
          "incidence row " + std::to_string(g) + " has " +
          std::to_string(incidence[g].size()) + " columns, expected " +
          std::to_string(attributes_.size()));
    }
    AttributeSet row(attributes_.size());
    for (std::size_t m = 0; m < attributes_.size(); ++m)
      if (incidence[g][m]) row.set(m);
    rows_.push_back(std::move(row));
  }
  validate_labels();
  build_columns();
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects,
                                       std::vector<std::string> attributes,
                                       std::vector<AttributeSet> rows) {
  FormalContext k;
  k.objects_ = std::move(objects);
  k.attributes_ = std::move(attributes);
  k.rows_ = std::move(rows);
  if (k.rows_.size() != k.objects_.size())
    throw std::invalid_argument("row count does not match object count");
  for (const auto& r : k.rows_)
    if (r.universe() != k.attributes_.size())
      throw std::invalid_argument("row width does not match attribute count");
  k.validate_labels();
  k.build_columns();
  return k;
}

void FormalContext::validate_labels() const {
  auto check = [](const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw std::invalid_argument(std::string("duplicate ") + what +
                                    " label '" + l + "'");
  };
  check(objects_, "object");
  check(attributes_, "attribute");
}

void FormalContext::build_columns() {
  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    for (auto m : rows_[g]) columns_[m].set(g);
}

AttributeSet derive(const FormalContext& k, const ObjectSet& objects) {
  auto out = k.all_attributes();
  for (auto g : objects) out &= k.row(g);
  return out;
}

ObjectSet derive(const FormalContext& k, const AttributeSet& attributes) {
  auto out = k.all_objects();
  for (auto m : attributes) out &= k.column(m);
  return out;
}

ObjectSet object_closure(const FormalContext& k, const ObjectSet& objects) {
  return derive(k, derive(k, objects));
}

FormalContext induced_subcontext(const FormalContext& k, const ObjectSet& h,
                                 const AttributeSet& n) {
  std::vector<std::string> objs;
  std::vector<std::string> attrs;
  std::vector<std::size_t> attr_index;
  for (auto m : n) {
    attrs.push_back(k.attributes()[m]);
    attr_index.push_back(m);
  }
  std::vector<AttributeSet> rows;
  for (auto g : h) {
    objs.push_back(k.objects()[g]);
    AttributeSet row(attr_index.size());
    for (std::size_t j = 0; j < attr_index.size(); ++j)
      if (k.incident(g, attr_index[j])) row.set(j);
    rows.push_back(std::move(row));
  }
  return FormalContext::from_rows(std::move(objs), std::move(attrs),
                                  std::move(rows));
}

FormalContext induced_subcontext(const FormalContext& k, const ObjectSet& h) {
  return induced_subcontext(k, h, k.all_attributes());
}

FormalContext transpose(const FormalContext& k) {
  std::vector<AttributeSet> rows;
  rows.reserve(k.attribute_count());
  for (std::size_t m = 0; m < k.attribute_count(); ++m) {
    AttributeSet row(k.object_count());
    for (auto g : k.column(m)) row.set(g);
    rows.push_back(std::move(row));
  }
  return FormalContext::from_rows(k.attributes(), k.objects(), std::move(rows));
}

ClarificationMap ClarificationMap::identity(const FormalContext& k) {
  ClarificationMap map;
  map.original_labels = k.objects();
  for (std::size_t g = 0; g < k.object_count(); ++g) map.groups.push_back({g});
  return map;
}

std::vector<std::string> ClarificationMap::labels_of(
    std::size_t clarified_object) const {
  std::vector<std::string> out;
  for (auto g : groups.at(clarified_object)) out.push_back(original_labels[g]);
  return out;
}

bool ClarificationMap::is_identity() const {
  for (const auto& grp : groups)
    if (grp.size() != 1) return false;
  return true;
}

std::pair<FormalContext, ClarificationMap> clarify_objects(
    const FormalContext& k) {
  ClarificationMap map;
  map.original_labels = k.objects();
  std::map<AttributeSet, std::size_t> representative;
  std::vector<std::string> labels;
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < k.object_count(); ++g) {
    auto [it, inserted] = representative.emplace(k.row(g), map.groups.size());
    if (inserted) {
      map.groups.push_back({g});
      labels.push_back(k.objects()[g]);
      rows.push_back(k.row(g));
    } else {
      map.groups[it->second].push_back(g);
    }
  }
  return {FormalContext::from_rows(std::move(labels), k.attributes(),
                                   std::move(rows)),
          std::move(map)};
}

bool has_distinct_rows(const FormalContext& k, const ObjectSet& h) {
  std::unordered_set<AttributeSet, IndexSetHash> seen;
  for (auto g : h)
    if (!seen.insert(k.row(g)).second) return false;
  return true;
}

std::vector<ObjectSet> extents(const FormalContext& k) {
  const std::size_t n = k.object_count();
  std::vector<ObjectSet> out;
  ObjectSet current = object_closure(k, k.no_objects());
  out.push_back(current);
  // NextClosure: find the lectically next closed set after `current`.
  while (true) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.test(i)) {
        current.reset(i);
        continue;
      }
      ObjectSet candidate = current;
      candidate.set(i);
      candidate = object_closure(k, candidate);
      // Accept iff no element smaller than i was added.
      bool canonical = true;
      for (auto g : candidate) {
        if (g >= i) break;
        if (!current.test(g)) {
          canonical = false;
          break;
        }
      }
      if (canonical) {
        current = std::move(candidate);
        out.push_back(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

ExtentIndex::ExtentIndex(const FormalContext& k) : extents_(fca::extents(k)) {
  position_.reserve(extents_.size());
  for (std::size_t i = 0; i < extents_.size(); ++i)
    position_.emplace(extents_[i], i);
}

std::size_t ExtentIndex::find(const ObjectSet& e) const {
  auto it = position_.find(e);
  return it == position_.end() ? npos : it->second;
}

}  // namespace fca

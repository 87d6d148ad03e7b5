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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fca/index_set.hpp"

namespace fca {

// A formal context (G, M, I). Immutable after construction; object and
// attribute order is the order given, and every set-valued result in this
// library is indexed relative to it.
class FormalContext {
 public:
  FormalContext() = default;

  // incidence[g][m] is true iff object g has attribute m. Throws
  // std::invalid_argument on duplicate labels or a shape mismatch.
  FormalContext(std::vector<std::string> objects,
                std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);

  static FormalContext from_rows(std::vector<std::string> objects,
                                 std::vector<std::string> attributes,
                                 std::vector<AttributeSet> rows);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  // {g}' as an attribute set.
  const AttributeSet& row(std::size_t g) const { return rows_[g]; }
  // {m}' as an object set.
  const ObjectSet& column(std::size_t m) const { return columns_[m]; }

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const {
    return AttributeSet::full(attribute_count());
  }

  bool operator==(const FormalContext& other) const {
    return objects_ == other.objects_ && attributes_ == other.attributes_ &&
           rows_ == other.rows_;
  }

 private:
  void validate_labels() const;
  void build_columns();

  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> columns_;
};

// A'  for an object set: all attributes shared by every object in A.
AttributeSet derive(const FormalContext& k, const ObjectSet& objects);
// B'  for an attribute set: all objects having every attribute in B.
ObjectSet derive(const FormalContext& k, const AttributeSet& attributes);

// A'' (the object closure operator).
ObjectSet object_closure(const FormalContext& k, const ObjectSet& objects);

// K[H,N] with labels inherited in the original order.
FormalContext induced_subcontext(const FormalContext& k, const ObjectSet& h,
                                 const AttributeSet& n);
FormalContext induced_subcontext(const FormalContext& k, const ObjectSet& h);

FormalContext transpose(const FormalContext& k);

// Result of merging objects with identical rows. groups[i] lists the
// original object indices merged into clarified object i (ascending); the
// first one is the representative whose label the clarified context keeps.
struct ClarificationMap {
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::string> original_labels;

  static ClarificationMap identity(const FormalContext& k);
  std::vector<std::string> labels_of(std::size_t clarified_object) const;
  bool is_identity() const;
};

std::pair<FormalContext, ClarificationMap> clarify_objects(
    const FormalContext& k);

// True iff the objects in h have pairwise distinct rows.
bool has_distinct_rows(const FormalContext& k, const ObjectSet& h);

// All extents, each once, in lectic order of their characteristic vectors
// (NextClosure). The first element is the closure of the empty set.
std::vector<ObjectSet> extents(const FormalContext& k);

// Extent list with constant-time position lookup.
class ExtentIndex {
 public:
  explicit ExtentIndex(const FormalContext& k);

  std::size_t size() const { return extents_.size(); }
  const std::vector<ObjectSet>& extents() const { return extents_; }
  const ObjectSet& operator[](std::size_t i) const { return extents_[i]; }

  // Position of e, or npos when e is not an extent.
  std::size_t find(const ObjectSet& e) const;
  bool contains(const ObjectSet& e) const { return find(e) != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<ObjectSet> extents_;
  std::unordered_map<ObjectSet, std::size_t, IndexSetHash> position_;
};

}  // namespace fca

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

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace fca {

// Fixed-universe bitset over the indices [0, universe). The tag keeps object
// sets, attribute sets and extent-index sets from being mixed up.
template <typename Tag>
class IndexSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static IndexSet of(std::size_t universe,
                     std::initializer_list<std::size_t> elements) {
    IndexSet s(universe);
    for (auto e : elements) s.set(e);
    return s;
  }

  template <typename Range>
  static IndexSet from_range(std::size_t universe, const Range& elements) {
    IndexSet s(universe);
    for (auto e : elements) s.set(static_cast<std::size_t>(e));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    assert(i < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  bool contains(std::size_t i) const { return i < universe_ && test(i); }

  IndexSet& set(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return *this;
  }
  IndexSet& reset(std::size_t i) {
    assert(i < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const IndexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const IndexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }
  // |this \ other| without materializing the difference.
  std::size_t count_minus(const IndexSet& other) const {
    assert(universe_ == other.universe_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }

  IndexSet& operator&=(const IndexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  IndexSet& operator|=(const IndexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  // Set difference.
  IndexSet& operator-=(const IndexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  std::size_t first() const { return next_from(0); }
  // Smallest element >= i, or npos.
  std::size_t next_from(std::size_t i) const {
    if (i >= universe_) return npos;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    const_iterator() = default;
    const_iterator(const IndexSet* s, std::size_t pos) : set_(s), pos_(pos) {}
    std::size_t operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const IndexSet* set_ = nullptr;
    std::size_t pos_ = npos;
  };
  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, npos}; }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (auto i : *this) out.push_back(i);
    return out;
  }

  bool operator==(const IndexSet&) const = default;
  // Deterministic total order for ordered containers; not an inclusion order.
  auto operator<=>(const IndexSet& other) const {
    if (auto c = universe_ <=> other.universe_; c != 0) return c;
    return words_ <=> other.words_;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (universe_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ObjectTag {};
struct AttributeTag {};
struct ExtentTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;
// Set of positions into an enumerated extent list.
using ExtentIndexSet = IndexSet<ExtentTag>;

struct IndexSetHash {
  template <typename Tag>
  std::size_t operator()(const IndexSet<Tag>& s) const {
    return s.hash();
  }
};

}  // namespace fca

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

#include "fca/recognition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace fca {

std::vector<std::size_t> Motif::sorted_domain() const {
  auto d = domain;
  std::sort(d.begin(), d.end());
  return d;
}

bool motif_less(const Motif& a, const Motif& b) {
  if (a.family != b.family) return family_rank(a.family) < family_rank(b.family);
  return a.sorted_domain() < b.sorted_domain();
}

const FormalContext& standard_scale(ScaleFamily f, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<ScaleFamily, std::size_t>,
                  std::unique_ptr<FormalContext>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{f, n}];
  if (!slot) slot = std::make_unique<FormalContext>(build_scale(f, n));
  return *slot;
}

const std::vector<ObjectSet>& standard_scale_extents(ScaleFamily f,
                                                     std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<ScaleFamily, std::size_t>,
                  std::unique_ptr<std::vector<ObjectSet>>>
      cache;
  const auto& scale = standard_scale(f, n);
  std::lock_guard lock(mutex);
  auto& slot = cache[{f, n}];
  if (!slot) slot = std::make_unique<std::vector<ObjectSet>>(extents(scale));
  return *slot;
}

namespace {

void check_map(const FormalContext& k, std::span<const std::size_t> sigma,
               const FormalContext& scale) {
  if (sigma.size() != k.object_count())
    throw std::invalid_argument("scale-measure map is not total");
  for (auto t : sigma)
    if (t >= scale.object_count())
      throw std::invalid_argument("scale-measure map leaves the scale");
}

ObjectSet preimage(std::span<const std::size_t> sigma, std::size_t universe,
                   const ObjectSet& scale_objects) {
  ObjectSet out(universe);
  for (std::size_t g = 0; g < sigma.size(); ++g)
    if (scale_objects.test(sigma[g])) out.set(g);
  return out;
}

}  // namespace

bool verify_scale_measure(const FormalContext& k,
                          std::span<const std::size_t> sigma,
                          const FormalContext& scale) {
  check_map(k, sigma, scale);
  for (std::size_t m = 0; m < scale.attribute_count(); ++m) {
    auto pre = preimage(sigma, k.object_count(), scale.column(m));
    if (object_closure(k, pre) != pre) return false;
  }
  return true;
}

bool verify_full(const FormalContext& k, std::span<const std::size_t> sigma,
                 const FormalContext& scale) {
  if (!verify_scale_measure(k, sigma, scale)) return false;
  // sigma^-1(Ext(S)) is now a closure system inside Ext(k); it is all of
  // Ext(k) iff it contains every attribute extent of k.
  for (std::size_t a = 0; a < k.attribute_count(); ++a) {
    const auto& x = k.column(a);
    ObjectSet image(scale.object_count());
    for (auto g : x) image.set(sigma[g]);
    auto hull = object_closure(scale, image);
    if (preimage(sigma, k.object_count(), hull) != x) return false;
  }
  return true;
}

bool verify_local_full(const FormalContext& k,
                       std::span<const std::size_t> domain,
                       std::span<const std::size_t> targets,
                       const FormalContext& scale) {
  if (domain.size() != targets.size())
    throw std::invalid_argument("domain and targets differ in length");
  for (auto t : targets)
    if (t >= scale.object_count())
      throw std::invalid_argument("scale-measure map leaves the scale");
  const auto h = ObjectSet::from_range(k.object_count(), domain);
  if (h.count() != domain.size())
    throw std::invalid_argument("domain lists an object twice");

  auto pre = [&](const ObjectSet& scale_objects) {
    ObjectSet out(k.object_count());
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (scale_objects.test(targets[i])) out.set(domain[i]);
    return out;
  };
  for (std::size_t m = 0; m < scale.attribute_count(); ++m) {
    auto x = pre(scale.column(m));
    if ((object_closure(k, x) & h) != x) return false;
  }
  for (std::size_t a = 0; a < k.attribute_count(); ++a) {
    auto x = k.column(a) & h;
    ObjectSet image(scale.object_count());
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (x.test(domain[i])) image.set(targets[i]);
    if (pre(object_closure(scale, image)) != x) return false;
  }
  return true;
}

bool verify_motif(const FormalContext& k, const Motif& m) {
  if (m.size() < min_scale_size(m.family)) return false;
  std::vector<std::size_t> targets(m.size());
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = i;
  return verify_local_full(k, m.domain, targets,
                           standard_scale(m.family, m.size()));
}

namespace {

class LocalView {
 public:
  LocalView(const FormalContext& k, const ObjectSet& h)
      : k_(k), h_(h), members_(h.elements()) {}

  const std::vector<std::size_t>& members() const { return members_; }
  const ObjectSet& all() const { return h_; }
  std::size_t size() const { return members_.size(); }

  ObjectSet closure(const ObjectSet& x) const { return object_closure(k_, x) & h_; }
  bool closed(const ObjectSet& x) const { return closure(x) == x; }
  ObjectSet of(std::initializer_list<std::size_t> xs) const {
    return ObjectSet::of(k_.object_count(), xs);
  }
  ObjectSet none() const { return ObjectSet(k_.object_count()); }

 private:
  const FormalContext& k_;
  const ObjectSet& h_;
  std::vector<std::size_t> members_;
};

std::optional<Motif> accept_if_full(const FormalContext& k, ScaleFamily f,
                                    std::vector<std::size_t> order) {
  Motif m{f, std::move(order)};
  if (verify_motif(k, m)) return m;
  return std::nullopt;
}

std::optional<Motif> recognize_contranominal(const FormalContext& k,
                                             const LocalView& v) {
  for (auto g : v.members()) {
    auto rest = v.all();
    rest.reset(g);
    if (!v.closed(rest)) return std::nullopt;
  }
  return accept_if_full(k, ScaleFamily::Contranominal, v.members());
}

std::optional<Motif> recognize_nominal(const FormalContext& k,
                                       const LocalView& v) {
  if (v.size() >= 2) {
    if (!v.closed(v.none())) return std::nullopt;
    for (auto g : v.members())
      if (!v.closed(v.of({g}))) return std::nullopt;
    const auto& ms = v.members();
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (v.closure(v.of({ms[i], ms[j]})) != v.all()) return std::nullopt;
  }
  return accept_if_full(k, ScaleFamily::Nominal, v.members());
}

std::optional<Motif> recognize_ordinal(const FormalContext& k,
                                       const LocalView& v) {
  if (v.closed(v.none())) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> by_size;  // (|g''|, g)
  std::vector<ObjectSet> closures;
  for (auto g : v.members()) {
    closures.push_back(v.closure(v.of({g})));
    by_size.emplace_back(closures.back().count(), closures.size() - 1);
  }
  std::sort(by_size.begin(), by_size.end());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < by_size.size(); ++i) {
    if (by_size[i].first != i + 1) return std::nullopt;
    if (i > 0 && !closures[by_size[i - 1].second].is_subset_of(
                     closures[by_size[i].second]))
      return std::nullopt;
    order.push_back(v.members()[by_size[i].second]);
  }
  return accept_if_full(k, ScaleFamily::Ordinal, std::move(order));
}

// Adjacency lists (ascending) on the positions of v.members().
using Adjacency = std::vector<std::vector<std::size_t>>;

std::optional<Motif> recognize_interordinal(const FormalContext& k,
                                            const LocalView& v) {
  const auto& ms = v.members();
  const std::size_t n = ms.size();
  if (n <= 2) return accept_if_full(k, ScaleFamily::Interordinal, ms);

  // Two-element extents are exactly the neighbouring pairs of the chain.
  Adjacency adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v.closed(v.of({ms[i], ms[j]}))) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        if (++edges >= n) return std::nullopt;
      }
    }
  }
  if (edges != n - 1) return std::nullopt;
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2 || adj[i].empty()) return std::nullopt;
    if (adj[i].size() == 1 && start == n) start = i;
  }
  if (start == n) return std::nullopt;

  std::vector<std::size_t> order{ms[start]};
  std::size_t prev = n;
  std::size_t cur = start;
  while (order.size() < n) {
    std::size_t next = n;
    for (auto w : adj[cur])
      if (w != prev) next = w;
    if (next == n) return std::nullopt;  // disconnected
    order.push_back(ms[next]);
    prev = cur;
    cur = next;
  }
  if (auto m = accept_if_full(k, ScaleFamily::Interordinal, order)) return m;
  std::reverse(order.begin(), order.end());
  return accept_if_full(k, ScaleFamily::Interordinal, std::move(order));
}

std::optional<Motif> recognize_crown(const FormalContext& k, const LocalView& v) {
  const auto& ms = v.members();
  const std::size_t n = ms.size();
  // Neighbours in the crown are the pairs whose closure is not all of H.
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v.closure(v.of({ms[i], ms[j]})) != v.all()) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        if (adj[i].size() > 2 || adj[j].size() > 2) return std::nullopt;
      }
    }
  }
  for (const auto& a : adj)
    if (a.size() != 2) return std::nullopt;

  std::vector<std::size_t> order{ms[0]};
  std::size_t prev = 0;
  std::size_t cur = adj[0][0];  // smaller neighbour first
  while (cur != 0) {
    order.push_back(ms[cur]);
    std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != n) return std::nullopt;  // several disjoint cycles
  return accept_if_full(k, ScaleFamily::Crown, std::move(order));
}

}  // namespace

std::optional<Motif> recognize_clarified(const FormalContext& k,
                                         const ObjectSet& h, ScaleFamily family) {
  const std::size_t n = h.count();
  if (n < min_scale_size(family))
    throw std::invalid_argument("object set smaller than the " +
                                std::string(family_name(family)) +
                                " scale minimum");
  LocalView v(k, h);
  switch (family) {
    case ScaleFamily::Nominal:
      return recognize_nominal(k, v);
    case ScaleFamily::Ordinal:
      return recognize_ordinal(k, v);
    case ScaleFamily::Interordinal:
      return recognize_interordinal(k, v);
    case ScaleFamily::Contranominal:
      return recognize_contranominal(k, v);
    case ScaleFamily::Crown:
      return recognize_crown(k, v);
  }
  return std::nullopt;
}

std::optional<Motif> recognize(const FormalContext& k, const ObjectSet& h,
                               ScaleFamily family) {
  if (!has_distinct_rows(k, h))
    throw NotClarifiedError(
        "object set contains objects with identical rows; clarify first");
  return recognize_clarified(k, h, family);
}

std::vector<ScaleFamily> realized_families(const FormalContext& k,
                                           const ObjectSet& h) {
  std::vector<ScaleFamily> out;
  for (auto f : kAllFamilies)
    if (h.count() >= min_scale_size(f) && recognize_clarified(k, h, f))
      out.push_back(f);
  return out;
}

}  // namespace fca

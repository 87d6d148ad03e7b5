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

#include "fca/enumeration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace fca {

void EnumerationConfig::validate() const {
  for (auto f : kAllFamilies) {
    if (min_for(f) < min_scale_size(f))
      throw std::invalid_argument(std::string(family_name(f)) +
                                  " minimum size below " +
                                  std::to_string(min_scale_size(f)));
    if (min_for(f) > max_for(f))
      throw std::invalid_argument(std::string(family_name(f)) +
                                  " minimum size exceeds maximum");
  }
}

const FamilyInventory* MotifInventory::find(ScaleFamily f) const {
  for (const auto& fi : families)
    if (fi.family == f) return &fi;
  return nullptr;
}

std::vector<Motif> MotifInventory::pool(bool maximal_only) const {
  std::vector<Motif> out;
  for (const auto& fi : families) {
    const auto& src = maximal_only ? fi.maximal : fi.motifs;
    out.insert(out.end(), src.begin(), src.end());
  }
  return out;
}

namespace {

using Domain = std::vector<std::size_t>;  // ascending object indices

struct DomainHash {
  std::size_t operator()(const Domain& d) const {
    std::size_t h = d.size();
    for (auto x : d) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
using DomainSet = std::unordered_set<Domain, DomainHash>;

bool by_size_then_domain(const Motif& a, const Motif& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.sorted_domain() < b.sorted_domain();
}

void require_clarified(const FormalContext& k) {
  if (!has_distinct_rows(k, k.all_objects()))
    throw NotClarifiedError(
        "motif enumeration needs an object-clarified context");
}

// Apriori join: pairs of sorted (k-1)-domains sharing their first k-2
// elements, kept only if every (k-1)-subset is in `previous`.
std::vector<Domain> join_level(const std::vector<Domain>& level,
                               const DomainSet& previous) {
  std::vector<Domain> sorted = level;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Domain> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const auto& a = sorted[i];
      const auto& b = sorted[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
      Domain cand = a;
      cand.push_back(b.back());
      bool all_present = true;
      Domain sub(cand.size() - 1);
      // Dropping either of the last two elements yields a or b.
      for (std::size_t drop = 0; drop + 2 < cand.size() && all_present; ++drop) {
        std::size_t w = 0;
        for (std::size_t t = 0; t < cand.size(); ++t)
          if (t != drop) sub[w++] = cand[t];
        all_present = previous.count(sub) > 0;
      }
      if (all_present) out.push_back(std::move(cand));
    }
  }
  return out;
}

std::vector<Domain> extend_level(const std::vector<Domain>& level,
                                 std::size_t universe) {
  std::set<Domain> out;
  for (const auto& d : level) {
    for (std::size_t g = 0; g < universe; ++g) {
      if (std::binary_search(d.begin(), d.end(), g)) continue;
      Domain cand = d;
      cand.insert(std::upper_bound(cand.begin(), cand.end(), g), g);
      out.insert(std::move(cand));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Domain> all_of_size(std::size_t universe, std::size_t size) {
  std::vector<Domain> out;
  if (size > universe) return out;
  Domain d(size);
  for (std::size_t i = 0; i < size; ++i) d[i] = i;
  while (true) {
    out.push_back(d);
    std::size_t i = size;
    while (i > 0 && d[i - 1] == universe - size + i - 1) --i;
    if (i == 0) return out;
    ++d[i - 1];
    for (std::size_t j = i; j < size; ++j) d[j] = d[j - 1] + 1;
  }
}

}  // namespace

std::vector<Motif> enumerate_hereditary(const FormalContext& k,
                                        ScaleFamily family,
                                        const EnumerationConfig& cfg) {
  if (family == ScaleFamily::Crown)
    throw std::invalid_argument("crowns are not hereditary; use enumerate_crowns");
  require_clarified(k);
  const std::size_t n = k.object_count();
  const std::size_t lo = std::max(cfg.min_for(family), min_scale_size(family));
  const std::size_t hi = std::min(cfg.max_for(family), n);

  std::vector<Motif> out;
  std::vector<Domain> level;
  DomainSet level_set;
  for (std::size_t size = 1; size <= hi; ++size) {
    std::vector<Domain> candidates;
    if (size == 1) {
      candidates = all_of_size(n, 1);
    } else if (family == ScaleFamily::Ordinal) {
      candidates = extend_level(level, n);
    } else if (size == 2 && family != ScaleFamily::Contranominal) {
      // Restricting a nominal or interordinal motif to one object does not
      // give a motif of size one, so pairs are not pruned by singletons.
      candidates = all_of_size(n, 2);
    } else {
      candidates = join_level(level, level_set);
    }

    std::vector<Domain> next;
    for (const auto& cand : candidates) {
      auto m = recognize_clarified(k, ObjectSet::from_range(n, cand), family);
      if (!m) continue;
      next.push_back(cand);
      if (size >= lo) out.push_back(std::move(*m));
    }
    const bool pairs_independent =
        size == 1 && (family == ScaleFamily::Nominal ||
                      family == ScaleFamily::Interordinal);
    if (next.empty() && !pairs_independent) break;
    level = std::move(next);
    level_set = DomainSet(level.begin(), level.end());
  }
  std::stable_sort(out.begin(), out.end(), by_size_then_domain);
  return out;
}

namespace {

class CrownSearch {
 public:
  CrownSearch(const FormalContext& k, std::size_t lo, std::size_t hi)
      : k_(k), n_(k.object_count()), lo_(lo), hi_(hi) {
    single_.reserve(n_);
    for (std::size_t g = 0; g < n_; ++g)
      single_.push_back(object_closure(k, ObjectSet::of(n_, {g})));
    pair_.assign(n_ * n_, ObjectSet(n_));
    neighbours_.assign(n_, {});
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t h = g + 1; h < n_; ++h) {
        auto c = object_closure(k, ObjectSet::of(n_, {g, h}));
        pair_[g * n_ + h] = c;
        pair_[h * n_ + g] = c;
        // Crown neighbours share an attribute and neither row contains the
        // other.
        if (k.row(g).intersects(k.row(h)) && !single_[g].test(h) &&
            !single_[h].test(g)) {
          neighbours_[g].push_back(h);
          neighbours_[h].push_back(g);
        }
      }
    }
  }

  std::vector<Motif> run() {
    for (std::size_t start = 0; start < n_; ++start) {
      path_ = {start};
      members_ = ObjectSet::of(n_, {start});
      extend();
    }
    std::sort(found_.begin(), found_.end(), by_size_then_domain);
    return std::move(found_);
  }

 private:
  const ObjectSet& pc(std::size_t a, std::size_t b) const {
    return pair_[a * n_ + b];
  }

  // Necessary conditions on a path prefix of a crown, checked for the path
  // extended by w: singletons and neighbouring pairs stay closed, every other
  // pair except (first, w) closes to the whole prefix.
  bool admissible(std::size_t w, const ObjectSet& next) const {
    if ((single_[w] & next).count() != 1) return false;
    for (auto v : path_)
      if (single_[v].test(w)) return false;
    const std::size_t len = path_.size();
    for (std::size_t i = 0; i + 1 < len; ++i)
      if (pc(path_[i], path_[i + 1]).test(w)) return false;
    if ((pc(path_.back(), w) & next) != ObjectSet::of(n_, {path_.back(), w}))
      return false;
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 2; j < len; ++j)
        if (!next.is_subset_of(pc(path_[i], path_[j]))) return false;
      if (i >= 1 && i + 1 < len && !next.is_subset_of(pc(path_[i], w)))
        return false;
    }
    return true;
  }

  void extend() {
    const std::size_t first = path_.front();
    for (auto w : neighbours_[path_.back()]) {
      if (w <= first || members_.test(w)) continue;
      auto next = members_;
      next.set(w);
      if (!admissible(w, next)) continue;
      const std::size_t len = path_.size() + 1;
      bool may_continue = len == 2;
      if (len >= 3) {
        auto closing = pc(first, w) & next;
        if (closing == ObjectSet::of(n_, {first, w})) {
          if (len >= lo_ && path_[1] < w) report(next);
        } else if (closing == next) {
          may_continue = true;
        }
      }
      if (may_continue && len < hi_) {
        path_.push_back(w);
        std::swap(members_, next);
        extend();
        std::swap(members_, next);
        path_.pop_back();
      }
    }
  }

  void report(const ObjectSet& h) {
    if (!seen_.insert(h).second) return;
    if (auto m = recognize_clarified(k_, h, ScaleFamily::Crown))
      found_.push_back(std::move(*m));
  }

  const FormalContext& k_;
  std::size_t n_;
  std::size_t lo_;
  std::size_t hi_;
  std::vector<ObjectSet> single_;
  std::vector<ObjectSet> pair_;
  std::vector<std::vector<std::size_t>> neighbours_;
  std::vector<std::size_t> path_;
  ObjectSet members_;
  std::unordered_set<ObjectSet, IndexSetHash> seen_;
  std::vector<Motif> found_;
};

}  // namespace

std::vector<Motif> enumerate_crowns(const FormalContext& k,
                                    const EnumerationConfig& cfg) {
  require_clarified(k);
  const std::size_t lo = std::max<std::size_t>(cfg.min_for(ScaleFamily::Crown), 3);
  const std::size_t hi = std::min(
      {cfg.max_for(ScaleFamily::Crown), cfg.crown_size_cap, k.object_count()});
  if (lo > hi) return {};
  return CrownSearch(k, lo, hi).run();
}

std::vector<Motif> maximal_filter(const std::vector<Motif>& motifs) {
  if (motifs.empty()) return {};
  std::size_t universe = 0;
  for (const auto& m : motifs)
    for (auto g : m.domain) universe = std::max(universe, g + 1);
  std::vector<ObjectSet> sets;
  sets.reserve(motifs.size());
  for (const auto& m : motifs) sets.push_back(m.domain_set(universe));

  std::vector<Motif> out;
  for (std::size_t i = 0; i < motifs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < motifs.size() && !dominated; ++j)
      dominated = motifs[j].size() > motifs[i].size() &&
                  sets[i].is_subset_of(sets[j]);
    if (!dominated) out.push_back(motifs[i]);
  }
  return out;
}

MotifInventory enumerate_motifs(const FormalContext& k,
                                const EnumerationConfig& cfg) {
  cfg.validate();
  require_clarified(k);
  MotifInventory inv;
  for (auto f : kAllFamilies) {
    if (std::find(cfg.families.begin(), cfg.families.end(), f) ==
        cfg.families.end())
      continue;
    FamilyInventory fi;
    fi.family = f;
    fi.motifs = f == ScaleFamily::Crown ? enumerate_crowns(k, cfg)
                                        : enumerate_hereditary(k, f, cfg);
    fi.maximal = maximal_filter(fi.motifs);
    inv.families.push_back(std::move(fi));
  }
  return inv;
}

std::vector<FamilyStats> motif_stats(const MotifInventory& inventory) {
  std::vector<FamilyStats> out;
  for (const auto& fi : inventory.families)
    out.push_back({fi.family, fi.total(), fi.maximal_count(), fi.largest()});
  return out;
}

}  // namespace fca

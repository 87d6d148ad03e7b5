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

// Brute-force reference implementations for small contexts. They read only
// the incidence relation and share no algorithm with the library: sets are
// plain bit masks, extents come from intersecting attribute columns, and
// scale-measures are checked by trying every bijection.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fca/context.hpp"
#include "fca/scales.hpp"

namespace oracle {

using Mask = std::uint32_t;

// Incidence copied into column masks; objects and attributes must each fit
// in 16 bits for the subset loops below to stay cheap.
struct Table {
  std::size_t g = 0;
  std::size_t m = 0;
  std::vector<Mask> columns;  // columns[j] = objects having attribute j
  std::vector<Mask> rows;     // rows[i] = attributes of object i

  explicit Table(const fca::FormalContext& k)
      : g(k.object_count()), m(k.attribute_count()), columns(m, 0), rows(g, 0) {
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (k.incident(i, j)) {
          columns[j] |= Mask{1} << i;
          rows[i] |= Mask{1} << j;
        }
  }

  Mask all() const { return g == 32 ? ~Mask{0} : (Mask{1} << g) - 1; }
};

inline Mask to_mask(const fca::ObjectSet& s) {
  Mask out = 0;
  for (auto i : s) out |= Mask{1} << i;
  return out;
}

inline std::vector<std::size_t> bits(Mask x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; x; ++i, x >>= 1)
    if (x & 1) out.push_back(i);
  return out;
}

// Ext(K[H, M]): H together with every intersection of attribute extents,
// restricted to H. Built column by column, so each subset intersection is
// reached without enumerating attribute subsets.
inline std::set<Mask> extents_on(const Table& t, Mask h) {
  std::set<Mask> out{h};
  for (std::size_t j = 0; j < t.m; ++j) {
    std::vector<Mask> add;
    for (auto e : out) add.push_back(e & t.columns[j]);
    out.insert(add.begin(), add.end());
  }
  return out;
}

inline std::set<Mask> extents(const Table& t) { return extents_on(t, t.all()); }

inline Mask closure(const Table& t, Mask a) {
  Mask out = t.all();
  for (std::size_t j = 0; j < t.m; ++j)
    if ((t.columns[j] & a) == a) out &= t.columns[j];
  return out;
}

// Preimage of a scale-object mask under sigma (sigma[i] = scale object of
// source object i).
inline Mask preimage(const std::vector<std::size_t>& sigma, Mask scale_set) {
  Mask out = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (scale_set >> sigma[i] & 1) out |= Mask{1} << i;
  return out;
}

// Every extent of the scale pulls back to an extent of K.
inline bool scale_measure(const Table& k, const std::vector<std::size_t>& sigma,
                          const Table& s) {
  auto ek = extents(k);
  for (auto e : extents(s))
    if (!ek.count(preimage(sigma, e))) return false;
  return true;
}

// Ext(K) == sigma^-1(Ext(S)).
inline bool full_measure(const Table& k, const std::vector<std::size_t>& sigma,
                         const Table& s) {
  std::set<Mask> pulled;
  for (auto e : extents(s)) pulled.insert(preimage(sigma, e));
  return pulled == extents(k);
}

// Extent systems of the standard scales, kept as 64-bit membership maps over
// local masks so the bijection loop below is a table lookup.
struct LocalSystem {
  std::uint64_t member = 0;  // bit x set iff local mask x is an extent
  std::size_t count = 0;
};

inline LocalSystem local_system(const Table& t, Mask h) {
  auto hb = bits(h);
  LocalSystem out;
  for (auto e : extents_on(t, h)) {
    Mask local = 0;
    for (std::size_t i = 0; i < hb.size(); ++i)
      if (e >> hb[i] & 1) local |= Mask{1} << i;
    out.member |= std::uint64_t{1} << local;
    ++out.count;
  }
  return out;
}

inline const std::vector<Mask>& scale_extents(fca::ScaleFamily f, std::size_t n) {
  static std::vector<Mask> cache[5][7];
  auto& slot = cache[fca::family_rank(f)][n];
  if (slot.empty()) {
    Table t(fca::build_scale(f, n));
    auto ext = extents(t);
    slot.assign(ext.begin(), ext.end());
  }
  return slot;
}

// Some bijection H -> [|H|] is a full scale-measure of K[H, M] onto the
// standard scale of the family. |H| <= 6.
inline bool has_motif(const Table& t, Mask h, fca::ScaleFamily f) {
  const auto hb = bits(h);
  const std::size_t n = hb.size();
  if (n < fca::min_scale_size(f) || n > 6) return false;
  const auto sys = local_system(t, h);
  const auto& se = scale_extents(f, n);
  if (se.size() != sys.count) return false;
  std::vector<std::size_t> perm(n);  // perm[scale object] = local object
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto e : se) {
      Mask local = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (e >> j & 1) local |= Mask{1} << perm[j];
      if (!(sys.member >> local & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool distinct_rows(const Table& t, Mask h) {
  std::set<Mask> seen;
  for (auto i : bits(h))
    if (!seen.insert(t.rows[i]).second) return false;
  return true;
}

// All domains of the family with lo <= |H| <= hi, as masks.
inline std::set<Mask> motif_domains(const Table& t, fca::ScaleFamily f,
                                    std::size_t lo, std::size_t hi) {
  std::set<Mask> out;
  for (Mask h = 1; h <= t.all(); ++h) {
    auto n = static_cast<std::size_t>(__builtin_popcount(h));
    if (n < lo || n > hi) continue;
    if (has_motif(t, h, f)) out.insert(h);
  }
  return out;
}

inline std::set<Mask> maximal_domains(const std::set<Mask>& d) {
  std::set<Mask> out;
  for (auto a : d) {
    bool maximal = true;
    for (auto b : d)
      if (a != b && (a & b) == a) maximal = false;
    if (maximal) out.insert(a);
  }
  return out;
}

// Full scale-measure into the explicitly built semi-product, with the tuple
// of maps sending object i to the tuple (maps[0][i], maps[1][i], ...).
inline bool full_into_product(const fca::FormalContext& k,
                              const std::vector<fca::FormalContext>& scales,
                              const std::vector<std::vector<std::size_t>>& maps) {
  auto product = fca::semiproduct(scales);
  std::vector<std::size_t> sigma(k.object_count(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < scales.size(); ++j)
      idx = idx * scales[j].object_count() + maps[j][i];
    sigma[i] = idx;
  }
  return full_measure(Table(k), sigma, Table(product));
}

// Every choice of d scales (with repetition) and every tuple of maps.
inline bool scalable_within(const fca::FormalContext& k,
                            const std::vector<fca::FormalContext>& family,
                            std::size_t d) {
  const std::size_t g = k.object_count();
  std::vector<std::size_t> pick(d, 0);
  while (true) {
    std::vector<fca::FormalContext> chosen;
    std::vector<std::size_t> radix;
    for (auto p : pick) {
      chosen.push_back(family[p]);
      for (std::size_t i = 0; i < g; ++i) radix.push_back(family[p].object_count());
    }
    std::vector<std::size_t> digits(radix.size(), 0);
    while (true) {
      std::vector<std::vector<std::size_t>> maps(d, std::vector<std::size_t>(g));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < g; ++i) maps[j][i] = digits[j * g + i];
      if (full_into_product(k, chosen, maps)) return true;
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == radix[pos]) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
    std::size_t pos = 0;
    while (pos < d && ++pick[pos] == family.size()) pick[pos++] = 0;
    if (pos == d) return false;
  }
}

// Random context with pairwise distinct labels.
inline fca::FormalContext random_context(std::mt19937_64& rng, std::size_t g,
                                         std::size_t m, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < g; ++i) objects.push_back("g" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j));
  std::vector<std::vector<bool>> inc(g, std::vector<bool>(m));
  for (auto& row : inc)
    for (std::size_t j = 0; j < m; ++j) row[j] = coin(rng);
  return fca::FormalContext(objects, attributes, inc);
}

// k with every repeated object row dropped after its first occurrence.
inline fca::FormalContext drop_repeated_rows(const fca::FormalContext& k) {
  Table t(k);
  std::set<Mask> seen;
  std::vector<std::string> objects;
  std::vector<std::vector<bool>> inc;
  for (std::size_t i = 0; i < t.g; ++i) {
    if (!seen.insert(t.rows[i]).second) continue;
    objects.push_back(k.objects()[i]);
    std::vector<bool> row(t.m);
    for (std::size_t j = 0; j < t.m; ++j) row[j] = k.incident(i, j);
    inc.push_back(row);
  }
  return fca::FormalContext(objects, k.attributes(), inc);
}

// Random context whose object rows are pairwise distinct.
inline fca::FormalContext random_clarified(std::mt19937_64& rng, std::size_t g,
                                           std::size_t m, double density) {
  return drop_repeated_rows(random_context(rng, g, m, density));
}

}  // namespace oracle

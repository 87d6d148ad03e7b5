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

#include "fca/scales.hpp"

#include <charconv>
#include <stdexcept>

namespace fca {

std::string_view family_name(ScaleFamily f) {
  switch (f) {
    case ScaleFamily::Nominal:
      return "nominal";
    case ScaleFamily::Ordinal:
      return "ordinal";
    case ScaleFamily::Interordinal:
      return "interordinal";
    case ScaleFamily::Contranominal:
      return "contranominal";
    case ScaleFamily::Crown:
      return "crown";
  }
  return "unknown";
}

std::optional<ScaleFamily> parse_family(std::string_view name) {
  for (auto f : kAllFamilies)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::size_t min_scale_size(ScaleFamily f) {
  return f == ScaleFamily::Crown ? 3 : 1;
}

FormalContext build_scale(ScaleFamily f, std::size_t n) {
  if (n < min_scale_size(f)) {
    throw std::invalid_argument(std::string(family_name(f)) +
                                " scale needs at least " +
                                std::to_string(min_scale_size(f)) +
                                " objects, got " + std::to_string(n));
  }
  std::vector<std::string> objects;
  for (std::size_t i = 1; i <= n; ++i) objects.push_back(std::to_string(i));

  std::vector<std::string> attributes;
  if (f == ScaleFamily::Interordinal) {
    for (std::size_t i = 1; i <= n; ++i) attributes.push_back("≤" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) attributes.push_back("≥" + std::to_string(i));
  } else {
    attributes = objects;
  }

  std::vector<std::vector<bool>> incidence(n,
                                           std::vector<bool>(attributes.size()));
  // 0-based a, b stand for the labels a+1, b+1.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      switch (f) {
        case ScaleFamily::Nominal:
          incidence[a][b] = a == b;
          break;
        case ScaleFamily::Ordinal:
          incidence[a][b] = a <= b;
          break;
        case ScaleFamily::Interordinal:
          incidence[a][b] = a <= b;
          incidence[a][n + b] = a >= b;
          break;
        case ScaleFamily::Contranominal:
          incidence[a][b] = a != b;
          break;
        case ScaleFamily::Crown:
          incidence[a][b] = a == b || (a == n - 1 && b == 0) || b == a + 1;
          break;
      }
    }
  }
  return FormalContext(std::move(objects), std::move(attributes), incidence);
}

std::size_t expected_extent_count(ScaleFamily f, std::size_t n) {
  if (n < min_scale_size(f)) {
    throw std::invalid_argument(std::string(family_name(f)) +
                                " scale size below minimum");
  }
  // Size one: the single object either is the bottom extent (nominal,
  // ordinal, interordinal) or is separated from the empty set
  // (contranominal).
  switch (f) {
    case ScaleFamily::Nominal:
      return n == 1 ? 1 : n + 2;
    case ScaleFamily::Ordinal:
      return n;
    case ScaleFamily::Interordinal:
      return n == 1 ? 1 : n * (n + 1) / 2 + 1;
    case ScaleFamily::Contranominal:
      if (n >= 8 * sizeof(std::size_t))
        throw std::overflow_error("contranominal extent count overflows");
      return std::size_t{1} << n;
    case ScaleFamily::Crown:
      return 2 * n + 2;
  }
  return 0;
}

FormalContext apposition(const FormalContext& left, const FormalContext& right) {
  if (left.objects() != right.objects())
    throw std::invalid_argument("apposition requires identical object lists");
  std::vector<std::string> attributes;
  for (const auto& m : left.attributes()) attributes.push_back("1:" + m);
  for (const auto& m : right.attributes()) attributes.push_back("2:" + m);
  const std::size_t offset = left.attribute_count();
  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < left.object_count(); ++g) {
    AttributeSet row(attributes.size());
    for (auto m : left.row(g)) row.set(m);
    for (auto m : right.row(g)) row.set(offset + m);
    rows.push_back(std::move(row));
  }
  return FormalContext::from_rows(left.objects(), std::move(attributes),
                                  std::move(rows));
}

FormalContext semiproduct(std::span<const FormalContext> scales) {
  if (scales.empty())
    throw std::invalid_argument("semi-product needs at least one operand");

  std::vector<std::string> attributes;
  std::vector<std::size_t> offsets;
  for (std::size_t j = 0; j < scales.size(); ++j) {
    offsets.push_back(attributes.size());
    for (const auto& m : scales[j].attributes())
      attributes.push_back(std::to_string(j + 1) + ":" + m);
  }

  std::vector<std::string> objects;
  std::vector<AttributeSet> rows;
  std::vector<std::size_t> digits(scales.size(), 0);
  for (const auto& s : scales)
    if (s.object_count() == 0)
      return FormalContext::from_rows({}, std::move(attributes), {});
  // Odometer over the Cartesian product, first component most significant.
  while (true) {
    std::string label = "(";
    AttributeSet row(attributes.size());
    for (std::size_t j = 0; j < scales.size(); ++j) {
      if (j) label += ",";
      label += scales[j].objects()[digits[j]];
      for (auto m : scales[j].row(digits[j])) row.set(offsets[j] + m);
    }
    objects.push_back(label + ")");
    rows.push_back(std::move(row));

    std::size_t j = scales.size();
    while (j > 0) {
      --j;
      if (++digits[j] < scales[j].object_count()) break;
      digits[j] = 0;
      if (j == 0) {
        return FormalContext::from_rows(std::move(objects),
                                        std::move(attributes), std::move(rows));
      }
    }
  }
}

ScaleSpec parse_scale_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("scale spec '" + std::string(text) +
                                "' must look like family:size");
  auto family = parse_family(text.substr(0, colon));
  if (!family)
    throw std::invalid_argument("unknown scale family '" +
                                std::string(text.substr(0, colon)) + "'");
  auto digits = text.substr(colon + 1);
  std::size_t size = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad scale size in '" + std::string(text) + "'");
  if (size < min_scale_size(*family))
    throw std::invalid_argument("scale size below minimum in '" +
                                std::string(text) + "'");
  return {*family, size};
}

}  // namespace fca

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

#include "fca/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace fca {
namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  // A trailing newline does not start another line.
  if (!lines.empty() && lines.back().empty() && !text.empty() &&
      text.back() == '\n')
    lines.pop_back();
  return lines;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::size_t> parse_count(const std::string& s) {
  auto t = trim(s);
  if (t.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

void check_unique(const std::vector<std::string>& labels,
                  const std::vector<std::size_t>& lines, const char* what) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!seen.insert(labels[i]).second)
      throw ParseError(lines[i], std::string("duplicate ") + what + " label '" +
                                     labels[i] + "'");
}

FormalContext parse_burmeister(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t pos = 0;
  auto line_no = [&](std::size_t idx) { return idx + 1; };
  auto need = [&](const char* what) -> const std::string& {
    if (pos >= lines.size())
      throw ParseError(line_no(pos), std::string("unexpected end of input, expected ") + what);
    return lines[pos];
  };

  if (trim(need("header 'B'")) != "B")
    throw ParseError(1, "malformed header, expected 'B'");
  ++pos;

  // The name line is optional; a numeric line 2 is a count only if the two
  // lines after it do not also look like "count, blank".
  bool has_name = true;
  if (pos < lines.size() && parse_count(lines[pos]) && pos + 1 < lines.size() &&
      parse_count(lines[pos + 1])) {
    bool third_is_count = pos + 2 < lines.size() && parse_count(lines[pos + 2]);
    bool blank_after_third =
        pos + 3 < lines.size() && trim(lines[pos + 3]).empty();
    has_name = third_is_count && blank_after_third;
  }
  if (has_name) {
    need("name line");
    ++pos;
  }

  auto g_count = parse_count(need("object count"));
  if (!g_count) throw ParseError(line_no(pos), "malformed object count");
  ++pos;
  auto m_count = parse_count(need("attribute count"));
  if (!m_count) throw ParseError(line_no(pos), "malformed attribute count");
  ++pos;
  if (pos < lines.size() && trim(lines[pos]).empty()) {
    ++pos;
  } else {
    throw ParseError(line_no(pos), "expected blank line after counts");
  }

  std::vector<std::string> objects;
  std::vector<std::size_t> object_lines;
  for (std::size_t i = 0; i < *g_count; ++i) {
    objects.push_back(trim(need("object name")));
    object_lines.push_back(line_no(pos));
    ++pos;
  }
  std::vector<std::string> attributes;
  std::vector<std::size_t> attribute_lines;
  for (std::size_t i = 0; i < *m_count; ++i) {
    attributes.push_back(trim(need("attribute name")));
    attribute_lines.push_back(line_no(pos));
    ++pos;
  }
  check_unique(objects, object_lines, "object");
  check_unique(attributes, attribute_lines, "attribute");

  std::vector<AttributeSet> rows;
  for (std::size_t g = 0; g < *g_count; ++g) {
    auto row_text = trim(need("incidence row"));
    if (row_text.size() != *m_count)
      throw ParseError(line_no(pos), "dimension mismatch: row has " +
                                         std::to_string(row_text.size()) +
                                         " cells, expected " +
                                         std::to_string(*m_count));
    AttributeSet row(*m_count);
    for (std::size_t m = 0; m < row_text.size(); ++m) {
      char c = row_text[m];
      if (c == 'X' || c == 'x') {
        row.set(m);
      } else if (c != '.') {
        throw ParseError(line_no(pos),
                         std::string("invalid incidence character '") + c + "'");
      }
    }
    rows.push_back(std::move(row));
    ++pos;
  }
  for (; pos < lines.size(); ++pos)
    if (!trim(lines[pos]).empty())
      throw ParseError(line_no(pos), "dimension mismatch: unexpected extra row");
  return FormalContext::from_rows(std::move(objects), std::move(attributes),
                                  std::move(rows));
}

std::vector<std::string> split_csv_record(const std::string& line,
                                          std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

FormalContext parse_csv(std::string_view text) {
  if (text.empty()) throw ParseError(1, "malformed header: empty input");
  auto lines = split_lines(text);
  while (lines.size() > 1 && trim(lines.back()).empty()) lines.pop_back();
  // A lone blank header is the context without objects or attributes.
  if (lines.size() == 1 && trim(lines[0]).empty()) return FormalContext();

  auto header = split_csv_record(lines[0], 1);
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  check_unique(attributes, std::vector<std::size_t>(attributes.size(), 1),
               "attribute");

  std::vector<std::string> objects;
  std::vector<std::size_t> object_lines;
  std::vector<AttributeSet> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_csv_record(lines[i], i + 1);
    if (fields.size() != attributes.size() + 1)
      throw ParseError(i + 1, "dimension mismatch: row has " +
                                  std::to_string(fields.size() - 1) +
                                  " cells, expected " +
                                  std::to_string(attributes.size()));
    AttributeSet row(attributes.size());
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      const auto& cell = fields[m + 1];
      if (cell == "1") {
        row.set(m);
      } else if (cell != "0") {
        throw ParseError(i + 1, "invalid cell '" + cell + "', expected 0 or 1");
      }
    }
    objects.push_back(fields[0]);
    object_lines.push_back(i + 1);
    rows.push_back(std::move(row));
  }
  check_unique(objects, object_lines, "object");
  return FormalContext::from_rows(std::move(objects), std::move(attributes),
                                  std::move(rows));
}

std::string csv_field(const std::string& s) {
  bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos ||
                      (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!needs_quotes) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

FormalContext parse_context(std::string_view text, ContextFormat format) {
  return format == ContextFormat::Csv ? parse_csv(text) : parse_burmeister(text);
}

std::string write_burmeister(const FormalContext& k, const std::string& name) {
  std::ostringstream out;
  out << "B\n" << name << "\n"
      << k.object_count() << "\n"
      << k.attribute_count() << "\n\n";
  for (const auto& g : k.objects()) out << g << "\n";
  for (const auto& m : k.attributes()) out << m << "\n";
  for (std::size_t g = 0; g < k.object_count(); ++g) {
    for (std::size_t m = 0; m < k.attribute_count(); ++m)
      out << (k.incident(g, m) ? 'X' : '.');
    out << "\n";
  }
  return out.str();
}

std::string write_csv(const FormalContext& k) {
  std::ostringstream out;
  for (const auto& m : k.attributes()) out << "," << csv_field(m);
  out << "\n";
  for (std::size_t g = 0; g < k.object_count(); ++g) {
    out << csv_field(k.objects()[g]);
    for (std::size_t m = 0; m < k.attribute_count(); ++m)
      out << "," << (k.incident(g, m) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

ContextFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv" ? ContextFormat::Csv : ContextFormat::Burmeister;
}

FormalContext read_context_file(const std::filesystem::path& path,
                                ContextFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_context(buf.str(), format);
}

FormalContext read_context_file(const std::filesystem::path& path) {
  return read_context_file(path, format_for_path(path));
}

}  // namespace fca

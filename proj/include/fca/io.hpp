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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fca/context.hpp"

namespace fca {

enum class ContextFormat { Burmeister, Csv };

// Thrown for malformed input; line() is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message
                                : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Burmeister: "B", optional name line, |G|, |M|, blank line, object names,
// attribute names, then |G| rows of '.'/'X'.
// CSV: header of attribute names (first cell ignored), then one row per
// object: name followed by 0/1 cells. Fields may be double-quoted.
FormalContext parse_context(std::string_view text, ContextFormat format);

std::string write_burmeister(const FormalContext& k,
                             const std::string& name = {});
std::string write_csv(const FormalContext& k);

// Guesses the format from the extension (.csv is CSV, anything else
// Burmeister).
ContextFormat format_for_path(const std::filesystem::path& path);
FormalContext read_context_file(const std::filesystem::path& path,
                                ContextFormat format);
FormalContext read_context_file(const std::filesystem::path& path);

}  // namespace fca

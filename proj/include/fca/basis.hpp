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
#include <vector>

#include "fca/context.hpp"
#include "fca/recognition.hpp"

namespace fca {

class IncompleteCoveringError : public std::invalid_argument {
 public:
  IncompleteCoveringError(std::size_t uncovered, std::size_t total);
  std::size_t uncovered() const { return uncovered_; }
  std::size_t total() const { return total_; }

 private:
  std::size_t uncovered_;
  std::size_t total_;
};

// Ordinal motif basis: the apposition over the covering of (G, M_i, I_i)
// where g I_i m iff g lies in the closure (in k) of the preimage of m's
// attribute extent in the i-th motif's scale. Attributes are labelled
// "i:m" with i 1-based. Throws IncompleteCoveringError when the covering
// misses an extent of k.
FormalContext build_basis(const FormalContext& k,
                          const std::vector<Motif>& covering);

}  // namespace fca

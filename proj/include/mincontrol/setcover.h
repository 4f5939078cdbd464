// Copyright 2026 The mincontrol Authors.
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

#ifndef MINCONTROL_SETCOVER_H_
#define MINCONTROL_SETCOVER_H_

#include <cstddef>
#include <span>
#include <vector>

namespace mincontrol {

// Universe {0, ..., universe_size-1} and an ordered family of subsets.
// Construction enforces that every set lies inside the universe and that the
// family covers it.
class SetCoverInstance {
 public:
  SetCoverInstance(std::size_t universe_size,
                   std::vector<std::vector<std::size_t>> sets);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t num_sets() const { return sets_.size(); }
  // Sorted, duplicate-free members of set i.
  const std::vector<std::size_t>& set(std::size_t i) const { return sets_.at(i); }
  const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }

  friend bool operator==(const SetCoverInstance&,
                         const SetCoverInstance&) = default;

 private:
  std::size_t universe_size_;
  std::vector<std::vector<std::size_t>> sets_;
};

struct CoverSolution {
  // Sorted ascending.
  std::vector<std::size_t> indices;
  bool exact = false;
};

// Throws kIndexOutOfRange for an index >= num_sets().
bool IsCover(const SetCoverInstance& instance,
             std::span<const std::size_t> indices);

struct ExactSolverOptions {
  // Largest universe solve_exact accepts (at most 64).
  std::size_t max_universe = 30;
};

// Minimum-cardinality cover; among all minimum covers the lexicographically
// smallest index set is returned. Throws kTooLarge when the universe exceeds
// options.max_universe.
CoverSolution SolveExact(const SetCoverInstance& instance,
                         const ExactSolverOptions& options = {});

// Repeatedly takes the set covering the most uncovered elements, lowest
// index on ties.
CoverSolution SolveGreedy(const SetCoverInstance& instance);

}  // namespace mincontrol

#endif  // MINCONTROL_SETCOVER_H_

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

#ifndef MINCONTROL_STRUCTURAL_H_
#define MINCONTROL_STRUCTURAL_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "mincontrol/structure.h"

namespace mincontrol {

// Digraph on the state variables: edge (i, j) means x_i -> x_j, present iff
// the structural matrix has '*' at (j, i).
struct StateDigraph {
  std::size_t num_vertices = 0;
  // Sorted, unique.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Condensation of a digraph into strongly connected components.
struct SccDag {
  // Each component is sorted; components are ordered by their lowest vertex.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  // Edges between distinct components; sorted, unique.
  std::vector<std::pair<std::size_t, std::size_t>> dag_edges;
  // True for components with no incoming edge from another component.
  std::vector<bool> non_top_linked;
};

// Throws kNotSquare.
StateDigraph BuildStateDigraph(const StructuralMatrix& a);

SccDag CondenseScc(const StateDigraph& graph);

// Sparsest structural input for a pattern with a full diagonal: one '*' at
// the lowest vertex of every non-top-linked component. Throws
// kMissingSelfLoops when some diagonal entry is zero.
StructuralVector SolveMscp(const StructuralMatrix& a);

// True iff b reaches every non-top-linked component. Same premise as
// SolveMscp.
bool IsStructurallyControllable(const StructuralMatrix& a,
                                const StructuralVector& b);

}  // namespace mincontrol

#endif  // MINCONTROL_STRUCTURAL_H_

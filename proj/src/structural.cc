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

#include "mincontrol/structural.h"

#include <algorithm>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "mincontrol/errors.h"

namespace mincontrol {

namespace {

void RequireFullDiagonal(const StructuralMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNotSquare, "structural matrix is not square");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a.is_star(i, i)) {
      throw Error(ErrorCode::kMissingSelfLoops,
                  "diagonal entry (" + std::to_string(i + 1) + ", " +
                      std::to_string(i + 1) + ") is zero; only the full-diagonal case (every state "
                      "has a self-loop) is supported");
    }
  }
}

}  // namespace

StateDigraph BuildStateDigraph(const StructuralMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNotSquare, "structural matrix is not square");
  }
  StateDigraph g;
  g.num_vertices = a.rows();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.is_star(j, i)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SccDag CondenseScc(const StateDigraph& graph) {
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph g(graph.num_vertices);
  for (const auto& [from, to] : graph.edges) boost::add_edge(from, to, g);

  std::vector<int> raw(graph.num_vertices, 0);
  const int count = graph.num_vertices == 0
                        ? 0
                        : boost::strong_components(g, raw.data());

  // Relabel components by lowest member vertex.
  std::vector<int> relabel(static_cast<std::size_t>(count), -1);
  SccDag dag;
  dag.component_of.resize(graph.num_vertices);
  for (std::size_t v = 0; v < graph.num_vertices; ++v) {
    int& label = relabel[static_cast<std::size_t>(raw[v])];
    if (label < 0) {
      label = static_cast<int>(dag.components.size());
      dag.components.emplace_back();
    }
    dag.component_of[v] = static_cast<std::size_t>(label);
    dag.components[static_cast<std::size_t>(label)].push_back(v);
  }

  dag.non_top_linked.assign(dag.components.size(), true);
  for (const auto& [from, to] : graph.edges) {
    const std::size_t cf = dag.component_of[from];
    const std::size_t ct = dag.component_of[to];
    if (cf != ct) {
      dag.dag_edges.emplace_back(cf, ct);
      dag.non_top_linked[ct] = false;
    }
  }
  std::sort(dag.dag_edges.begin(), dag.dag_edges.end());
  dag.dag_edges.erase(std::unique(dag.dag_edges.begin(), dag.dag_edges.end()),
                      dag.dag_edges.end());
  return dag;
}

StructuralVector SolveMscp(const StructuralMatrix& a) {
  RequireFullDiagonal(a);
  const SccDag dag = CondenseScc(BuildStateDigraph(a));
  StructuralVector b(a.rows());
  for (std::size_t c = 0; c < dag.components.size(); ++c) {
    if (dag.non_top_linked[c]) b.set_star(dag.components[c].front());
  }
  return b;
}

bool IsStructurallyControllable(const StructuralMatrix& a,
                                const StructuralVector& b) {
  RequireFullDiagonal(a);
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input pattern length does not match the matrix");
  }
  const SccDag dag = CondenseScc(BuildStateDigraph(a));
  for (std::size_t c = 0; c < dag.components.size(); ++c) {
    if (!dag.non_top_linked[c]) continue;
    const auto& members = dag.components[c];
    if (std::none_of(members.begin(), members.end(),
                     [&](std::size_t v) { return b.is_star(v); })) {
      return false;
    }
  }
  return true;
}

}  // namespace mincontrol

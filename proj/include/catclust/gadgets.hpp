// Copyright 2026 The catclust Authors.
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

#ifndef CATCLUST_GADGETS_HPP_
#define CATCLUST_GADGETS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catclust/feature_selection.hpp"
#include "catclust/matrix.hpp"

namespace catclust {

// Simple undirected graph, 0-based vertices, edges stored as (u, v), u < v.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  void Validate() const;
};

// Text format: header "p <vertices>", then one "u v" line per edge with
// 1-based ids. Lines starting with '#' or 'c' are comments.
Graph ParseGraph(const std::string& text);
std::string FormatGraph(const Graph& graph);

Graph RandomGraph(int vertices, double edge_probability, std::uint64_t seed);

// Vertex-by-edge 0/1 matrix, columns in edge order.
CategoricalMatrix IncidenceMatrix(const Graph& graph);

// Adds a clique on `size` new vertices joined to every original vertex.
Graph AugmentWithClique(const Graph& graph, int size);

// k = t + 1, l = |V'| - t, B = 0 on the incidence matrix of G' (G plus a
// (t + 2)-clique joined to G, unless augment is false).
FeatureSelectionInstance GadgetIndependentSet(const Graph& graph, int t,
                                              bool augment = true);

// Adds two universal vertices and 5 + t + |E| - q vertices adjacent only
// to them; t' = t + 2, q' = q + 2|V'| - 3,
// k = 1 + |V'| - t' + |E'| - q', l = t', B = 0.
FeatureSelectionInstance GadgetPartialVertexCover(const Graph& graph, int t,
                                                  int q);

bool HasIndependentSet(const Graph& graph, int t);
bool HasPartialVertexCover(const Graph& graph, int t, int q);

}  // namespace catclust

#endif  // CATCLUST_GADGETS_HPP_

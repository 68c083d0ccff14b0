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

#ifndef CATCLUST_HYPERGRAPH_HPP_
#define CATCLUST_HYPERGRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "catclust/matrix.hpp"

namespace catclust {

// Bit h stands for row h (0-based). Hosts are limited to 64 rows.
using VertexMask = std::uint64_t;

inline constexpr int kMaxHostVertices = 64;

struct HyperEdge {
  VertexMask vertices = 0;
  std::int64_t weight = 1;
  int payload = -1;
};

// Host hypergraph over row positions. Edges form a multiset; identical
// vertex sets may be merged with Compact(), which adds their weights.
class Hypergraph {
 public:
  void AddEdge(VertexMask vertices, std::int64_t weight = 1, int payload = -1);
  void Compact();

  VertexMask vertex_labels() const { return labels_; }
  const std::vector<HyperEdge>& edges() const { return edges_; }
  int VertexCount() const;

 private:
  VertexMask labels_ = 0;
  std::vector<HyperEdge> edges_;
};

// Small pattern on vertices 0..vertex_count-1. Edge bit i is vertex i.
struct PatternHypergraph {
  int vertex_count = 0;
  std::vector<std::uint32_t> edges;

  bool operator==(const PatternHypergraph&) const = default;
};

// Every vertex lies in at least ceil(|edges| / 4) edges.
bool QuarterCover(const PatternHypergraph& pattern);

// Lexicographically smallest sorted edge list over all vertex relabelings.
PatternHypergraph Canonicalize(const PatternHypergraph& pattern);

// Edge-count bound max(1, floor(200 ln B)).
int LogEdgeCap(int budget);
// Edge count that always suffices for a pattern on `vertices` vertices.
int SufficientEdgeCount(int vertices);
// Deepening limit used by the solvers: min of the two bounds above.
int EdgeBudget(int budget);

// Isomorphism-class representatives with 1..max_vertices vertices and
// 1..edge_budget non-empty edges, every vertex covered, passing
// QuarterCover. Ordered by (edge count, vertex count, edge list). Results
// are cached.
const std::vector<PatternHypergraph>& EnumeratePatterns(
    int max_vertices, int edge_budget,
    double work_ceiling = DefaultWorkCeiling());

// One edge per tuple: rows where the tuple differs from x as k-tuples.
// Empty edges and edges larger than size_cap are dropped. x and every tuple
// hold k column vectors of equal length.
Hypergraph BuildDifferenceHypergraph(
    const std::vector<SymbolVector>& x,
    const std::vector<std::vector<SymbolVector>>& tuples, int size_cap);

// Every vertex set V' of the host at which the pattern appears, each once,
// in increasing mask order.
std::vector<VertexMask> FindOccurrences(const PatternHypergraph& pattern,
                                        const Hypergraph& host);

}  // namespace catclust

#endif  // CATCLUST_HYPERGRAPH_HPP_

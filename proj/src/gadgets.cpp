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

#include "catclust/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace catclust {

void Graph::Validate() const {
  if (vertices < 0) throw ContractViolation("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw ContractViolation("edge endpoint out of range");
    }
    if (u == v) throw ContractViolation("self-loops are not allowed");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ContractViolation("parallel edges are not allowed");
    }
  }
}

Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Graph g;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#' || first == "c") continue;
    auto fail = [&](const std::string& why) {
      throw ContractViolation("graph line " + std::to_string(line_no) + ": " +
                              why);
    };
    if (first == "p") {
      if (header) fail("duplicate header");
      if (!(ls >> g.vertices) || g.vertices < 0) fail("bad vertex count");
      header = true;
      continue;
    }
    if (!header) fail("missing 'p <vertices>' header");
    int u, v;
    try {
      u = std::stoi(first);
    } catch (...) {
      fail("expected 'u v'");
    }
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) fail("expected 'u v'");
    if (u < 1 || v < 1 || u > g.vertices || v > g.vertices) {
      fail("vertex id out of range");
    }
    g.edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
  }
  if (!header) throw ContractViolation("graph has no 'p <vertices>' header");
  g.Validate();
  return g;
}

std::string FormatGraph(const Graph& graph) {
  std::ostringstream out;
  out << "p " << graph.vertices << "\n";
  for (auto [u, v] : graph.edges) out << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

Graph RandomGraph(int vertices, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  Graph g;
  g.vertices = vertices;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

CategoricalMatrix IncidenceMatrix(const Graph& graph) {
  graph.Validate();
  const int n = static_cast<int>(graph.edges.size());
  if (graph.vertices < 1 || n < 1) {
    throw ContractViolation("incidence matrix needs a vertex and an edge");
  }
  std::vector<Symbol> cells(static_cast<size_t>(graph.vertices) * n, 0);
  for (int e = 0; e < n; ++e) {
    cells[graph.edges[e].first * n + e] = 1;
    cells[graph.edges[e].second * n + e] = 1;
  }
  return CategoricalMatrix(Alphabet(2), graph.vertices, n, std::move(cells));
}

Graph AugmentWithClique(const Graph& graph, int size) {
  Graph g = graph;
  const int base = graph.vertices;
  g.vertices = base + size;
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) g.edges.emplace_back(base + a, base + b);
  }
  for (int v = 0; v < base; ++v) {
    for (int c = 0; c < size; ++c) g.edges.emplace_back(v, base + c);
  }
  return g;
}

FeatureSelectionInstance GadgetIndependentSet(const Graph& graph, int t,
                                              bool augment) {
  graph.Validate();
  if (t < 1) throw ContractViolation("independent set size must be positive");
  Graph g = augment ? AugmentWithClique(graph, t + 2) : graph;
  if (t > g.vertices) {
    throw ContractViolation("independent set size exceeds the vertex count");
  }
  return FeatureSelectionInstance{IncidenceMatrix(g), t + 1, 0,
                                  g.vertices - t};
}

FeatureSelectionInstance GadgetPartialVertexCover(const Graph& graph, int t,
                                                  int q) {
  graph.Validate();
  const int edges = static_cast<int>(graph.edges.size());
  if (q > edges) {
    throw ContractViolation("q = " + std::to_string(q) +
                            " exceeds the edge count " +
                            std::to_string(edges));
  }
  if (t < 0 || q < 0) throw ContractViolation("t and q must be non-negative");
  const int d = 5 + t + edges - q;
  Graph g = graph;
  const int p0 = graph.vertices;
  const int p1 = graph.vertices + 1;
  g.vertices = graph.vertices + 2 + d;
  g.edges.emplace_back(p0, p1);
  for (int p : {p0, p1}) {
    for (int v = 0; v < g.vertices; ++v) {
      if (v != p0 && v != p1) g.edges.emplace_back(std::min(p, v),
                                                   std::max(p, v));
    }
  }
  const int v_count = g.vertices;
  const int e_count = static_cast<int>(g.edges.size());
  const int t2 = t + 2;
  const int q2 = q + 2 * v_count - 3;
  const int k = 1 + v_count - t2 + e_count - q2;
  return FeatureSelectionInstance{IncidenceMatrix(g), k, 0, t2};
}

bool HasIndependentSet(const Graph& graph, int t) {
  graph.Validate();
  if (t <= 0) return true;
  if (graph.vertices > 24) {
    throw ContractViolation("independent set check limited to 24 vertices");
  }
  for (std::uint32_t s = 0; s < (1u << graph.vertices); ++s) {
    if (std::popcount(s) < t) continue;
    bool independent = true;
    for (auto [u, v] : graph.edges) {
      if (((s >> u) & 1) && ((s >> v) & 1)) {
        independent = false;
        break;
      }
    }
    if (independent) return true;
  }
  return false;
}

bool HasPartialVertexCover(const Graph& graph, int t, int q) {
  graph.Validate();
  if (graph.vertices > 24) {
    throw ContractViolation("vertex cover check limited to 24 vertices");
  }
  for (std::uint32_t s = 0; s < (1u << graph.vertices); ++s) {
    if (std::popcount(s) > t) continue;
    int covered = 0;
    for (auto [u, v] : graph.edges) {
      covered += ((s >> u) & 1) || ((s >> v) & 1);
    }
    if (covered >= q) return true;
  }
  return false;
}

}  // namespace catclust

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

#include "catclust/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

namespace catclust {

void Hypergraph::AddEdge(VertexMask vertices, std::int64_t weight,
                         int payload) {
  if (weight < 1) throw ContractViolation("edge weight must be positive");
  labels_ |= vertices;
  edges_.push_back(HyperEdge{vertices, weight, payload});
}

void Hypergraph::Compact() {
  std::sort(edges_.begin(), edges_.end(),
            [](const HyperEdge& a, const HyperEdge& b) {
              return a.vertices != b.vertices ? a.vertices < b.vertices
                                              : a.payload < b.payload;
            });
  std::vector<HyperEdge> merged;
  for (const HyperEdge& e : edges_) {
    if (!merged.empty() && merged.back().vertices == e.vertices) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  edges_ = std::move(merged);
}

int Hypergraph::VertexCount() const { return std::popcount(labels_); }

bool QuarterCover(const PatternHypergraph& pattern) {
  const int e = static_cast<int>(pattern.edges.size());
  if (e == 0) return false;
  const int need = (e + 3) / 4;
  for (int v = 0; v < pattern.vertex_count; ++v) {
    int count = 0;
    for (std::uint32_t edge : pattern.edges) count += (edge >> v) & 1u;
    if (count < need) return false;
  }
  return true;
}

namespace {

std::uint32_t Relabel(std::uint32_t edge, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if ((edge >> i) & 1u) out |= 1u << perm[i];
  }
  return out;
}

// True iff no relabeling gives a smaller sorted edge list than `edges`,
// which must already be sorted.
bool IsCanonical(int v, const std::vector<std::uint32_t>& edges) {
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> mapped(edges.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (size_t i = 0; i < edges.size(); ++i) {
      mapped[i] = Relabel(edges[i], perm);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped < edges) return false;
  }
  return true;
}

double Binomial(double n, double r) {
  double out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

void EmitPatterns(int v, int e, std::vector<PatternHypergraph>& out) {
  const std::uint32_t max_mask = (1u << v) - 1;
  std::vector<std::uint32_t> edges(e, 1);
  while (true) {
    PatternHypergraph p{v, edges};
    if (QuarterCover(p) && IsCanonical(v, edges)) out.push_back(p);
    int i = e - 1;
    while (i >= 0 && edges[i] == max_mask) --i;
    if (i < 0) break;
    ++edges[i];
    for (int j = i + 1; j < e; ++j) edges[j] = edges[i];
  }
}

}  // namespace

PatternHypergraph Canonicalize(const PatternHypergraph& pattern) {
  const int v = pattern.vertex_count;
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best = pattern.edges;
  std::sort(best.begin(), best.end());
  std::vector<std::uint32_t> mapped(best.size());
  do {
    for (size_t i = 0; i < best.size(); ++i) {
      mapped[i] = Relabel(pattern.edges[i], perm);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return PatternHypergraph{v, best};
}

int LogEdgeCap(int budget) {
  if (budget < 2) return 1;
  return std::max(1, static_cast<int>(std::floor(200.0 * std::log(budget))));
}

int SufficientEdgeCount(int vertices) {
  return vertices <= 4 ? vertices : 2 * vertices + 2;
}

int EdgeBudget(int budget) {
  return std::min(LogEdgeCap(budget), SufficientEdgeCount(budget));
}

const std::vector<PatternHypergraph>& EnumeratePatterns(int max_vertices,
                                                        int edge_budget,
                                                        double work_ceiling) {
  if (max_vertices < 1 || edge_budget < 1) {
    throw ContractViolation("pattern enumeration needs B >= 1 and e >= 1");
  }
  if (max_vertices > 31) {
    throw ContractViolation("pattern vertex count limited to 31");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<PatternHypergraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(max_vertices, edge_budget);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  double work = 0;
  for (int v = 1; v <= max_vertices; ++v) {
    double perms = std::tgamma(v + 1.0);
    for (int e = 1; e <= edge_budget; ++e) {
      work += Binomial(std::ldexp(1.0, v) - 1 + e - 1, e) * perms;
    }
  }
  if (work > work_ceiling) {
    throw WorkCeilingExceeded(
        "pattern enumeration for B = " + std::to_string(max_vertices) +
        ", e = " + std::to_string(edge_budget) + " needs about " +
        std::to_string(work) + " steps, above the ceiling");
  }
  std::vector<PatternHypergraph> out;
  for (int e = 1; e <= edge_budget; ++e) {
    for (int v = 1; v <= max_vertices; ++v) EmitPatterns(v, e, out);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

Hypergraph BuildDifferenceHypergraph(
    const std::vector<SymbolVector>& x,
    const std::vector<std::vector<SymbolVector>>& tuples, int size_cap) {
  const size_t k = x.size();
  const size_t m = k == 0 ? 0 : x.front().size();
  if (m > static_cast<size_t>(kMaxHostVertices)) {
    throw ContractViolation("difference hypergraphs support at most 64 rows");
  }
  Hypergraph host;
  for (size_t t = 0; t < tuples.size(); ++t) {
    const auto& y = tuples[t];
    if (y.size() != k) throw ContractViolation("tuple arity mismatch");
    VertexMask edge = 0;
    for (size_t j = 0; j < k; ++j) {
      if (y[j].size() != m || x[j].size() != m) {
        throw ContractViolation("tuple column length mismatch");
      }
      for (size_t h = 0; h < m; ++h) {
        if (x[j][h] != y[j][h]) edge |= VertexMask{1} << h;
      }
    }
    if (edge == 0 || std::popcount(edge) > size_cap) continue;
    host.AddEdge(edge, 1, static_cast<int>(t));
  }
  return host;
}

namespace {

class OccurrenceSearch {
 public:
  OccurrenceSearch(const PatternHypergraph& pattern, const Hypergraph& host)
      : pattern_(pattern) {
    for (int h = 0; h < kMaxHostVertices; ++h) {
      if ((host.vertex_labels() >> h) & 1) host_vertices_.push_back(h);
    }
    for (const HyperEdge& e : host.edges()) host_edges_.push_back(e.vertices);
    std::sort(host_edges_.begin(), host_edges_.end());
    host_edges_.erase(std::unique(host_edges_.begin(), host_edges_.end()),
                      host_edges_.end());
    image_.assign(pattern.vertex_count, -1);
  }

  std::vector<VertexMask> Run() {
    if (pattern_.vertex_count <= static_cast<int>(host_vertices_.size())) {
      Extend(0, 0);
    }
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return found_;
  }

 private:
  // Every pattern edge must equal the trace of some host edge on the image
  // of the vertices assigned so far.
  bool Consistent(int assigned, VertexMask image) const {
    for (std::uint32_t e : pattern_.edges) {
      VertexMask want = 0;
      for (int p = 0; p < assigned; ++p) {
        if ((e >> p) & 1u) want |= VertexMask{1} << image_[p];
      }
      bool ok = false;
      for (VertexMask he : host_edges_) {
        if ((he & image) == want) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  void Extend(int p, VertexMask image) {
    if (p == pattern_.vertex_count) {
      found_.push_back(image);
      return;
    }
    for (int h : host_vertices_) {
      VertexMask bit = VertexMask{1} << h;
      if (image & bit) continue;
      image_[p] = h;
      if (Consistent(p + 1, image | bit)) Extend(p + 1, image | bit);
    }
    image_[p] = -1;
  }

  const PatternHypergraph& pattern_;
  std::vector<int> host_vertices_;
  std::vector<VertexMask> host_edges_;
  std::vector<int> image_;
  std::vector<VertexMask> found_;
};

}  // namespace

std::vector<VertexMask> FindOccurrences(const PatternHypergraph& pattern,
                                        const Hypergraph& host) {
  return OccurrenceSearch(pattern, host).Run();
}

}  // namespace catclust

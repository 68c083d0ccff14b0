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

#ifndef CATCLUST_TESTS_SUPPORT_HPP_
#define CATCLUST_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "catclust/hypergraph.hpp"
#include "catclust/matrix.hpp"

namespace catclust::testing {

// C5 incidence matrix: rows are vertices a..e, columns the edges
// ab, bc, cd, de, ea.
inline CategoricalMatrix C5Matrix() {
  return CategoricalMatrix::FromRows(Alphabet(2), {{1, 0, 0, 0, 1},
                                                   {1, 1, 0, 0, 0},
                                                   {0, 1, 1, 0, 0},
                                                   {0, 0, 1, 1, 0},
                                                   {0, 0, 0, 1, 1}});
}

// Columns (0,0,0,0), (0,0,0,1), (1,1,0,0), (1,1,0,1), (1,0,1,0).
inline CategoricalMatrix ToyMatrix() {
  return CategoricalMatrix::FromRows(Alphabet(2), {{0, 0, 1, 1, 1},
                                                   {0, 0, 1, 1, 0},
                                                   {0, 0, 0, 0, 1},
                                                   {0, 1, 0, 1, 0}});
}

inline CategoricalMatrix RandomMatrix(int m, int n, int alphabet,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, alphabet - 1);
  std::vector<Symbol> cells(static_cast<size_t>(m) * n);
  for (auto& c : cells) c = static_cast<Symbol>(d(rng));
  return CategoricalMatrix(Alphabet(alphabet), m, n, std::move(cells));
}

// Every vertex subset of the host of the pattern's size, every bijection,
// every pattern edge matched against every host edge.
inline std::vector<VertexMask> NaiveOccurrences(
    const PatternHypergraph& pattern, const Hypergraph& host) {
  std::vector<int> labels;
  for (int v = 0; v < 64; ++v) {
    if ((host.vertex_labels() >> v) & 1) labels.push_back(v);
  }
  const int size = pattern.vertex_count;
  const int h = static_cast<int>(labels.size());
  std::vector<VertexMask> out;
  if (size > h) return out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << h); ++pick) {
    if (std::popcount(pick) != size) continue;
    std::vector<int> chosen;
    VertexMask subset = 0;
    for (int i = 0; i < h; ++i) {
      if ((pick >> i) & 1) {
        chosen.push_back(labels[i]);
        subset |= VertexMask{1} << labels[i];
      }
    }
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    bool appears = false;
    do {
      // chosen[i] plays pattern vertex perm[i].
      bool all = true;
      for (std::uint32_t e : pattern.edges) {
        VertexMask image = 0;
        for (int i = 0; i < size; ++i) {
          if ((e >> perm[i]) & 1) image |= VertexMask{1} << chosen[i];
        }
        bool matched = false;
        for (const HyperEdge& he : host.edges()) {
          if ((he.vertices & subset) == image) matched = true;
        }
        if (!matched) {
          all = false;
          break;
        }
      }
      appears = all;
    } while (!appears && std::next_permutation(perm.begin(), perm.end()));
    if (appears) out.push_back(subset);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline PatternHypergraph RandomPattern(std::mt19937_64& rng, int max_vertices,
                                       int max_edges) {
  PatternHypergraph p;
  p.vertex_count = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int edges = std::uniform_int_distribution<int>(1, max_edges)(rng);
  std::uniform_int_distribution<std::uint32_t> mask(
      1, (1u << p.vertex_count) - 1);
  for (int i = 0; i < edges; ++i) p.edges.push_back(mask(rng));
  return p;
}

inline Hypergraph RandomHost(std::mt19937_64& rng, int max_vertices,
                             int max_edges) {
  const int v = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int edges = std::uniform_int_distribution<int>(1, max_edges)(rng);
  std::uniform_int_distribution<VertexMask> mask(1, (VertexMask{1} << v) - 1);
  std::bernoulli_distribution sparse(0.5);
  Hypergraph g;
  for (int i = 0; i < edges; ++i) {
    VertexMask e = mask(rng);
    if (sparse(rng)) e &= mask(rng);
    if (e == 0) e = 1;
    g.AddEdge(e, 1, i);
  }
  return g;
}

}  // namespace catclust::testing

#endif  // CATCLUST_TESTS_SUPPORT_HPP_

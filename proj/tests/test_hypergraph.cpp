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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "catclust/hypergraph.hpp"
#include "doctest.h"
#include "support.hpp"

namespace catclust {
namespace {

PatternHypergraph P(int v, std::vector<std::uint32_t> edges) {
  return PatternHypergraph{v, std::move(edges)};
}

// Independent canonical form: sorted edge list minimized over all
// relabelings.
std::vector<std::uint32_t> BruteCanon(const PatternHypergraph& p) {
  std::vector<int> perm(p.vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> e;
    for (std::uint32_t x : p.edges) {
      std::uint32_t y = 0;
      for (int i = 0; i < p.vertex_count; ++i) {
        if ((x >> i) & 1) y |= 1u << perm[i];
      }
      e.push_back(y);
    }
    std::sort(e.begin(), e.end());
    if (best.empty() || e < best) best = e;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Brute-force class count: all multisets of non-empty edges, every vertex
// covered, quarter cover, deduplicated by BruteCanon.
size_t BrutePatternCount(int max_vertices, int max_edges) {
  std::set<std::pair<int, std::vector<std::uint32_t>>> classes;
  for (int v = 1; v <= max_vertices; ++v) {
    const std::uint32_t masks = (1u << v) - 1;
    for (int e = 1; e <= max_edges; ++e) {
      std::vector<std::uint32_t> edges(e, 1);
      while (true) {
        PatternHypergraph p{v, edges};
        std::uint32_t covered = 0;
        for (auto x : edges) covered |= x;
        if (covered == masks && QuarterCover(p)) {
          classes.insert({v, BruteCanon(p)});
        }
        int i = e - 1;
        while (i >= 0 && edges[i] == masks) --i;
        if (i < 0) break;
        ++edges[i];
        for (int j = i + 1; j < e; ++j) edges[j] = edges[i];
      }
    }
  }
  return classes.size();
}

TEST_SUITE("hypergraph-engine") {
  TEST_CASE("quarter cover examples") {
    CHECK(QuarterCover(P(1, {0b1})));
    CHECK_FALSE(QuarterCover(P(2, {0b01, 0b01})));
    CHECK(QuarterCover(P(2, {0b11, 0b01, 0b10, 0b11})));
    CHECK_FALSE(QuarterCover(P(1, {})));
  }

  TEST_CASE("pattern enumeration examples") {
    const auto& one = EnumeratePatterns(1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == P(1, {0b1}));

    const auto& two = EnumeratePatterns(1, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == P(1, {0b1}));
    CHECK(two[1] == P(1, {0b1, 0b1}));

    CHECK(EnumeratePatterns(2, 2).size() == BrutePatternCount(2, 2));
  }

  TEST_CASE("pattern enumeration matches brute force on larger budgets") {
    CHECK(EnumeratePatterns(3, 3).size() == BrutePatternCount(3, 3));
    CHECK(EnumeratePatterns(2, 5).size() == BrutePatternCount(2, 5));
    CHECK(EnumeratePatterns(3, 4).size() == BrutePatternCount(3, 4));
  }

  TEST_CASE("enumerated patterns are covered, canonical and distinct") {
    const auto& patterns = EnumeratePatterns(3, 4);
    std::set<std::pair<int, std::vector<std::uint32_t>>> seen;
    for (const auto& p : patterns) {
      CHECK(QuarterCover(p));
      CHECK(Canonicalize(p) == p);
      CHECK(seen.insert({p.vertex_count, BruteCanon(p)}).second);
    }
    const auto copy = patterns;
    CHECK(EnumeratePatterns(3, 4) == copy);
  }

  TEST_CASE("edge budgets") {
    CHECK(LogEdgeCap(1) == 1);
    CHECK(LogEdgeCap(2) == 138);
    CHECK(SufficientEdgeCount(3) == 3);
    CHECK(SufficientEdgeCount(5) == 12);
    CHECK(EdgeBudget(1) == 1);
    CHECK(EdgeBudget(3) == 3);
  }

  TEST_CASE("difference hypergraph examples") {
    const std::vector<SymbolVector> x{{0, 1}, {0, 1}};
    Hypergraph self = BuildDifferenceHypergraph(x, {x}, 2);
    CHECK(self.edges().empty());
    CHECK(self.vertex_labels() == 0);

    const std::vector<SymbolVector> x2{{0, 0}, {1, 1}};
    const std::vector<SymbolVector> y{{0, 1}, {1, 1}};
    Hypergraph g = BuildDifferenceHypergraph(x2, {y}, 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].vertices == 0b10);
    CHECK(g.edges()[0].payload == 0);

    const std::vector<SymbolVector> far{{1, 1}, {0, 0}};
    CHECK(BuildDifferenceHypergraph(x2, {far}, 1).edges().empty());
  }

  TEST_CASE("compact merges identical edges") {
    Hypergraph g;
    g.AddEdge(0b11, 2, 0);
    g.AddEdge(0b01, 1, 1);
    g.AddEdge(0b11, 3, 2);
    g.Compact();
    REQUIRE(g.edges().size() == 2);
    std::int64_t total = 0;
    for (const auto& e : g.edges()) total += e.weight;
    CHECK(total == 6);
  }

  TEST_CASE("occurrence examples") {
    Hypergraph host;
    host.AddEdge(0b011);
    host.AddEdge(0b110);
    CHECK(FindOccurrences(P(1, {0b1}), host) ==
          std::vector<VertexMask>{0b001, 0b010, 0b100});
    CHECK(FindOccurrences(P(2, {0b01, 0b11}), host) ==
          std::vector<VertexMask>{0b011, 0b110});
    CHECK(FindOccurrences(P(3, {0b111}), host).empty());
    CHECK(FindOccurrences(P(4, {0b1111}), host).empty());
  }

  TEST_CASE("occurrences equal the naive checker on random pairs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
      const PatternHypergraph p = testing::RandomPattern(rng, 4, 4);
      const Hypergraph host = testing::RandomHost(rng, 9, 6);
      CHECK(FindOccurrences(p, host) == testing::NaiveOccurrences(p, host));
    }
  }
}

}  // namespace
}  // namespace catclust

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

#include <random>

#include "catclust/constrained.hpp"
#include "catclust/feature_selection.hpp"
#include "catclust/generators.hpp"
#include "catclust/oracles.hpp"
#include "doctest.h"
#include "support.hpp"

namespace catclust {
namespace {

using testing::C5Matrix;
using testing::ToyMatrix;

// For the returned clustering: P = rows where the generator tuple and the
// centers differ on the non-empty slots. Every row of P must be changed by
// at least half of the tuples picking one column per non-empty cluster.
void CheckStructuralWitness(const ConstrainedInstance& inst,
                            const ConstrainedOutcome& out) {
  const ClusteringSolution& s = out.solution;
  std::vector<int> used;
  for (int j = 0; j < inst.k; ++j) {
    if (!s.clusters[j].empty()) used.push_back(j);
  }
  if (used.empty()) return;
  std::vector<int> rows;
  for (int h = 0; h < inst.matrix.rows(); ++h) {
    for (int j : used) {
      if (out.generator.rows[h * inst.k + j] != s.centers[j][h]) {
        rows.push_back(h);
        break;
      }
    }
  }
  CHECK(static_cast<int>(rows.size()) <= inst.budget);
  for (int h : rows) {
    std::int64_t tau = 0;
    std::int64_t hits = 0;
    std::vector<size_t> idx(used.size(), 0);
    while (true) {
      ++tau;
      for (size_t u = 0; u < used.size(); ++u) {
        const int j = used[u];
        const int col = s.clusters[j][idx[u]];
        if (inst.matrix.at(h, col) != out.generator.rows[h * inst.k + j]) {
          ++hits;
          break;
        }
      }
      size_t u = 0;
      while (u < used.size() && ++idx[u] == s.clusters[used[u]].size()) {
        idx[u] = 0;
        ++u;
      }
      if (u == used.size()) break;
    }
    CHECK(2 * hits >= tau);
  }
}

TEST_SUITE("constrained-solver") {
  TEST_CASE("refinement leaves satisfying tuples alone") {
    const CategoricalMatrix a = ToyMatrix();
    const RelationSet full = RelationSet::Full(a.alphabet(), 2, 4);
    const std::vector<int> slots{0, 2};
    auto t = RefineTuple(a, slots, full, 0);
    REQUIRE(t.has_value());
    CHECK(t->deviated.empty());
    CHECK(t->Column(0) == a.ColumnVector(0));
    CHECK(t->Column(1) == a.ColumnVector(2));
  }

  TEST_CASE("refinement rewrites violating rows") {
    const CategoricalMatrix a =
        CategoricalMatrix::FromColumns(Alphabet(2), {{0, 0, 1}, {0, 0, 0}});
    const RelationSet zero = RelationSet::Uniform(2, {{0, 0}}, 3);
    const std::vector<int> slots{0, 1};
    auto t = RefineTuple(a, slots, zero, 1);
    REQUIRE(t.has_value());
    CHECK(t->Column(0) == SymbolVector{0, 0, 0});
    CHECK(t->Column(1) == SymbolVector{0, 0, 0});
    CHECK(t->deviated == std::vector<int>{2});

    const CategoricalMatrix b =
        CategoricalMatrix::FromColumns(Alphabet(2), {{1, 1, 1}, {0, 0, 0}});
    CHECK_FALSE(RefineTuple(b, slots, zero, 2).has_value());
  }

  TEST_CASE("greedy assignment examples") {
    const CategoricalMatrix a = ToyMatrix();
    const std::vector<SymbolVector> centers{{0, 0, 0, 0}, {1, 1, 0, 0}};
    ClusteringSolution s = GreedyAssign(a, centers, 1);
    CHECK(s.outliers == std::vector<int>{4});
    CHECK(s.cost == 2);
    CHECK(s.clusters[0] == std::vector<int>{0, 1});
    CHECK(s.clusters[1] == std::vector<int>{2, 3});

    ClusteringSolution none = GreedyAssign(a, centers, 0);
    CHECK(none.cost == 0 + 1 + 0 + 1 + 2);

    const std::vector<SymbolVector> exact{a.ColumnVector(0), a.ColumnVector(1),
                                          a.ColumnVector(2), a.ColumnVector(3),
                                          a.ColumnVector(4)};
    CHECK(GreedyAssign(a, exact, 2).cost == 0);
  }

  TEST_CASE("greedy outlier ties prefer the larger index") {
    const CategoricalMatrix a =
        CategoricalMatrix::FromColumns(Alphabet(2), {{1, 1}, {0, 0}, {1, 1}});
    ClusteringSolution s = GreedyAssign(a, {{0, 0}}, 1);
    CHECK(s.outliers == std::vector<int>{2});
  }

  TEST_CASE("identical columns with full relations cost nothing") {
    const CategoricalMatrix a =
        CategoricalMatrix::FromColumns(Alphabet(2), {{0, 1, 1}, {0, 1, 1}});
    ConstrainedInstance inst{a, 1, 0, 0, RelationSet::Full(a.alphabet(), 1, 3)};
    for (SearchMode mode : {SearchMode::kDirect, SearchMode::kHypergraph}) {
      auto out = SolveConstrained(inst, {mode});
      REQUIRE(out.has_value());
      CHECK(out->solution.cost == 0);
    }
  }

  TEST_CASE("c5 gadget reduction image") {
    const FeatureSelectionInstance fs{C5Matrix(), 3, 0, 3};
    const ConstrainedInstance reduced = BuildReduction(fs);
    for (SearchMode mode : {SearchMode::kDirect, SearchMode::kHypergraph}) {
      auto out = SolveConstrained(reduced, {mode});
      REQUIRE(out.has_value());
      CHECK(out->solution.cost == 0);
      CHECK(out->solution.outliers.size() == 3);
      CHECK(VerifyConstrained(reduced, out->solution).ok());
    }
  }

  TEST_CASE("random small instances match the oracle") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RandomConstrainedSpec spec{5, 6, 2, 2, static_cast<int>(seed % 3),
                                 static_cast<int>(seed % 2), 3, seed};
      const ConstrainedInstance inst = GenerateRandomConstrained(spec);
      const auto oracle = OracleConstrained(inst);
      for (SearchMode mode : {SearchMode::kDirect, SearchMode::kHypergraph}) {
        auto out = SolveConstrained(inst, {mode});
        CAPTURE(seed);
        REQUIRE(out.has_value() == oracle.has_value());
        if (!out) continue;
        CHECK(out->solution.cost == oracle->cost);
        CHECK(VerifyConstrained(inst, out->solution).ok());
      }
    }
  }

  TEST_CASE("structural witness holds on solved instances") {
    int solved = 0;
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
      RandomConstrainedSpec spec{5, 5, 2, 2, 2, 1, 4, seed};
      const ConstrainedInstance inst = GenerateRandomConstrained(spec);
      auto out = SolveConstrained(inst, {SearchMode::kDirect});
      if (!out) continue;
      ++solved;
      CAPTURE(seed);
      CheckStructuralWitness(inst, *out);
    }
    CHECK(solved > 10);
  }

  TEST_CASE("modes agree and results do not depend on thread count") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
      RandomConstrainedSpec spec{6, 5, 3, 2, 2, 1, 4, seed};
      const ConstrainedInstance inst = GenerateRandomConstrained(spec);
      auto one = SolveConstrained(inst, {SearchMode::kDirect, 1e9, 1});
      auto many = SolveConstrained(inst, {SearchMode::kDirect, 1e9, 4});
      auto hyper = SolveConstrained(inst, {SearchMode::kHypergraph, 1e9, 3});
      REQUIRE(one.has_value() == many.has_value());
      REQUIRE(one.has_value() == hyper.has_value());
      if (!one) continue;
      CHECK(one->solution == many->solution);
      CHECK(one->solution.cost == hyper->solution.cost);
    }
  }

  TEST_CASE("work ceiling aborts oversized searches") {
    RandomConstrainedSpec spec{6, 6, 3, 3, 3, 1, 4, 9};
    const ConstrainedInstance inst = GenerateRandomConstrained(spec);
    CHECK(ConstrainedWorkBound(inst) > 100);
    CHECK_THROWS_AS(SolveConstrained(inst, {SearchMode::kDirect, 100}),
                    WorkCeilingExceeded);
  }

  TEST_CASE("instance validation") {
    const CategoricalMatrix a = ToyMatrix();
    ConstrainedInstance bad{a, 2, 0, 5, RelationSet::Full(a.alphabet(), 2, 4)};
    CHECK_THROWS_AS(SolveConstrained(bad), ContractViolation);
    ConstrainedInstance arity{a, 3, 0, 0,
                              RelationSet::Full(a.alphabet(), 2, 4)};
    CHECK_THROWS_AS(SolveConstrained(arity), ContractViolation);
  }
}

}  // namespace
}  // namespace catclust

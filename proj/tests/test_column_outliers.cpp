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

#include "catclust/column_outliers.hpp"
#include "catclust/generators.hpp"
#include "catclust/oracles.hpp"
#include "doctest.h"
#include "support.hpp"

namespace catclust {
namespace {

using testing::RandomMatrix;
using testing::ToyMatrix;

std::vector<std::vector<WeightedColumn>> RandomSets(std::mt19937_64& rng,
                                                    int p, int m,
                                                    int alphabet) {
  std::uniform_int_distribution<int> size(1, 3);
  std::uniform_int_distribution<int> weight(1, 3);
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  std::vector<std::vector<WeightedColumn>> sets(p);
  for (auto& set : sets) {
    const int s = size(rng);
    for (int i = 0; i < s; ++i) {
      SymbolVector c(m);
      for (auto& x : c) x = static_cast<Symbol>(sym(rng));
      set.push_back({c, weight(rng)});
    }
  }
  return sets;
}

TEST_SUITE("column-outliers") {
  TEST_CASE("grouping identical columns") {
    const CategoricalMatrix same =
        CategoricalMatrix::FromColumns(Alphabet(2), {{0, 1}, {0, 1}, {0, 1}});
    const InitialClusters g1 = GroupColumns(same);
    CHECK(g1.size() == 1);
    CHECK(g1.weights == std::vector<int>{3});

    const InitialClusters g2 = GroupColumns(ToyMatrix());
    CHECK(g2.size() == 5);
    CHECK(g2.weights == std::vector<int>(5, 1));

    std::vector<SymbolVector> cols;
    const CategoricalMatrix toy = ToyMatrix();
    for (int j = 0; j < 5; ++j) cols.push_back(toy.ColumnVector(j));
    cols.insert(cols.begin() + 2, toy.ColumnVector(1));
    const InitialClusters g3 =
        GroupColumns(CategoricalMatrix::FromColumns(Alphabet(2), cols));
    CHECK(g3.size() == 5);
    CHECK(g3.weights == std::vector<int>{1, 2, 1, 1, 1});
    CHECK(g3.members[1] == std::vector<int>{1, 2});
  }

  TEST_CASE("restricted clustering examples") {
    for (SearchMode mode : {SearchMode::kDirect, SearchMode::kHypergraph}) {
      auto single = SolveRestricted({{{{0, 1, 1}, 1}}}, 0, 2, mode);
      REQUIRE(single.has_value());
      CHECK(single->center == SymbolVector{0, 1, 1});
      CHECK(single->cost == 0);

      auto two = SolveRestricted({{{{0, 0}, 3}}, {{{1, 1}, 1}}}, 2, 2, mode);
      REQUIRE(two.has_value());
      CHECK(two->center == SymbolVector{0, 0});
      CHECK(two->cost == 2);

      CHECK_FALSE(
          SolveRestricted({{{{0, 0}, 3}}, {{{1, 1}, 1}}}, 1, 2, mode));
    }
  }

  TEST_CASE("restricted clustering matches the oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const int p = 1 + trial % 3;
      const int m = 2 + trial % 4;
      const int budget = trial % 4;
      const auto sets = RandomSets(rng, p, m, 2);
      const auto oracle = OracleRestricted(sets, budget, 2);
      for (SearchMode mode : {SearchMode::kDirect, SearchMode::kHypergraph}) {
        const auto got = SolveRestricted(sets, budget, 2, mode);
        CAPTURE(trial);
        REQUIRE(got.has_value() == oracle.has_value());
        if (got) CHECK(*got == *oracle);
      }
    }
  }

  TEST_CASE("cost guesses") {
    CHECK(AdmitsCostGuesses({1, 1}, 2));
    CHECK(AdmitsCostGuesses({0, 0}, 2));
    CHECK_FALSE(AdmitsCostGuesses({0, 0}, 1));
    CHECK_FALSE(AdmitsCostGuesses({2, 1}, 2));
    CHECK(AdmitsCostGuesses({}, 0));
  }

  TEST_CASE("default trial count") {
    CHECK(DefaultTrials(0) == 1);
    CHECK(DefaultTrials(1) == 35);
    CHECK(DefaultTrials(2) == 252);
  }

  TEST_CASE("solver examples") {
    const CategoricalMatrix toy = ToyMatrix();
    auto each = SolveColumnOutliers(toy, 5, 0, 0);
    REQUIRE(each.has_value());
    CHECK(each->solution.cost == 0);
    CHECK(each->solution.clusters.size() == 5);

    auto planted = SolveColumnOutliers(toy, 2, 2, 1);
    REQUIRE(planted.has_value());
    const auto oracle = OracleColumnOutliers(toy, 2, 2, 1);
    REQUIRE(oracle.has_value());
    CHECK(oracle->cost == 2);
    CHECK(planted->solution.cost == 2);
    CHECK(VerifyClustering(toy, 2, 2, 1, planted->solution).ok());

    const CategoricalMatrix groups = CategoricalMatrix::FromColumns(
        Alphabet(2), {{0, 0}, {1, 1}, {0, 0}, {0, 1}, {1, 1}, {0, 1}});
    auto g = SolveColumnOutliers(groups, 3, 0, 0);
    REQUIRE(g.has_value());
    CHECK(g->solution.cost == 0);
    auto parts = g->solution.clusters;
    std::sort(parts.begin(), parts.end());
    CHECK(parts == std::vector<std::vector<int>>{{0, 2}, {1, 4}, {3, 5}});
  }

  TEST_CASE("exhaustive mode matches the oracle on random matrices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 4 + trial % 4;
      const int m = 3 + trial % 3;
      const CategoricalMatrix a = RandomMatrix(m, n, 2, rng);
      const int k = 1 + trial % 3;
      const int budget = trial % 4;
      const int l = trial % 3;
      const auto oracle = OracleColumnOutliers(a, k, budget, l);
      const auto got = SolveColumnOutliers(a, k, budget, l);
      CAPTURE(trial);
      REQUIRE(got.has_value() == oracle.has_value());
      if (!got) continue;
      CHECK(got->solution.cost == oracle->cost);
      CHECK(VerifyClustering(a, k, budget, l, got->solution).ok());
      CHECK(NormalizeWitness(a, got->solution).pass);
    }
  }

  TEST_CASE("column outliers thread count does not change the answer") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      const CategoricalMatrix a = RandomMatrix(5, 7, 2, rng);
      ColumnOutliersOptions one;
      one.threads = 1;
      ColumnOutliersOptions four;
      four.threads = 4;
      const auto x = SolveColumnOutliers(a, 2, 3, 2, one);
      const auto y = SolveColumnOutliers(a, 2, 3, 2, four);
      REQUIRE(x.has_value() == y.has_value());
      if (x) CHECK(x->solution == y->solution);
    }
  }

  TEST_CASE("trials mode is reproducible per seed") {
    PlantedSpec spec{5, 7, 2, 2, 1, 1, 4};
    const PlantedColumnOutliers p = GeneratePlantedColumnOutliers(spec);
    ColumnOutliersOptions opts;
    opts.exhaustive = false;
    opts.seed = 12;
    const auto a = SolveColumnOutliers(p.matrix, p.k, p.budget, p.outlier_cap,
                                       opts);
    const auto b = SolveColumnOutliers(p.matrix, p.k, p.budget, p.outlier_cap,
                                       opts);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->solution == b->solution);
    CHECK(a->plan.coloring.size() > 0);
  }

  TEST_CASE("normalization examples") {
    const CategoricalMatrix a = CategoricalMatrix::FromColumns(
        Alphabet(2), {{0, 0}, {0, 0}, {1, 1}, {1, 1}, {0, 1}});
    ClusteringSolution whole{{}, {{0, 1}, {2, 3, 4}}, {{0, 0}, {1, 1}}, 1};
    NormalizationReport r1 = NormalizeWitness(a, whole);
    CHECK(r1.pass);
    CHECK(r1.types.size() == 3);

    ClusteringSolution split_out{{1}, {{0}, {2, 3, 4}}, {{0, 0}, {1, 1}}, 1};
    NormalizationReport r2 = NormalizeWitness(a, split_out);
    CHECK(r2.pass);
    CHECK(std::count(r2.types.begin(), r2.types.end(),
                     InitialClusterType::kIV) == 1);

    ClusteringSolution split_two{{}, {{0, 4}, {1, 2, 3}}, {{0, 0}, {1, 1}}, 3};
    NormalizationReport r3 = NormalizeWitness(a, split_two);
    CHECK_FALSE(r3.pass);
    CHECK(std::count(r3.types.begin(), r3.types.end(),
                     InitialClusterType::kII) >= 1);
  }
}

}  // namespace
}  // namespace catclust

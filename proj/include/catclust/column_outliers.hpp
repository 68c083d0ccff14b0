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

#ifndef CATCLUST_COLUMN_OUTLIERS_HPP_
#define CATCLUST_COLUMN_OUTLIERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catclust/constrained.hpp"
#include "catclust/matrix.hpp"
#include "catclust/solution.hpp"

namespace catclust {

// Groups of identical columns, in order of first appearance.
struct InitialClusters {
  std::vector<SymbolVector> columns;
  std::vector<int> weights;
  std::vector<std::vector<int>> members;

  int size() const { return static_cast<int>(columns.size()); }
};

InitialClusters GroupColumns(const CategoricalMatrix& matrix);

struct WeightedColumn {
  SymbolVector column;
  int weight = 1;
};

struct RestrictedSolution {
  std::vector<int> chosen;  // index into each set
  SymbolVector center;
  std::int64_t cost = 0;

  bool operator==(const RestrictedSolution&) const = default;
};

// Picks one column from every set and a center minimizing the weighted
// Hamming cost; nullopt when that minimum exceeds `budget`. Ties go to the
// smaller center, then to smaller chosen indices.
std::optional<RestrictedSolution> SolveRestricted(
    const std::vector<std::vector<WeightedColumn>>& sets, int budget,
    int alphabet_size, SearchMode mode,
    double work_ceiling = DefaultWorkCeiling());

// Best choice per set for a fixed center.
RestrictedSolution EvaluateRestrictedCenter(
    const std::vector<std::vector<WeightedColumn>>& sets,
    const SymbolVector& center);

// True iff positive integers b_i >= costs[i] exist with sum <= budget.
bool AdmitsCostGuesses(const std::vector<std::int64_t>& costs, int budget);

struct CompositePlan {
  int split_cluster = -1;  // initial cluster whose tail went to outliers
  int split_count = 0;
  std::vector<int> coloring;               // empty in exhaustive mode
  std::vector<std::vector<int>> parts;     // initial clusters per composite
  std::vector<int> cost_guesses;
};

struct ColumnOutliersOptions {
  bool exhaustive = true;
  long trials = 0;  // 0 selects DefaultTrials(budget)
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::kDirect;  // for the restricted subproblems
  double work_ceiling = DefaultWorkCeiling();
  int threads = 0;
};

// ceil(e^{2B} ln(1/delta)).
long DefaultTrials(int budget, double delta = 0.01);

struct ColumnOutliersOutcome {
  ClusteringSolution solution;
  CompositePlan plan;
};

std::optional<ColumnOutliersOutcome> SolveColumnOutliers(
    const CategoricalMatrix& matrix, int k, int budget, int outlier_cap,
    const ColumnOutliersOptions& options = {});

enum class InitialClusterType { kI = 1, kII, kIII, kIV, kV };

const char* InitialClusterTypeName(InitialClusterType type);

struct NormalizationReport {
  bool pass = false;
  std::vector<InitialClusterType> types;  // one per initial cluster
  std::string detail;
};

NormalizationReport NormalizeWitness(const CategoricalMatrix& matrix,
                                     const ClusteringSolution& solution);

}  // namespace catclust

#endif  // CATCLUST_COLUMN_OUTLIERS_HPP_

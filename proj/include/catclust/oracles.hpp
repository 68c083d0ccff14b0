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

#ifndef CATCLUST_ORACLES_HPP_
#define CATCLUST_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "catclust/column_outliers.hpp"
#include "catclust/feature_selection.hpp"
#include "catclust/lowrank.hpp"
#include "catclust/matrix.hpp"
#include "catclust/solution.hpp"

namespace catclust {

// Exhaustive reference solvers. Single-threaded and deterministic; every
// one returns a minimum-cost witness with cost <= budget, or nullopt.

class OracleSizeExceeded : public WorkCeilingExceeded {
 public:
  using WorkCeilingExceeded::WorkCeilingExceeded;
};

struct OracleLimits {
  // Search nodes (or enumerated candidates) visited before giving up.
  double max_states = 1e8;
};

// Most frequent symbol per row over `columns`; ties go to the smaller
// symbol.
SymbolVector PluralityCenter(const CategoricalMatrix& matrix,
                             std::span<const int> columns);

// Row subsets of size <= l, then partitions of the columns into <= k
// parts with plurality centers.
std::optional<FeatureSelectionSolution> OracleFeatureSelection(
    const FeatureSelectionInstance& instance, const OracleLimits& limits = {});

// Column subsets of size <= l, then every assignment of the remaining
// columns to the k labeled slots; centers chosen row by row from R_h.
std::optional<ClusteringSolution> OracleConstrained(
    const ConstrainedInstance& instance, const OracleLimits& limits = {});

// Column subsets of size <= l, then partitions into <= k parts with
// plurality centers.
std::optional<ClusteringSolution> OracleColumnOutliers(
    const CategoricalMatrix& matrix, int k, int budget, int outlier_cap,
    const OracleLimits& limits = {});

// No outliers: every multiset of k centers from the full string space,
// each column joining its nearest center.
std::optional<ClusteringSolution> OracleVanillaClustering(
    const CategoricalMatrix& matrix, int k, int budget,
    const OracleLimits& limits = {});

// Every center in the full string space times every selection. Same tie
// rule as SolveRestricted.
std::optional<RestrictedSolution> OracleRestricted(
    const std::vector<std::vector<WeightedColumn>>& sets, int budget,
    int alphabet_size, const OracleLimits& limits = {});

// Every generator matrix U (m x r); each column takes its best coefficient
// vector and the l worst columns become outliers. The witness uses the
// slot layout of ClusterCoefficients.
std::optional<ClusteringSolution> OracleLowRank(
    const LowRankInstance& instance, const OracleLimits& limits = {});

}  // namespace catclust

#endif  // CATCLUST_ORACLES_HPP_

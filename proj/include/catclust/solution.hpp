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

#ifndef CATCLUST_SOLUTION_HPP_
#define CATCLUST_SOLUTION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "catclust/matrix.hpp"
#include "catclust/relations.hpp"

namespace catclust {

// Indices are 0-based. Cluster slots may be empty; every slot has a center.
struct ClusteringSolution {
  std::vector<int> outliers;
  std::vector<std::vector<int>> clusters;
  std::vector<SymbolVector> centers;
  std::int64_t cost = 0;

  bool operator==(const ClusteringSolution&) const = default;
};

// Rows are the features; removed features are dropped before clustering
// the columns. Centers cover the kept rows in their original order.
struct FeatureSelectionSolution {
  std::vector<int> removed_features;
  std::vector<std::vector<int>> point_clusters;
  std::vector<SymbolVector> centers;
  std::int64_t cost = 0;

  bool operator==(const FeatureSelectionSolution&) const = default;
};

struct ConstrainedInstance {
  CategoricalMatrix matrix;
  int k;
  int budget;
  int outlier_cap;
  RelationSet relations;

  // Throws ContractViolation when the fields are inconsistent.
  void Validate() const;
};

enum class VerifyCode {
  kPass,
  kMalformed,
  kTooManyOutliers,
  kTooManyClusters,
  kNotPartition,
  kRelationViolated,
  kCostMismatch,
  kOverBudget,
};

const char* VerifyCodeName(VerifyCode code);

struct Verdict {
  VerifyCode code = VerifyCode::kPass;
  std::string detail;

  bool ok() const { return code == VerifyCode::kPass; }
  static Verdict Fail(VerifyCode code, std::string detail) {
    return Verdict{code, std::move(detail)};
  }
};

// Sum of Hamming distances from clustered columns to their centers.
std::int64_t SolutionCost(const CategoricalMatrix& matrix,
                          const ClusteringSolution& solution);

// Decision predicate of clustering with column outliers: at most
// `outlier_cap` outliers, at most k slots partitioning the rest, recorded
// cost matching the recomputed one, cost within budget.
Verdict VerifyClustering(const CategoricalMatrix& matrix, int k, int budget,
                         int outlier_cap, const ClusteringSolution& solution);

// VerifyClustering plus the per-row relation constraint on the centers.
Verdict VerifyConstrained(const ConstrainedInstance& instance,
                          const ClusteringSolution& solution);

}  // namespace catclust

#endif  // CATCLUST_SOLUTION_HPP_

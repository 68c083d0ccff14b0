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

#include "catclust/solution.hpp"

#include <string>

namespace catclust {

void ConstrainedInstance::Validate() const {
  if (k < 1) throw ContractViolation("k must be positive");
  if (budget < 0) throw ContractViolation("budget must be non-negative");
  if (outlier_cap < 0 || outlier_cap >= matrix.cols()) {
    throw ContractViolation("outlier cap must lie in [0, n)");
  }
  if (relations.arity() != k) {
    throw ContractViolation("relation arity " +
                            std::to_string(relations.arity()) +
                            " does not match k = " + std::to_string(k));
  }
  if (relations.rows() != matrix.rows()) {
    throw ContractViolation("expected one relation per matrix row (" +
                            std::to_string(matrix.rows()) + "), got " +
                            std::to_string(relations.rows()));
  }
  if (relations.MaxSymbol() >= matrix.alphabet().size()) {
    throw ContractViolation("relation symbol outside the alphabet");
  }
}

const char* VerifyCodeName(VerifyCode code) {
  switch (code) {
    case VerifyCode::kPass: return "pass";
    case VerifyCode::kMalformed: return "malformed";
    case VerifyCode::kTooManyOutliers: return "too-many-outliers";
    case VerifyCode::kTooManyClusters: return "too-many-clusters";
    case VerifyCode::kNotPartition: return "not-partition";
    case VerifyCode::kRelationViolated: return "relation-violated";
    case VerifyCode::kCostMismatch: return "cost-mismatch";
    case VerifyCode::kOverBudget: return "over-budget";
  }
  return "unknown";
}

std::int64_t SolutionCost(const CategoricalMatrix& matrix,
                          const ClusteringSolution& solution) {
  if (solution.centers.size() != solution.clusters.size()) {
    throw InvalidSolution("one center per cluster slot is required");
  }
  std::int64_t cost = 0;
  for (size_t i = 0; i < solution.clusters.size(); ++i) {
    if (static_cast<int>(solution.centers[i].size()) != matrix.rows()) {
      throw InvalidSolution("center length differs from the row count");
    }
    for (int j : solution.clusters[i]) {
      if (j < 0 || j >= matrix.cols()) {
        throw InvalidSolution("column index " + std::to_string(j) +
                              " out of range");
      }
      cost += Hamming(matrix.Column(j), solution.centers[i]);
    }
  }
  return cost;
}

Verdict VerifyClustering(const CategoricalMatrix& matrix, int k, int budget,
                         int outlier_cap, const ClusteringSolution& solution) {
  const int n = matrix.cols();
  if (solution.centers.size() != solution.clusters.size()) {
    return Verdict::Fail(VerifyCode::kMalformed,
                         "center count differs from cluster count");
  }
  for (const auto& c : solution.centers) {
    if (static_cast<int>(c.size()) != matrix.rows()) {
      return Verdict::Fail(VerifyCode::kMalformed, "center of wrong length");
    }
  }
  if (static_cast<int>(solution.outliers.size()) > outlier_cap) {
    return Verdict::Fail(VerifyCode::kTooManyOutliers,
                         std::to_string(solution.outliers.size()) +
                             " outliers exceed cap " +
                             std::to_string(outlier_cap));
  }
  if (static_cast<int>(solution.clusters.size()) > k) {
    return Verdict::Fail(VerifyCode::kTooManyClusters,
                         std::to_string(solution.clusters.size()) +
                             " cluster slots exceed k = " + std::to_string(k));
  }
  std::vector<int> seen(n, 0);
  auto mark = [&](int j) {
    if (j < 0 || j >= n) return false;
    return ++seen[j] == 1;
  };
  for (int j : solution.outliers) {
    if (!mark(j)) {
      return Verdict::Fail(VerifyCode::kNotPartition,
                           "outlier index invalid or repeated");
    }
  }
  for (const auto& cluster : solution.clusters) {
    for (int j : cluster) {
      if (!mark(j)) {
        return Verdict::Fail(VerifyCode::kNotPartition,
                             "column " + std::to_string(j) +
                                 " invalid or in two parts");
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (seen[j] == 0) {
      return Verdict::Fail(VerifyCode::kNotPartition,
                           "column " + std::to_string(j) + " not covered");
    }
  }
  const std::int64_t cost = SolutionCost(matrix, solution);
  if (cost != solution.cost) {
    return Verdict::Fail(VerifyCode::kCostMismatch,
                         "recorded cost " + std::to_string(solution.cost) +
                             " but recomputed " + std::to_string(cost));
  }
  if (cost > budget) {
    return Verdict::Fail(VerifyCode::kOverBudget,
                         "cost " + std::to_string(cost) + " exceeds budget " +
                             std::to_string(budget));
  }
  return Verdict{};
}

Verdict VerifyConstrained(const ConstrainedInstance& instance,
                          const ClusteringSolution& solution) {
  const CategoricalMatrix& a = instance.matrix;
  if (static_cast<int>(solution.centers.size()) != instance.k ||
      static_cast<int>(solution.clusters.size()) != instance.k) {
    return Verdict::Fail(VerifyCode::kMalformed,
                         "constrained solutions carry exactly k center slots");
  }
  Verdict v = VerifyClustering(a, instance.k, instance.budget,
                               instance.outlier_cap, solution);
  if (!v.ok() && v.code != VerifyCode::kOverBudget &&
      v.code != VerifyCode::kCostMismatch) {
    return v;
  }
  SymbolVector tuple(instance.k);
  for (int h = 0; h < a.rows(); ++h) {
    for (int j = 0; j < instance.k; ++j) tuple[j] = solution.centers[j][h];
    if (!instance.relations.Contains(h, tuple)) {
      return Verdict::Fail(VerifyCode::kRelationViolated,
                           "centers violate the relation of row " +
                               std::to_string(h + 1));
    }
  }
  return v;
}

}  // namespace catclust

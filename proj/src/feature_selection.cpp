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

#include "catclust/feature_selection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace catclust {

void FeatureSelectionInstance::Validate() const {
  if (k < 1) throw ContractViolation("k must be positive");
  if (budget < 0) throw ContractViolation("budget must be non-negative");
  if (outlier_cap < 0 || outlier_cap >= matrix.rows()) {
    throw ContractViolation("removable features must lie in [0, m)");
  }
}

PatternTable BuildPatternTable(int alphabet_size, int k) {
  PatternTable table;
  table.strings = AllStrings(alphabet_size, k);
  table.z.assign(k, SymbolVector(table.strings.size()));
  for (size_t p = 0; p < table.strings.size(); ++p) {
    for (int j = 0; j < k; ++j) table.z[j][p] = table.strings[p][j];
  }
  return table;
}

ConstrainedInstance BuildReduction(const FeatureSelectionInstance& instance,
                                   double work_ceiling) {
  instance.Validate();
  const int sigma = instance.matrix.alphabet().size();
  const double slots = std::pow(static_cast<double>(sigma), instance.k);
  if (slots > work_ceiling || slots > 1e7) {
    throw WorkCeilingExceeded("reduction needs " + std::to_string(slots) +
                              " center slots");
  }
  PatternTable table = BuildPatternTable(sigma, instance.k);
  const int k_reduced = static_cast<int>(table.strings.size());
  CategoricalMatrix a = Transpose(instance.matrix);
  const int rows = a.rows();
  return ConstrainedInstance{std::move(a), k_reduced, instance.budget,
                             instance.outlier_cap,
                             RelationSet::Uniform(k_reduced, table.z, rows)};
}

std::int64_t FeatureSelectionCost(const CategoricalMatrix& matrix,
                                  const FeatureSelectionSolution& solution) {
  if (solution.centers.size() != solution.point_clusters.size()) {
    throw InvalidSolution("one center per point cluster is required");
  }
  CategoricalMatrix kept = matrix.WithoutRows(solution.removed_features);
  std::int64_t cost = 0;
  for (size_t t = 0; t < solution.point_clusters.size(); ++t) {
    if (static_cast<int>(solution.centers[t].size()) != kept.rows()) {
      throw InvalidSolution("center length differs from the kept rows");
    }
    for (int j : solution.point_clusters[t]) {
      if (j < 0 || j >= kept.cols()) {
        throw InvalidSolution("point index out of range");
      }
      cost += Hamming(kept.Column(j), solution.centers[t]);
    }
  }
  return cost;
}

FeatureSelectionSolution MapBack(const FeatureSelectionInstance& instance,
                                 const ConstrainedInstance& reduced,
                                 const ClusteringSolution& solution) {
  const int m = instance.matrix.rows();
  const int n = instance.matrix.cols();
  const int sigma = instance.matrix.alphabet().size();
  PatternTable table = BuildPatternTable(sigma, instance.k);
  if (static_cast<int>(solution.centers.size()) != reduced.k ||
      static_cast<size_t>(reduced.k) != table.strings.size()) {
    throw InvalidSolution("solution does not match the reduced instance");
  }
  std::map<SymbolVector, int> string_index;
  for (int t = 0; t < instance.k; ++t) {
    string_index.emplace(table.z[t], t);
  }

  FeatureSelectionSolution out;
  out.removed_features = solution.outliers;
  std::sort(out.removed_features.begin(), out.removed_features.end());
  out.point_clusters.resize(instance.k);
  SymbolVector tuple(reduced.k);
  for (int j = 0; j < n; ++j) {
    for (int p = 0; p < reduced.k; ++p) tuple[p] = solution.centers[p][j];
    auto it = string_index.find(tuple);
    if (it == string_index.end()) {
      throw InvalidSolution("center tuple of data point " +
                            std::to_string(j + 1) + " matches no pattern");
    }
    out.point_clusters[it->second].push_back(j);
  }

  std::vector<int> feature_cluster(m, -1);
  for (size_t p = 0; p < solution.clusters.size(); ++p) {
    for (int f : solution.clusters[p]) feature_cluster[f] = static_cast<int>(p);
  }
  std::vector<bool> removed(m, false);
  for (int f : out.removed_features) removed[f] = true;
  out.centers.assign(instance.k, SymbolVector());
  for (int f = 0; f < m; ++f) {
    if (removed[f]) continue;
    if (feature_cluster[f] < 0) {
      throw InvalidSolution("feature " + std::to_string(f + 1) +
                            " is neither removed nor clustered");
    }
    const SymbolVector& s = table.strings[feature_cluster[f]];
    for (int t = 0; t < instance.k; ++t) out.centers[t].push_back(s[t]);
  }
  out.cost = FeatureSelectionCost(instance.matrix, out);
  return out;
}

Verdict VerifyFeatureSelection(const FeatureSelectionInstance& instance,
                               const FeatureSelectionSolution& solution) {
  const int m = instance.matrix.rows();
  const int n = instance.matrix.cols();
  if (static_cast<int>(solution.removed_features.size()) >
      instance.outlier_cap) {
    return Verdict::Fail(VerifyCode::kTooManyOutliers,
                         "too many removed features");
  }
  std::vector<bool> removed(m, false);
  for (int f : solution.removed_features) {
    if (f < 0 || f >= m || removed[f]) {
      return Verdict::Fail(VerifyCode::kMalformed,
                           "removed feature invalid or repeated");
    }
    removed[f] = true;
  }
  if (static_cast<int>(solution.point_clusters.size()) > instance.k) {
    return Verdict::Fail(VerifyCode::kTooManyClusters,
                         "more than k point clusters");
  }
  if (solution.centers.size() != solution.point_clusters.size()) {
    return Verdict::Fail(VerifyCode::kMalformed,
                         "center count differs from cluster count");
  }
  const int kept = m - static_cast<int>(solution.removed_features.size());
  for (const auto& c : solution.centers) {
    if (static_cast<int>(c.size()) != kept) {
      return Verdict::Fail(VerifyCode::kMalformed, "center of wrong length");
    }
  }
  std::vector<int> seen(n, 0);
  for (const auto& cluster : solution.point_clusters) {
    for (int j : cluster) {
      if (j < 0 || j >= n || ++seen[j] > 1) {
        return Verdict::Fail(VerifyCode::kNotPartition,
                             "point invalid or in two clusters");
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (seen[j] == 0) {
      return Verdict::Fail(VerifyCode::kNotPartition,
                           "point " + std::to_string(j) + " not clustered");
    }
  }
  const std::int64_t cost = FeatureSelectionCost(instance.matrix, solution);
  if (cost != solution.cost) {
    return Verdict::Fail(VerifyCode::kCostMismatch,
                         "recorded cost differs from recomputed cost");
  }
  if (cost > instance.budget) {
    return Verdict::Fail(VerifyCode::kOverBudget, "cost exceeds budget");
  }
  return Verdict{};
}

std::optional<FeatureSelectionOutcome> SolveFeatureSelection(
    const FeatureSelectionInstance& instance, const SolverOptions& options) {
  ConstrainedInstance reduced = BuildReduction(instance, options.work_ceiling);
  auto outcome = SolveConstrained(reduced, options);
  if (!outcome) return std::nullopt;
  FeatureSelectionOutcome out;
  out.reduced_solution = outcome->solution;
  out.solution = MapBack(instance, reduced, outcome->solution);
  return out;
}

}  // namespace catclust

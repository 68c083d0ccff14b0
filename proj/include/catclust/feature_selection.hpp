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

#ifndef CATCLUST_FEATURE_SELECTION_HPP_
#define CATCLUST_FEATURE_SELECTION_HPP_

#include <optional>
#include <vector>

#include "catclust/constrained.hpp"
#include "catclust/matrix.hpp"
#include "catclust/solution.hpp"

namespace catclust {

// Rows are features, columns are data points. Up to outlier_cap rows may be
// removed before the columns are split into at most k clusters.
struct FeatureSelectionInstance {
  CategoricalMatrix matrix;
  int k;
  int budget;
  int outlier_cap;

  void Validate() const;
};

// strings: every length-k string over the alphabet in lexicographic order.
// z[j][p] is the j-th symbol of strings[p].
struct PatternTable {
  std::vector<SymbolVector> strings;
  std::vector<SymbolVector> z;
};

PatternTable BuildPatternTable(int alphabet_size, int k);

// Constrained instance over the transposed matrix with |alphabet|^k center
// slots; every row relation is {z_1, ..., z_k}.
ConstrainedInstance BuildReduction(const FeatureSelectionInstance& instance,
                                   double work_ceiling = DefaultWorkCeiling());

// Translates a verified solution of the reduced instance back.
FeatureSelectionSolution MapBack(const FeatureSelectionInstance& instance,
                                 const ConstrainedInstance& reduced,
                                 const ClusteringSolution& solution);

std::int64_t FeatureSelectionCost(const CategoricalMatrix& matrix,
                                  const FeatureSelectionSolution& solution);

Verdict VerifyFeatureSelection(const FeatureSelectionInstance& instance,
                               const FeatureSelectionSolution& solution);

struct FeatureSelectionOutcome {
  FeatureSelectionSolution solution;
  ClusteringSolution reduced_solution;
};

std::optional<FeatureSelectionOutcome> SolveFeatureSelection(
    const FeatureSelectionInstance& instance,
    const SolverOptions& options = {});

}  // namespace catclust

#endif  // CATCLUST_FEATURE_SELECTION_HPP_

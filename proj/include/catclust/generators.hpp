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

#ifndef CATCLUST_GENERATORS_HPP_
#define CATCLUST_GENERATORS_HPP_

#include <cstdint>

#include "catclust/feature_selection.hpp"
#include "catclust/matrix.hpp"
#include "catclust/solution.hpp"

namespace catclust {

struct PlantedSpec {
  int m = 4;
  int n = 6;
  int k = 2;
  int alphabet = 2;
  int noise_edits = 0;
  int outlier_count = 0;
  std::uint64_t seed = 0;
};

struct PlantedColumnOutliers {
  CategoricalMatrix matrix;
  int k;
  int budget;
  int outlier_cap;
  ClusteringSolution planted;
};

// n - outlier_count inlier columns copied from k random centers (every
// center used when possible), exactly noise_edits single-cell edits on
// distinct inlier cells, then outlier_count random columns appended.
// budget = noise_edits, outlier_cap = outlier_count.
PlantedColumnOutliers GeneratePlantedColumnOutliers(const PlantedSpec& spec);

struct PlantedFeatureSelection {
  FeatureSelectionInstance instance;
  FeatureSelectionSolution planted;
};

// Columns copied from k random centers with noise on the relevant rows;
// outlier_count random rows are then overwritten with random symbols.
PlantedFeatureSelection GeneratePlantedFeatureSelection(
    const PlantedSpec& spec);

struct RandomConstrainedSpec {
  int m = 4;
  int n = 5;
  int k = 2;
  int alphabet = 2;
  int budget = 1;
  int outlier_cap = 0;
  int max_relation_size = 4;
  std::uint64_t seed = 0;
};

// Uniform random matrix and per-row relations of 1..max_relation_size
// distinct random tuples.
ConstrainedInstance GenerateRandomConstrained(const RandomConstrainedSpec& spec);

}  // namespace catclust

#endif  // CATCLUST_GENERATORS_HPP_

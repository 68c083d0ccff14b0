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

#include "catclust/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace catclust {

namespace {

void CheckSpec(const PlantedSpec& spec) {
  if (spec.m < 1 || spec.n < 1 || spec.k < 1) {
    throw ContractViolation("planted dimensions must be positive");
  }
  if (spec.noise_edits < 0 || spec.outlier_count < 0) {
    throw ContractViolation("noise and outlier counts must be non-negative");
  }
  if (spec.noise_edits > 0 && spec.alphabet < 2) {
    throw ContractViolation("noise needs at least two symbols");
  }
}

Symbol Other(Symbol s, int alphabet, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, alphabet - 1);
  return static_cast<Symbol>((s + d(rng)) % alphabet);
}

SymbolVector RandomVector(int len, int alphabet, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, alphabet - 1);
  SymbolVector v(len);
  for (auto& s : v) s = static_cast<Symbol>(d(rng));
  return v;
}

// Labels for `count` points: the first min(k, count) points take every
// label once, the rest are uniform; then shuffled.
std::vector<int> RandomLabels(int count, int k, std::mt19937_64& rng) {
  std::vector<int> labels(count);
  std::uniform_int_distribution<int> d(0, k - 1);
  for (int i = 0; i < count; ++i) labels[i] = i < k ? i : d(rng);
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

// Picks `count` distinct cells among `cols` x `rows`; returns (col, row).
std::vector<std::pair<int, int>> DistinctCells(int cols, int rows, int count,
                                               std::mt19937_64& rng) {
  if (count > cols * rows) {
    throw ContractViolation("more noise edits than editable cells");
  }
  std::vector<int> cells(cols * rows);
  std::iota(cells.begin(), cells.end(), 0);
  std::shuffle(cells.begin(), cells.end(), rng);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < count; ++i) {
    out.emplace_back(cells[i] / rows, cells[i] % rows);
  }
  return out;
}

}  // namespace

PlantedColumnOutliers GeneratePlantedColumnOutliers(const PlantedSpec& spec) {
  CheckSpec(spec);
  if (spec.outlier_count >= spec.n) {
    throw ContractViolation("outlier count must be below n");
  }
  std::mt19937_64 rng(spec.seed);
  const int inliers = spec.n - spec.outlier_count;
  std::vector<SymbolVector> centers;
  for (int i = 0; i < spec.k; ++i) {
    centers.push_back(RandomVector(spec.m, spec.alphabet, rng));
  }
  std::vector<int> labels = RandomLabels(inliers, spec.k, rng);
  std::vector<SymbolVector> cols;
  for (int j = 0; j < inliers; ++j) cols.push_back(centers[labels[j]]);
  for (auto [c, r] : DistinctCells(inliers, spec.m, spec.noise_edits, rng)) {
    cols[c][r] = Other(cols[c][r], spec.alphabet, rng);
  }
  for (int j = 0; j < spec.outlier_count; ++j) {
    cols.push_back(RandomVector(spec.m, spec.alphabet, rng));
  }
  CategoricalMatrix matrix =
      CategoricalMatrix::FromColumns(Alphabet(spec.alphabet), cols);
  ClusteringSolution planted;
  planted.clusters.resize(spec.k);
  planted.centers = centers;
  for (int j = 0; j < inliers; ++j) planted.clusters[labels[j]].push_back(j);
  for (int j = inliers; j < spec.n; ++j) planted.outliers.push_back(j);
  planted.cost = SolutionCost(matrix, planted);
  return PlantedColumnOutliers{std::move(matrix), spec.k, spec.noise_edits,
                               spec.outlier_count, std::move(planted)};
}

PlantedFeatureSelection GeneratePlantedFeatureSelection(
    const PlantedSpec& spec) {
  CheckSpec(spec);
  if (spec.outlier_count >= spec.m) {
    throw ContractViolation("irrelevant row count must be below m");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<int> rows(spec.m);
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::vector<int> irrelevant(rows.begin(), rows.begin() + spec.outlier_count);
  std::sort(irrelevant.begin(), irrelevant.end());
  std::vector<int> relevant;
  for (int h = 0; h < spec.m; ++h) {
    if (!std::binary_search(irrelevant.begin(), irrelevant.end(), h)) {
      relevant.push_back(h);
    }
  }

  std::vector<SymbolVector> centers;
  for (int i = 0; i < spec.k; ++i) {
    centers.push_back(RandomVector(spec.m, spec.alphabet, rng));
  }
  std::vector<int> labels = RandomLabels(spec.n, spec.k, rng);
  std::vector<SymbolVector> cols;
  for (int j = 0; j < spec.n; ++j) cols.push_back(centers[labels[j]]);
  const int kept = static_cast<int>(relevant.size());
  for (auto [c, r] : DistinctCells(spec.n, kept, spec.noise_edits, rng)) {
    const int h = relevant[r];
    cols[c][h] = Other(cols[c][h], spec.alphabet, rng);
  }
  std::uniform_int_distribution<int> sym(0, spec.alphabet - 1);
  for (int h : irrelevant) {
    for (auto& col : cols) col[h] = static_cast<Symbol>(sym(rng));
  }
  CategoricalMatrix matrix =
      CategoricalMatrix::FromColumns(Alphabet(spec.alphabet), cols);

  FeatureSelectionSolution planted;
  planted.removed_features = irrelevant;
  planted.point_clusters.resize(spec.k);
  for (int j = 0; j < spec.n; ++j) {
    planted.point_clusters[labels[j]].push_back(j);
  }
  for (const auto& c : centers) {
    SymbolVector kept_center;
    for (int h : relevant) kept_center.push_back(c[h]);
    planted.centers.push_back(std::move(kept_center));
  }
  planted.cost = FeatureSelectionCost(matrix, planted);
  return PlantedFeatureSelection{
      FeatureSelectionInstance{std::move(matrix), spec.k, spec.noise_edits,
                               spec.outlier_count},
      std::move(planted)};
}

ConstrainedInstance GenerateRandomConstrained(
    const RandomConstrainedSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> sym(0, spec.alphabet - 1);
  std::vector<Symbol> cells(static_cast<size_t>(spec.m) * spec.n);
  for (auto& c : cells) c = static_cast<Symbol>(sym(rng));
  double universe = 1;
  for (int j = 0; j < spec.k; ++j) universe *= spec.alphabet;
  const int max_size = static_cast<int>(
      std::min<double>(spec.max_relation_size, universe));
  std::uniform_int_distribution<int> size(1, std::max(1, max_size));
  std::vector<std::vector<SymbolVector>> relations;
  for (int h = 0; h < spec.m; ++h) {
    std::set<SymbolVector> tuples;
    const int want = size(rng);
    while (static_cast<int>(tuples.size()) < want) {
      tuples.insert(RandomVector(spec.k, spec.alphabet, rng));
    }
    relations.emplace_back(tuples.begin(), tuples.end());
  }
  return ConstrainedInstance{
      CategoricalMatrix(Alphabet(spec.alphabet), spec.m, spec.n,
                        std::move(cells)),
      spec.k, spec.budget, spec.outlier_cap,
      RelationSet(spec.k, relations)};
}

}  // namespace catclust

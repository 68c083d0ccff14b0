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

#ifndef CATCLUST_CONSTRAINED_HPP_
#define CATCLUST_CONSTRAINED_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "catclust/matrix.hpp"
#include "catclust/relations.hpp"
#include "catclust/solution.hpp"

namespace catclust {

enum class SearchMode { kDirect, kHypergraph };

const char* SearchModeName(SearchMode mode);

struct SolverOptions {
  SearchMode mode = SearchMode::kDirect;
  double work_ceiling = DefaultWorkCeiling();
  int threads = 0;  // 0 = all available cores
};

// Marks a center slot that is not tied to any column of the matrix.
inline constexpr int kFreeSlot = -1;

// A k-tuple of m-long vectors stored row by row: rows[h * k + j] is the
// value of the j-th vector at row h.
struct CandidateTuple {
  int k = 0;
  int m = 0;
  std::vector<Symbol> rows;
  std::vector<int> deviated;        // rows rewritten by refinement
  std::vector<int> source_columns;  // matrix column per slot, or kFreeSlot

  std::span<const Symbol> Row(int h) const {
    return std::span<const Symbol>(rows).subspan(
        static_cast<size_t>(h) * k, k);
  }
  SymbolVector Column(int j) const;
  std::vector<SymbolVector> Columns() const;
};

// Builds the tuple whose slot j copies column slots[j] (or is free when
// slots[j] == kFreeSlot). Rows whose tuple is not in the relation are
// rewritten to the smallest relation tuple agreeing with the column-backed
// slots, or to the smallest tuple overall when none agrees; the latter rows
// are the deviated ones. Returns nullopt when more than `budget` rows
// deviate.
std::optional<CandidateTuple> RefineTuple(const CategoricalMatrix& matrix,
                                          std::span<const int> slots,
                                          const RelationSet& relations,
                                          int budget);

// Fixed centers: the outlier_cap columns farthest from every center become
// outliers (ties: larger index), the rest join their nearest center (ties:
// smaller slot).
ClusteringSolution GreedyAssign(const CategoricalMatrix& matrix,
                                const std::vector<SymbolVector>& centers,
                                int outlier_cap);

struct ConstrainedOutcome {
  ClusteringSolution solution;
  CandidateTuple generator;       // refined tuple the centers were edited from
  std::vector<int> edited_rows;   // rows where the centers differ from it
  std::int64_t candidates = 0;    // center tuples evaluated
};

// Work estimate n^k * sum_{b<=B} C(m, b) * max|R_h|^B.
double ConstrainedWorkBound(const ConstrainedInstance& instance);

// Minimum-cost solution with cost <= budget, or nullopt.
std::optional<ConstrainedOutcome> SolveConstrained(
    const ConstrainedInstance& instance, const SolverOptions& options = {});

}  // namespace catclust

#endif  // CATCLUST_CONSTRAINED_HPP_

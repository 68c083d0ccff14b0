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

#ifndef CATCLUST_LOWRANK_HPP_
#define CATCLUST_LOWRANK_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "catclust/constrained.hpp"
#include "catclust/matrix.hpp"
#include "catclust/solution.hpp"

namespace catclust {

enum class RankSemantics { kField, kBoolean };

// Matrix over {0..p-1}, p = alphabet size. Field semantics need p prime
// (at most 7); Boolean semantics need p = 2.
struct LowRankInstance {
  CategoricalMatrix matrix;
  int rank;
  int budget;
  int outlier_cap;
  RankSemantics semantics;

  void Validate() const;
};

// Coefficient vector of every center slot: GF(p)^r in lexicographic order
// for the field case, subset indicators ordered by bitmask (bit i-1 for
// element i) for the Boolean case.
std::vector<SymbolVector> ClusterCoefficients(const LowRankInstance& instance);

ConstrainedInstance BuildLowRankRelations(
    const LowRankInstance& instance,
    double work_ceiling = DefaultWorkCeiling());

struct LowRankFactors {
  CategoricalMatrix approx;     // B
  CategoricalMatrix outliers;   // C
  CategoricalMatrix generators; // U, m x r
  std::vector<SymbolVector> coefficients;  // column j of V, length r
};

LowRankFactors ReconstructFactors(const LowRankInstance& instance,
                                  const ClusteringSolution& solution);

// Number of nonzero entries of A - B - C (field) or A xor B xor C (Boolean).
std::int64_t ResidualWeight(const LowRankInstance& instance,
                            const CategoricalMatrix& approx,
                            const CategoricalMatrix& outliers);

// U * V under the instance semantics.
CategoricalMatrix MultiplyFactors(const LowRankInstance& instance,
                                  const CategoricalMatrix& generators,
                                  const std::vector<SymbolVector>& coeffs);

// Rank over GF(p) by Gaussian elimination.
int FieldRank(const CategoricalMatrix& matrix, int p);

struct LowRankOutcome {
  ClusteringSolution reduced_solution;
  LowRankFactors factors;
};

std::optional<LowRankOutcome> SolveLowRank(const LowRankInstance& instance,
                                           const SolverOptions& options = {});

}  // namespace catclust

#endif  // CATCLUST_LOWRANK_HPP_

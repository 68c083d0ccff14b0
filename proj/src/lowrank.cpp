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

#include "catclust/lowrank.hpp"

#include <cmath>
#include <string>

namespace catclust {

namespace {

bool IsSmallPrime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

// Value of cluster slot `coeff` at a row whose generator row is u.
Symbol Combine(const LowRankInstance& instance, const SymbolVector& coeff,
               const SymbolVector& u) {
  const int p = instance.matrix.alphabet().size();
  int v = 0;
  for (size_t a = 0; a < u.size(); ++a) {
    if (instance.semantics == RankSemantics::kField) {
      v = (v + coeff[a] * u[a]) % p;
    } else {
      v |= coeff[a] & u[a];
    }
  }
  return static_cast<Symbol>(v);
}

std::vector<SymbolVector> RelationTuples(const LowRankInstance& instance,
                                         std::vector<SymbolVector>* gens) {
  const auto coeffs = ClusterCoefficients(instance);
  const int p = instance.matrix.alphabet().size();
  std::vector<SymbolVector> tuples;
  for (const SymbolVector& u : AllStrings(p, instance.rank)) {
    SymbolVector t;
    for (const auto& c : coeffs) t.push_back(Combine(instance, c, u));
    tuples.push_back(std::move(t));
    if (gens != nullptr) gens->push_back(u);
  }
  return tuples;
}

}  // namespace

void LowRankInstance::Validate() const {
  const int p = matrix.alphabet().size();
  if (rank < 1) throw ContractViolation("rank must be positive");
  if (budget < 0) throw ContractViolation("budget must be non-negative");
  if (outlier_cap < 0 || outlier_cap >= matrix.cols()) {
    throw ContractViolation("outlier cap must lie in [0, n)");
  }
  if (semantics == RankSemantics::kBoolean && p != 2) {
    throw ContractViolation("Boolean rank needs a binary matrix");
  }
  if (semantics == RankSemantics::kField && !IsSmallPrime(p)) {
    throw ContractViolation("field size must be a prime <= 7, got " +
                            std::to_string(p));
  }
}

std::vector<SymbolVector> ClusterCoefficients(const LowRankInstance& instance) {
  const int r = instance.rank;
  if (instance.semantics == RankSemantics::kField) {
    return AllStrings(instance.matrix.alphabet().size(), r);
  }
  std::vector<SymbolVector> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    SymbolVector s(r);
    for (int a = 0; a < r; ++a) s[a] = (mask >> a) & 1;
    out.push_back(std::move(s));
  }
  return out;
}

ConstrainedInstance BuildLowRankRelations(const LowRankInstance& instance,
                                          double work_ceiling) {
  instance.Validate();
  const int p = instance.matrix.alphabet().size();
  const double slots = instance.semantics == RankSemantics::kField
                           ? std::pow(p, instance.rank)
                           : std::pow(2.0, instance.rank);
  if (slots > work_ceiling || slots > 1e6) {
    throw WorkCeilingExceeded("low-rank reduction needs " +
                              std::to_string(slots) + " center slots");
  }
  const int k = static_cast<int>(slots);
  return ConstrainedInstance{
      instance.matrix, k, instance.budget, instance.outlier_cap,
      RelationSet::Uniform(k, RelationTuples(instance, nullptr),
                           instance.matrix.rows())};
}

CategoricalMatrix MultiplyFactors(const LowRankInstance& instance,
                                  const CategoricalMatrix& generators,
                                  const std::vector<SymbolVector>& coeffs) {
  const int m = generators.rows();
  const int n = static_cast<int>(coeffs.size());
  std::vector<Symbol> cells(static_cast<size_t>(m) * n);
  for (int h = 0; h < m; ++h) {
    auto row = generators.Row(h);
    SymbolVector u(row.begin(), row.end());
    for (int j = 0; j < n; ++j) {
      cells[h * n + j] = Combine(instance, coeffs[j], u);
    }
  }
  return CategoricalMatrix(instance.matrix.alphabet(), m, n, std::move(cells));
}

LowRankFactors ReconstructFactors(const LowRankInstance& instance,
                                  const ClusteringSolution& solution) {
  const CategoricalMatrix& a = instance.matrix;
  const int m = a.rows();
  const int n = a.cols();
  const int r = instance.rank;
  const auto coeffs = ClusterCoefficients(instance);
  if (solution.centers.size() != coeffs.size()) {
    throw InvalidSolution("solution has the wrong number of center slots");
  }
  std::vector<SymbolVector> gens;
  const auto tuples = RelationTuples(instance, &gens);

  std::vector<Symbol> u_cells;
  for (int h = 0; h < m; ++h) {
    int match = -1;
    for (size_t t = 0; t < tuples.size() && match < 0; ++t) {
      bool same = true;
      for (size_t i = 0; i < coeffs.size() && same; ++i) {
        same = tuples[t][i] == solution.centers[i][h];
      }
      if (same) match = static_cast<int>(t);
    }
    if (match < 0) {
      throw InvalidSolution("centers at row " + std::to_string(h + 1) +
                            " are not spanned by a generator row");
    }
    u_cells.insert(u_cells.end(), gens[match].begin(), gens[match].end());
  }

  std::vector<SymbolVector> v(n, SymbolVector(r, 0));
  std::vector<Symbol> b_cells(static_cast<size_t>(m) * n, 0);
  std::vector<Symbol> c_cells(static_cast<size_t>(m) * n, 0);
  for (size_t t = 0; t < solution.clusters.size(); ++t) {
    for (int j : solution.clusters[t]) {
      v[j] = coeffs[t];
      for (int h = 0; h < m; ++h) b_cells[h * n + j] = solution.centers[t][h];
    }
  }
  for (int j : solution.outliers) {
    for (int h = 0; h < m; ++h) c_cells[h * n + j] = a.at(h, j);
  }
  LowRankFactors out{
      CategoricalMatrix(a.alphabet(), m, n, std::move(b_cells)),
      CategoricalMatrix(a.alphabet(), m, n, std::move(c_cells)),
      CategoricalMatrix(a.alphabet(), m, r, std::move(u_cells)),
      std::move(v)};
  if (!(MultiplyFactors(instance, out.generators, out.coefficients) ==
        out.approx)) {
    throw InvalidSolution("reconstructed factors do not reproduce B");
  }
  return out;
}

std::int64_t ResidualWeight(const LowRankInstance& instance,
                            const CategoricalMatrix& approx,
                            const CategoricalMatrix& outliers) {
  const CategoricalMatrix& a = instance.matrix;
  const int p = a.alphabet().size();
  std::int64_t weight = 0;
  for (int h = 0; h < a.rows(); ++h) {
    for (int j = 0; j < a.cols(); ++j) {
      int v;
      if (instance.semantics == RankSemantics::kField) {
        v = ((a.at(h, j) - approx.at(h, j) - outliers.at(h, j)) % p + 2 * p) %
            p;
      } else {
        v = a.at(h, j) ^ approx.at(h, j) ^ outliers.at(h, j);
      }
      weight += v != 0;
    }
  }
  return weight;
}

int FieldRank(const CategoricalMatrix& matrix, int p) {
  const int m = matrix.rows();
  const int n = matrix.cols();
  std::vector<std::vector<int>> rows(m, std::vector<int>(n));
  for (int h = 0; h < m; ++h) {
    for (int j = 0; j < n; ++j) rows[h][j] = matrix.at(h, j) % p;
  }
  auto inverse = [p](int x) {
    for (int y = 1; y < p; ++y) {
      if (x * y % p == 1) return y;
    }
    return 0;
  };
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int h = rank; h < m; ++h) {
      if (rows[h][col] != 0) {
        pivot = h;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    const int inv = inverse(rows[rank][col]);
    for (int& x : rows[rank]) x = x * inv % p;
    for (int h = 0; h < m; ++h) {
      if (h == rank || rows[h][col] == 0) continue;
      const int f = rows[h][col];
      for (int j = 0; j < n; ++j) {
        rows[h][j] = ((rows[h][j] - f * rows[rank][j]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<LowRankOutcome> SolveLowRank(const LowRankInstance& instance,
                                           const SolverOptions& options) {
  ConstrainedInstance reduced =
      BuildLowRankRelations(instance, options.work_ceiling);
  auto outcome = SolveConstrained(reduced, options);
  if (!outcome) return std::nullopt;
  return LowRankOutcome{outcome->solution,
                        ReconstructFactors(instance, outcome->solution)};
}

}  // namespace catclust

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

#include "catclust/column_outliers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "catclust/hypergraph.hpp"
#include "parallel.hpp"

namespace catclust {

InitialClusters GroupColumns(const CategoricalMatrix& matrix) {
  InitialClusters out;
  std::map<SymbolVector, int> index;
  for (int c = 0; c < matrix.cols(); ++c) {
    SymbolVector col = matrix.ColumnVector(c);
    auto [it, inserted] = index.emplace(col, out.size());
    if (inserted) {
      out.columns.push_back(std::move(col));
      out.weights.push_back(0);
      out.members.emplace_back();
    }
    ++out.weights[it->second];
    out.members[it->second].push_back(c);
  }
  return out;
}

RestrictedSolution EvaluateRestrictedCenter(
    const std::vector<std::vector<WeightedColumn>>& sets,
    const SymbolVector& center) {
  RestrictedSolution out;
  out.center = center;
  for (const auto& set : sets) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    int pick = 0;
    for (size_t i = 0; i < set.size(); ++i) {
      std::int64_t c =
          static_cast<std::int64_t>(set[i].weight) * Hamming(set[i].column,
                                                             center);
      if (c < best) {
        best = c;
        pick = static_cast<int>(i);
      }
    }
    out.chosen.push_back(pick);
    out.cost += best;
  }
  return out;
}

bool AdmitsCostGuesses(const std::vector<std::int64_t>& costs, int budget) {
  // Guesses b_1..b_tau are enumerated as compositions of each total <= B
  // into positive parts; one with b_i >= costs[i] everywhere admits.
  const int tau = static_cast<int>(costs.size());
  if (tau == 0) return true;
  std::vector<int> guess(tau, 1);
  auto rec = [&](auto&& self, int i, int left) -> bool {
    if (i == tau) return true;
    const int rest = tau - i - 1;
    for (int b = 1; b <= left - rest; ++b) {
      if (b < costs[i]) continue;
      guess[i] = b;
      if (self(self, i + 1, left - b)) return true;
    }
    return false;
  };
  return rec(rec, 0, budget);
}

long DefaultTrials(int budget, double delta) {
  if (budget <= 0) return 1;
  return static_cast<long>(
      std::ceil(std::exp(2.0 * budget) * std::log(1.0 / delta)));
}

namespace {

bool RestrictedLess(const RestrictedSolution& a, const RestrictedSolution& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.center != b.center) return a.center < b.center;
  return a.chosen < b.chosen;
}

double CountSubsets(int m, int r, int alternatives) {
  double total = 0;
  double binom = 1;
  for (int b = 0; b <= std::min(r, m); ++b) {
    total += binom * std::pow(static_cast<double>(alternatives), b);
    binom = binom * (m - b) / (b + 1);
  }
  return total;
}

}  // namespace

std::optional<RestrictedSolution> SolveRestricted(
    const std::vector<std::vector<WeightedColumn>>& sets, int budget,
    int alphabet_size, SearchMode mode, double work_ceiling) {
  if (sets.empty()) throw ContractViolation("restricted clustering needs sets");
  if (budget < 0) throw ContractViolation("budget must be non-negative");
  const int m = static_cast<int>(sets.front().front().column.size());
  size_t anchor = 0;
  size_t total = 0;
  for (size_t t = 0; t < sets.size(); ++t) {
    if (sets[t].empty()) throw ContractViolation("restricted set is empty");
    for (const auto& wc : sets[t]) {
      if (static_cast<int>(wc.column.size()) != m) {
        throw ContractViolation("restricted columns of different lengths");
      }
      if (wc.weight < 1) throw ContractViolation("weights must be positive");
      for (Symbol s : wc.column) {
        if (s >= alphabet_size) {
          throw ContractViolation("symbol outside the alphabet");
        }
      }
    }
    total += sets[t].size();
    if (sets[t].size() < sets[anchor].size()) anchor = t;
  }
  const bool hyper = mode == SearchMode::kHypergraph;
  if (hyper && m > kMaxHostVertices) {
    throw ContractViolation("hypergraph mode supports at most 64 rows");
  }
  const double work = static_cast<double>(sets[anchor].size()) *
                      CountSubsets(m, budget, alphabet_size - 1) *
                      static_cast<double>(total) * m;
  if (work > work_ceiling) {
    throw WorkCeilingExceeded("restricted clustering needs about " +
                              std::to_string(work) + " steps");
  }

  std::optional<RestrictedSolution> best;
  SymbolVector center;
  std::vector<int> alt;
  auto edits_at = [&](const SymbolVector& x, const std::vector<int>& rows) {
    center = x;
    std::vector<int> pos(rows.size(), 0);
    while (true) {
      for (size_t i = 0; i < rows.size(); ++i) {
        int v = pos[i] < x[rows[i]] ? pos[i] : pos[i] + 1;
        center[rows[i]] = static_cast<Symbol>(v);
      }
      RestrictedSolution r = EvaluateRestrictedCenter(sets, center);
      if (r.cost <= budget && (!best || RestrictedLess(r, *best))) {
        best = std::move(r);
      }
      size_t i = 0;
      while (i < rows.size() && ++pos[i] == alphabet_size - 1) pos[i++] = 0;
      if (i == rows.size()) break;
    }
  };

  for (const WeightedColumn& anchor_col : sets[anchor]) {
    const SymbolVector& x = anchor_col.column;
    const int radius = std::min(m, budget / anchor_col.weight);
    if (radius > 0 && alphabet_size < 2) break;
    if (!hyper) {
      for (int size = 0; size <= radius; ++size) {
        if (size > 0 && alphabet_size < 2) break;
        std::vector<int> rows(size);
        for (int i = 0; i < size; ++i) rows[i] = i;
        while (true) {
          edits_at(x, rows);
          int i = size - 1;
          while (i >= 0 && rows[i] == m - size + i) --i;
          if (i < 0) break;
          ++rows[i];
          for (int j = i + 1; j < size; ++j) rows[j] = rows[j - 1] + 1;
        }
      }
      continue;
    }
    edits_at(x, {});
    if (radius == 0) continue;
    Hypergraph host;
    for (const auto& set : sets) {
      for (const auto& wc : set) {
        VertexMask e = 0;
        for (int h = 0; h < m; ++h) {
          if (wc.column[h] != x[h]) e |= VertexMask{1} << h;
        }
        if (e != 0 && std::popcount(e) <= 2 * budget) {
          host.AddEdge(e, wc.weight);
        }
      }
    }
    host.Compact();
    std::unordered_set<VertexMask> seen{0};
    std::vector<int> rows;
    for (const auto& p :
         EnumeratePatterns(radius, EdgeBudget(radius), work_ceiling)) {
      for (VertexMask occ : FindOccurrences(p, host)) {
        if (!seen.insert(occ).second) continue;
        rows.clear();
        for (int h = 0; h < m; ++h) {
          if ((occ >> h) & 1) rows.push_back(h);
        }
        edits_at(x, rows);
      }
    }
  }
  return best;
}

const char* InitialClusterTypeName(InitialClusterType type) {
  switch (type) {
    case InitialClusterType::kI: return "i";
    case InitialClusterType::kII: return "ii";
    case InitialClusterType::kIII: return "iii";
    case InitialClusterType::kIV: return "iv";
    case InitialClusterType::kV: return "v";
  }
  return "?";
}

NormalizationReport NormalizeWitness(const CategoricalMatrix& matrix,
                                     const ClusteringSolution& solution) {
  NormalizationReport report;
  const int n = matrix.cols();
  std::vector<int> where(n, -2);  // -1 outlier, cluster index otherwise
  for (int j : solution.outliers) {
    if (j >= 0 && j < n) where[j] = -1;
  }
  for (size_t c = 0; c < solution.clusters.size(); ++c) {
    for (int j : solution.clusters[c]) {
      if (j >= 0 && j < n) where[j] = static_cast<int>(c);
    }
  }
  InitialClusters groups = GroupColumns(matrix);
  int type_iv = 0;
  report.pass = true;
  for (int g = 0; g < groups.size(); ++g) {
    std::set<int> clusters;
    bool outlier = false;
    for (int j : groups.members[g]) {
      if (where[j] == -2) {
        report.pass = false;
        report.detail = "column " + std::to_string(j) + " unassigned";
      } else if (where[j] == -1) {
        outlier = true;
      } else {
        clusters.insert(where[j]);
      }
    }
    InitialClusterType type;
    if (!outlier) {
      type = clusters.size() <= 1 ? InitialClusterType::kI
                                  : InitialClusterType::kII;
    } else if (clusters.empty()) {
      type = InitialClusterType::kIII;
    } else if (clusters.size() == 1) {
      type = InitialClusterType::kIV;
    } else {
      type = InitialClusterType::kV;
    }
    report.types.push_back(type);
    if (type == InitialClusterType::kIV) ++type_iv;
    if (type == InitialClusterType::kII || type == InitialClusterType::kV) {
      report.pass = false;
      report.detail = "initial cluster " + std::to_string(g + 1) +
                      " has type (" + InitialClusterTypeName(type) + ")";
    }
  }
  if (type_iv > 1) {
    report.pass = false;
    report.detail = std::to_string(type_iv) + " initial clusters of type (iv)";
  }
  return report;
}

namespace {

struct Candidate {
  std::int64_t cost = std::numeric_limits<std::int64_t>::max();
  ClusteringSolution solution;
  CompositePlan plan;
  bool valid = false;
};

bool CandidateLess(const Candidate& a, const Candidate& b) {
  if (!b.valid) return a.valid;
  if (!a.valid) return false;
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.solution.outliers != b.solution.outliers) {
    return a.solution.outliers < b.solution.outliers;
  }
  if (a.solution.clusters != b.solution.clusters) {
    return a.solution.clusters < b.solution.clusters;
  }
  if (a.plan.split_cluster != b.plan.split_cluster) {
    return a.plan.split_cluster < b.plan.split_cluster;
  }
  if (a.plan.split_count != b.plan.split_count) {
    return a.plan.split_count < b.plan.split_count;
  }
  return a.plan.parts < b.plan.parts;
}

struct Part {
  std::vector<int> groups;  // initial clusters forming the composite
  SymbolVector center;
  std::int64_t cost = 0;
};

class BranchSearch {
 public:
  BranchSearch(const InitialClusters& groups, int alphabet, int k,
               int budget, int cap, int split, int split_count,
               const ColumnOutliersOptions& options)
      : groups_(groups),
        alphabet_(alphabet),
        k_(k),
        budget_(budget),
        split_(split),
        split_count_(split_count),
        cap_(cap - split_count),
        options_(options),
        weights_(groups.weights) {
    if (split >= 0) weights_[split] -= split_count;
    for (int g = 0; g < groups.size(); ++g) {
      if (weights_[g] > 0) active_.push_back(g);
    }
  }

  void Exhaustive(Candidate& best) {
    std::vector<std::vector<int>> parts;
    ExhaustiveRec(0, 0, parts, best);
  }

  void Trial(const std::vector<int>& coloring, Candidate& best) {
    const int colors = 2 * budget_;
    classes_.assign(colors, {});
    for (int g : active_) classes_[coloring[g]].push_back(g);
    coloring_ = &coloring;
    std::vector<std::vector<int>> parts;
    TrialRec(0, 0, parts, best);
    coloring_ = nullptr;
  }

 private:
  // Restricted clustering on sets of initial clusters, memoized per branch.
  const std::optional<RestrictedSolution>& Restricted(
      const std::vector<std::vector<int>>& sets) {
    std::vector<int> key;
    for (const auto& s : sets) {
      key.insert(key.end(), s.begin(), s.end());
      key.push_back(-1);
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<std::vector<WeightedColumn>> input;
    for (const auto& s : sets) {
      std::vector<WeightedColumn> u;
      for (int g : s) u.push_back({groups_.columns[g], weights_[g]});
      input.push_back(std::move(u));
    }
    auto r = SolveRestricted(input, budget_, alphabet_, options_.mode,
                             options_.work_ceiling);
    return memo_.emplace(std::move(key), std::move(r)).first->second;
  }

  bool CostOf(const std::vector<int>& part, std::int64_t& cost) {
    std::vector<std::vector<int>> sets;
    for (int g : part) sets.push_back({g});
    const auto& r = Restricted(sets);
    if (!r) return false;
    cost = r->cost;
    return true;
  }

  void ExhaustiveRec(size_t idx, int participants,
                     std::vector<std::vector<int>>& parts, Candidate& best) {
    std::int64_t partial = 0;
    for (const auto& p : parts) {
      if (p.size() < 2) continue;
      std::int64_t c;
      if (!CostOf(p, c)) return;
      partial += c;
    }
    if (partial > budget_) return;
    int open = 0;
    for (const auto& p : parts) open += p.size() < 2;
    if (open > static_cast<int>(active_.size() - idx)) return;
    if (idx == active_.size()) {
      std::vector<Part> built;
      for (const auto& p : parts) {
        std::vector<std::vector<int>> sets;
        for (int g : p) sets.push_back({g});
        const auto& r = Restricted(sets);
        built.push_back(Part{p, r->center, r->cost});
      }
      std::vector<bool> used(groups_.size(), false);
      for (const auto& p : parts) {
        for (int g : p) used[g] = true;
      }
      Finish(built, used, best);
      return;
    }
    const int g = active_[idx];
    ExhaustiveRec(idx + 1, participants, parts, best);
    if (participants >= 2 * budget_) return;
    for (size_t p = 0; p < parts.size(); ++p) {
      parts[p].push_back(g);
      ExhaustiveRec(idx + 1, participants + 1, parts, best);
      parts[p].pop_back();
    }
    if (static_cast<int>(parts.size()) < std::min(budget_, k_)) {
      parts.push_back({g});
      ExhaustiveRec(idx + 1, participants + 1, parts, best);
      parts.pop_back();
    }
  }

  bool PartResult(const std::vector<int>& colors, Part& out) {
    std::vector<std::vector<int>> sets;
    for (int c : colors) sets.push_back(classes_[c]);
    const auto& r = Restricted(sets);
    if (!r) return false;
    out.groups.clear();
    for (size_t t = 0; t < sets.size(); ++t) {
      out.groups.push_back(sets[t][r->chosen[t]]);
    }
    out.center = r->center;
    out.cost = r->cost;
    return true;
  }

  void TrialRec(int color, int used_colors,
                std::vector<std::vector<int>>& parts, Candidate& best) {
    std::int64_t partial = 0;
    Part part;
    for (const auto& p : parts) {
      if (p.size() < 2) continue;
      if (!PartResult(p, part)) return;
      partial += part.cost;
    }
    if (partial > budget_) return;
    const int colors = static_cast<int>(classes_.size());
    if (color == colors) {
      std::vector<Part> built;
      std::vector<bool> used(groups_.size(), false);
      for (const auto& p : parts) {
        if (p.size() < 2) return;
        PartResult(p, part);
        for (int g : part.groups) used[g] = true;
        built.push_back(part);
      }
      Finish(built, used, best);
      return;
    }
    TrialRec(color + 1, used_colors, parts, best);
    if (classes_[color].empty()) return;
    for (size_t p = 0; p < parts.size(); ++p) {
      parts[p].push_back(color);
      TrialRec(color + 1, used_colors + 1, parts, best);
      parts[p].pop_back();
    }
    if (static_cast<int>(parts.size()) < std::min(budget_, k_)) {
      parts.push_back({color});
      TrialRec(color + 1, used_colors + 1, parts, best);
      parts.pop_back();
    }
  }

  // Cost guesses, packing of the leftover initial clusters, and assembly.
  void Finish(const std::vector<Part>& parts, const std::vector<bool>& used,
              Candidate& best) {
    std::vector<std::int64_t> costs;
    std::int64_t total = 0;
    for (const auto& p : parts) {
      costs.push_back(p.cost);
      total += p.cost;
    }
    if (!AdmitsCostGuesses(costs, budget_)) return;
    const int tau = static_cast<int>(parts.size());
    if (tau > k_) return;
    std::vector<int> rest;
    for (int g : active_) {
      if (!used[g]) rest.push_back(g);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
      return weights_[a] < weights_[b];
    });
    const int excess = static_cast<int>(rest.size()) - (k_ - tau);
    std::vector<int> packed;
    int packed_weight = 0;
    for (int i = 0; i < excess; ++i) {
      packed.push_back(rest[i]);
      packed_weight += weights_[rest[i]];
    }
    if (packed_weight > cap_) return;
    if (best.valid && total > best.cost) return;

    Candidate cand;
    cand.valid = true;
    cand.cost = total;
    ClusteringSolution& sol = cand.solution;
    auto active_members = [&](int g) {
      return std::vector<int>(groups_.members[g].begin(),
                              groups_.members[g].begin() + weights_[g]);
    };
    if (split_ >= 0) {
      sol.outliers.assign(groups_.members[split_].end() - split_count_,
                          groups_.members[split_].end());
    }
    for (int g : packed) {
      auto mem = active_members(g);
      sol.outliers.insert(sol.outliers.end(), mem.begin(), mem.end());
    }
    std::vector<std::pair<std::vector<int>, SymbolVector>> clusters;
    for (const auto& p : parts) {
      std::vector<int> mem;
      for (int g : p.groups) {
        auto am = active_members(g);
        mem.insert(mem.end(), am.begin(), am.end());
      }
      std::sort(mem.begin(), mem.end());
      clusters.emplace_back(std::move(mem), p.center);
    }
    for (int i = std::max(excess, 0); i < static_cast<int>(rest.size()); ++i) {
      clusters.emplace_back(active_members(rest[i]),
                            groups_.columns[rest[i]]);
    }
    std::sort(sol.outliers.begin(), sol.outliers.end());
    std::sort(clusters.begin(), clusters.end());
    for (auto& [mem, center] : clusters) {
      sol.clusters.push_back(std::move(mem));
      sol.centers.push_back(std::move(center));
    }
    sol.cost = total;
    cand.plan.split_cluster = split_;
    cand.plan.split_count = split_count_;
    if (coloring_ != nullptr) cand.plan.coloring = *coloring_;
    for (const auto& p : parts) {
      cand.plan.parts.push_back(p.groups);
      cand.plan.cost_guesses.push_back(
          static_cast<int>(std::max<std::int64_t>(p.cost, 1)));
    }
    if (CandidateLess(cand, best)) best = std::move(cand);
  }

  const InitialClusters& groups_;
  const int alphabet_;
  const int k_;
  const int budget_;
  const int split_;
  const int split_count_;
  const int cap_;
  const ColumnOutliersOptions& options_;
  std::vector<int> weights_;
  std::vector<int> active_;
  std::vector<std::vector<int>> classes_;
  const std::vector<int>* coloring_ = nullptr;
  std::map<std::vector<int>, std::optional<RestrictedSolution>> memo_;
};

}  // namespace

std::optional<ColumnOutliersOutcome> SolveColumnOutliers(
    const CategoricalMatrix& matrix, int k, int budget, int outlier_cap,
    const ColumnOutliersOptions& options) {
  if (k < 1) throw ContractViolation("k must be positive");
  if (budget < 0) throw ContractViolation("budget must be non-negative");
  if (outlier_cap < 0 || outlier_cap >= matrix.cols()) {
    throw ContractViolation("outlier cap must lie in [0, n)");
  }
  const InitialClusters groups = GroupColumns(matrix);
  const int beta = groups.size();

  std::vector<std::pair<int, int>> branches{{-1, 0}};
  for (int t = 0; t < beta; ++t) {
    for (int s = 1; s <= std::min(outlier_cap, groups.weights[t]); ++s) {
      branches.emplace_back(t, s);
    }
  }
  const long trials =
      options.exhaustive
          ? 1
          : (options.trials > 0 ? options.trials : DefaultTrials(budget));

  const int participants = std::min(2 * budget, beta);
  double plans = 0;
  double binom = 1;
  for (int s = 0; s <= participants; ++s) {
    plans += binom * std::pow(std::min(budget, k) + 1.0, s);
    binom = binom * (beta - s) / (s + 1);
  }
  if (!options.exhaustive) {
    plans = std::pow(std::min(budget, k) + 1.0, 2.0 * budget);
  }
  const double work = static_cast<double>(branches.size()) * trials * plans;
  if (work > options.work_ceiling) {
    throw WorkCeilingExceeded("column-outlier search needs about " +
                              std::to_string(work) + " plans");
  }

  std::vector<std::vector<int>> colorings;
  if (!options.exhaustive && budget > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> color(0, 2 * budget - 1);
    colorings.assign(trials, std::vector<int>(beta));
    for (auto& c : colorings) {
      for (int& v : c) v = color(rng);
    }
  }

  const int threads = internal::ResolveThreads(options.threads);
  std::vector<Candidate> best(threads);
  internal::ParallelFor(
      static_cast<long>(branches.size()), threads, [&](long b, int w) {
        BranchSearch search(groups, matrix.alphabet().size(), k, budget,
                            outlier_cap, branches[b].first, branches[b].second,
                            options);
        if (colorings.empty()) {
          search.Exhaustive(best[w]);
        } else {
          for (const auto& c : colorings) search.Trial(c, best[w]);
        }
      });
  Candidate* winner = nullptr;
  for (auto& c : best) {
    if (c.valid && (winner == nullptr || CandidateLess(c, *winner))) {
      winner = &c;
    }
  }
  if (winner == nullptr) return std::nullopt;
  return ColumnOutliersOutcome{std::move(winner->solution),
                               std::move(winner->plan)};
}

}  // namespace catclust

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

#include "catclust/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace catclust {

namespace {

constexpr std::int64_t kNoCost = std::numeric_limits<std::int64_t>::max();

class StateCounter {
 public:
  explicit StateCounter(const OracleLimits& limits) : max_(limits.max_states) {}

  void Tick() {
    if (++visited_ > max_) {
      throw OracleSizeExceeded("oracle visited more than " +
                               std::to_string(max_) + " states");
    }
  }

  void Reserve(double states, const char* what) const {
    if (states > max_) {
      throw OracleSizeExceeded(std::string(what) + " needs " +
                               std::to_string(states) + " states, limit " +
                               std::to_string(max_));
    }
  }

 private:
  double max_;
  double visited_ = 0;
};

// Calls fn(subset) for every subset of {0..n-1} of size <= cap, by size and
// then lexicographically.
void ForEachSubset(int n, int cap, StateCounter& counter,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> subset;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      counter.Tick();
      fn(subset);
      return;
    }
    for (int i = start; i <= n - left; ++i) {
      subset.push_back(i);
      rec(i + 1, left - 1);
      subset.pop_back();
    }
  };
  for (int size = 0; size <= std::min(cap, n); ++size) rec(0, size);
}

std::vector<int> Complement(int n, const std::vector<int>& sorted) {
  std::vector<int> out;
  for (int i = 0, p = 0; i < n; ++i) {
    if (p < static_cast<int>(sorted.size()) && sorted[p] == i) {
      ++p;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

// A weighted item to be partitioned: `members` are the original columns it
// stands for, all equal to `values`.
struct Item {
  SymbolVector values;
  int weight = 1;
  std::vector<int> members;
};

// Partitions items into at most k parts; part cost is the weighted
// plurality cost. Returns the best part label per item with cost <= bound.
class PartitionSearch {
 public:
  PartitionSearch(const std::vector<Item>& items, int rows, int alphabet,
                  int k, std::int64_t bound, StateCounter& counter)
      : items_(items),
        rows_(rows),
        alphabet_(alphabet),
        k_(k),
        best_(bound),
        counter_(counter),
        label_(items.size(), -1) {}

  std::optional<std::vector<int>> Run() {
    if (items_.empty()) return std::vector<int>{};
    Rec(0, 0, 0);
    return found_ ? std::optional(best_label_) : std::nullopt;
  }

  std::int64_t best() const { return best_; }

 private:
  struct Part {
    std::vector<int> counts;  // rows_ * alphabet_
    std::vector<int> top;     // per-row max count
    int weight = 0;
    std::int64_t cost = 0;
  };

  std::int64_t Add(Part& part, const Item& item) {
    const std::int64_t before = part.cost;
    part.weight += item.weight;
    std::int64_t agree = 0;
    for (int h = 0; h < rows_; ++h) {
      int& c = part.counts[h * alphabet_ + item.values[h]];
      c += item.weight;
      part.top[h] = std::max(part.top[h], c);
      agree += part.top[h];
    }
    part.cost = static_cast<std::int64_t>(part.weight) * rows_ - agree;
    return before;
  }

  void Remove(Part& part, const Item& item, std::int64_t before,
              const std::vector<int>& saved_top) {
    part.weight -= item.weight;
    for (int h = 0; h < rows_; ++h) {
      part.counts[h * alphabet_ + item.values[h]] -= item.weight;
    }
    part.top = saved_top;
    part.cost = before;
  }

  void Rec(size_t i, int used, std::int64_t cost) {
    counter_.Tick();
    if (found_ ? cost >= best_ : cost > best_) return;
    if (i == items_.size()) {
      best_ = cost;
      best_label_ = label_;
      found_ = true;
      return;
    }
    const int limit = std::min(used + 1, k_);
    if (static_cast<int>(parts_.size()) < limit) {
      parts_.push_back(Part{std::vector<int>(rows_ * alphabet_, 0),
                            std::vector<int>(rows_, 0), 0, 0});
    }
    for (int p = 0; p < limit; ++p) {
      const std::vector<int> saved_top = parts_[p].top;
      const std::int64_t before = Add(parts_[p], items_[i]);
      label_[i] = p;
      Rec(i + 1, std::max(used, p + 1), cost - before + parts_[p].cost);
      Remove(parts_[p], items_[i], before, saved_top);
    }
    label_[i] = -1;
  }

  const std::vector<Item>& items_;
  int rows_;
  int alphabet_;
  int k_;
  std::int64_t best_;
  StateCounter& counter_;
  std::vector<int> label_;
  std::vector<int> best_label_;
  std::vector<Part> parts_;
  bool found_ = false;
};

// Groups identical columns of `matrix` (restricted to `cols`) into items.
std::vector<Item> GroupItems(const CategoricalMatrix& matrix,
                             const std::vector<int>& rows,
                             const std::vector<int>& cols, bool merge) {
  std::vector<Item> items;
  std::map<SymbolVector, int> index;
  for (int j : cols) {
    SymbolVector v;
    v.reserve(rows.size());
    for (int h : rows) v.push_back(matrix.at(h, j));
    if (merge) {
      auto [it, fresh] = index.emplace(v, static_cast<int>(items.size()));
      if (!fresh) {
        items[it->second].weight += 1;
        items[it->second].members.push_back(j);
        continue;
      }
    }
    items.push_back(Item{std::move(v), 1, {j}});
  }
  return items;
}

std::vector<std::vector<int>> PartsFromLabels(const std::vector<Item>& items,
                                              const std::vector<int>& labels) {
  int parts = 0;
  for (int l : labels) parts = std::max(parts, l + 1);
  std::vector<std::vector<int>> out(parts);
  for (size_t i = 0; i < items.size(); ++i) {
    for (int j : items[i].members) out[labels[i]].push_back(j);
  }
  for (auto& p : out) std::sort(p.begin(), p.end());
  return out;
}

int Nearest(std::span<const Symbol> column,
            const std::vector<SymbolVector>& centers, int* distance) {
  int best = 0;
  int best_d = std::numeric_limits<int>::max();
  for (size_t c = 0; c < centers.size(); ++c) {
    const int d = Hamming(column, centers[c]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  *distance = best_d;
  return best;
}

}  // namespace

SymbolVector PluralityCenter(const CategoricalMatrix& matrix,
                             std::span<const int> columns) {
  const int p = matrix.alphabet().size();
  SymbolVector center(matrix.rows(), 0);
  std::vector<int> counts(p);
  for (int h = 0; h < matrix.rows(); ++h) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int j : columns) ++counts[matrix.at(h, j)];
    center[h] = static_cast<Symbol>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());
  }
  return center;
}

std::optional<FeatureSelectionSolution> OracleFeatureSelection(
    const FeatureSelectionInstance& instance, const OracleLimits& limits) {
  instance.Validate();
  const CategoricalMatrix& a = instance.matrix;
  StateCounter counter(limits);
  std::optional<FeatureSelectionSolution> best;
  std::vector<int> all_cols(a.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  ForEachSubset(a.rows(), instance.outlier_cap, counter,
                [&](const std::vector<int>& removed) {
    const std::vector<int> kept = Complement(a.rows(), removed);
    const std::vector<Item> items = GroupItems(a, kept, all_cols, true);
    const std::int64_t bound = best ? best->cost - 1 : instance.budget;
    if (bound < 0) return;
    PartitionSearch search(items, static_cast<int>(kept.size()),
                           a.alphabet().size(), instance.k, bound, counter);
    auto labels = search.Run();
    if (!labels) return;
    FeatureSelectionSolution s;
    s.removed_features = removed;
    s.point_clusters = PartsFromLabels(items, *labels);
    const CategoricalMatrix reduced = a.WithoutRows(removed);
    for (const auto& part : s.point_clusters) {
      s.centers.push_back(PluralityCenter(reduced, part));
    }
    s.cost = FeatureSelectionCost(a, s);
    best = std::move(s);
  });
  return best;
}

std::optional<ClusteringSolution> OracleConstrained(
    const ConstrainedInstance& instance, const OracleLimits& limits) {
  instance.Validate();
  const CategoricalMatrix& a = instance.matrix;
  const RelationSet& rel = instance.relations;
  const int m = a.rows();
  const int n = a.cols();
  const int k = instance.k;
  const int p = a.alphabet().size();
  StateCounter counter(limits);
  std::optional<ClusteringSolution> best;

  // counts[(h * k + j) * p + s]: columns of slot j with symbol s at row h.
  std::vector<int> counts(static_cast<size_t>(m) * k * p, 0);
  std::vector<int> sizes(k, 0);
  auto row_cost = [&](int h, int t) {
    auto tuple = rel.Tuple(h, t);
    std::int64_t c = 0;
    for (int j = 0; j < k; ++j) {
      c += sizes[j] - counts[(h * k + j) * p + tuple[j]];
    }
    return c;
  };
  auto bound_cost = [&]() {
    std::int64_t total = 0;
    for (int h = 0; h < m; ++h) {
      std::int64_t row_best = kNoCost;
      for (int t = 0; t < rel.Size(h); ++t) {
        row_best = std::min(row_best, row_cost(h, t));
      }
      total += row_best;
    }
    return total;
  };

  ForEachSubset(n, instance.outlier_cap, counter,
                [&](const std::vector<int>& outliers) {
    const std::vector<int> cols = Complement(n, outliers);
    std::vector<int> slot(cols.size(), -1);
    std::function<void(size_t)> rec = [&](size_t i) {
      counter.Tick();
      const std::int64_t cost = bound_cost();
      if (cost > instance.budget || (best && cost >= best->cost)) return;
      if (i == cols.size()) {
        ClusteringSolution s;
        s.outliers = outliers;
        s.clusters.assign(k, {});
        s.centers.assign(k, SymbolVector(m, 0));
        for (size_t c = 0; c < cols.size(); ++c) {
          s.clusters[slot[c]].push_back(cols[c]);
        }
        for (int h = 0; h < m; ++h) {
          int arg = 0;
          for (int t = 1; t < rel.Size(h); ++t) {
            if (row_cost(h, t) < row_cost(h, arg)) arg = t;
          }
          auto tuple = rel.Tuple(h, arg);
          for (int j = 0; j < k; ++j) s.centers[j][h] = tuple[j];
        }
        s.cost = cost;
        best = std::move(s);
        return;
      }
      const int col = cols[i];
      for (int j = 0; j < k; ++j) {
        for (int h = 0; h < m; ++h) ++counts[(h * k + j) * p + a.at(h, col)];
        ++sizes[j];
        slot[i] = j;
        rec(i + 1);
        for (int h = 0; h < m; ++h) --counts[(h * k + j) * p + a.at(h, col)];
        --sizes[j];
      }
    };
    rec(0);
  });
  return best;
}

std::optional<ClusteringSolution> OracleColumnOutliers(
    const CategoricalMatrix& matrix, int k, int budget, int outlier_cap,
    const OracleLimits& limits) {
  if (k < 1) throw ContractViolation("k must be positive");
  if (budget < 0) throw ContractViolation("budget must be non-negative");
  if (outlier_cap < 0 || outlier_cap >= matrix.cols()) {
    throw ContractViolation("outlier cap must lie in [0, n)");
  }
  StateCounter counter(limits);
  std::optional<ClusteringSolution> best;
  std::vector<int> all_rows(matrix.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  ForEachSubset(matrix.cols(), outlier_cap, counter,
                [&](const std::vector<int>& outliers) {
    const std::vector<int> cols = Complement(matrix.cols(), outliers);
    const std::vector<Item> items = GroupItems(matrix, all_rows, cols, false);
    const std::int64_t bound = best ? best->cost - 1 : budget;
    if (bound < 0) return;
    PartitionSearch search(items, matrix.rows(), matrix.alphabet().size(), k,
                           bound, counter);
    auto labels = search.Run();
    if (!labels) return;
    ClusteringSolution s;
    s.outliers = outliers;
    s.clusters = PartsFromLabels(items, *labels);
    for (const auto& part : s.clusters) {
      s.centers.push_back(PluralityCenter(matrix, part));
    }
    s.cost = SolutionCost(matrix, s);
    best = std::move(s);
  });
  return best;
}

std::optional<ClusteringSolution> OracleVanillaClustering(
    const CategoricalMatrix& matrix, int k, int budget,
    const OracleLimits& limits) {
  if (k < 1) throw ContractViolation("k must be positive");
  StateCounter counter(limits);
  const int p = matrix.alphabet().size();
  const double space = std::pow(p, matrix.rows());
  double multisets = 1;
  for (int i = 0; i < k; ++i) multisets = multisets * (space + i) / (i + 1);
  counter.Reserve(multisets, "vanilla clustering oracle");
  const std::vector<SymbolVector> strings = AllStrings(p, matrix.rows());
  const int total = static_cast<int>(strings.size());

  std::optional<ClusteringSolution> best;
  std::vector<int> pick(k, 0);
  std::function<void(int, int)> rec = [&](int slot, int start) {
    if (slot == k) {
      counter.Tick();
      std::vector<SymbolVector> centers;
      for (int c : pick) centers.push_back(strings[c]);
      ClusteringSolution s;
      s.clusters.assign(k, {});
      s.centers = centers;
      for (int j = 0; j < matrix.cols(); ++j) {
        int d;
        s.clusters[Nearest(matrix.Column(j), centers, &d)].push_back(j);
        s.cost += d;
      }
      if (s.cost <= budget && (!best || s.cost < best->cost)) {
        best = std::move(s);
      }
      return;
    }
    for (int c = start; c < total; ++c) {
      pick[slot] = c;
      rec(slot + 1, c);
    }
  };
  rec(0, 0);
  return best;
}

std::optional<RestrictedSolution> OracleRestricted(
    const std::vector<std::vector<WeightedColumn>>& sets, int budget,
    int alphabet_size, const OracleLimits& limits) {
  if (sets.empty()) throw ContractViolation("restricted instance has no sets");
  const int m = static_cast<int>(sets[0][0].column.size());
  StateCounter counter(limits);
  double selections = 1;
  for (const auto& s : sets) {
    if (s.empty()) throw ContractViolation("restricted set is empty");
    selections *= static_cast<double>(s.size());
  }
  counter.Reserve(selections * std::pow(alphabet_size, m),
                  "restricted oracle");
  std::optional<RestrictedSolution> best;
  std::vector<int> chosen(sets.size(), 0);
  for (const SymbolVector& center : AllStrings(alphabet_size, m)) {
    std::function<void(size_t, std::int64_t)> rec = [&](size_t i,
                                                        std::int64_t cost) {
      if (i == sets.size()) {
        counter.Tick();
        if (cost <= budget && (!best || cost < best->cost)) {
          best = RestrictedSolution{chosen, center, cost};
        }
        return;
      }
      for (size_t c = 0; c < sets[i].size(); ++c) {
        chosen[i] = static_cast<int>(c);
        rec(i + 1, cost + static_cast<std::int64_t>(sets[i][c].weight) *
                              Hamming(sets[i][c].column, center));
      }
    };
    rec(0, 0);
  }
  return best;
}

std::optional<ClusteringSolution> OracleLowRank(
    const LowRankInstance& instance, const OracleLimits& limits) {
  instance.Validate();
  const CategoricalMatrix& a = instance.matrix;
  const int m = a.rows();
  const int n = a.cols();
  const int r = instance.rank;
  const int p = a.alphabet().size();
  StateCounter counter(limits);
  counter.Reserve(std::pow(p, static_cast<double>(m) * r), "low-rank oracle");
  const std::vector<SymbolVector> coeffs = ClusterCoefficients(instance);
  const int slots = static_cast<int>(coeffs.size());

  std::optional<ClusteringSolution> best;
  for (const SymbolVector& flat : AllStrings(p, m * r)) {
    counter.Tick();
    const CategoricalMatrix u(a.alphabet(), m, r, flat);
    const CategoricalMatrix products = MultiplyFactors(instance, u, coeffs);
    std::vector<SymbolVector> centers;
    for (int c = 0; c < slots; ++c) centers.push_back(products.ColumnVector(c));
    std::vector<int> slot(n);
    std::vector<int> dist(n);
    for (int j = 0; j < n; ++j) slot[j] = Nearest(a.Column(j), centers, &dist[j]);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return dist[x] > dist[y]; });
    ClusteringSolution s;
    s.clusters.assign(slots, {});
    s.centers = centers;
    std::vector<bool> out(n, false);
    for (int i = 0; i < instance.outlier_cap; ++i) out[order[i]] = true;
    for (int j = 0; j < n; ++j) {
      if (out[j]) {
        s.outliers.push_back(j);
      } else {
        s.clusters[slot[j]].push_back(j);
        s.cost += dist[j];
      }
    }
    if (s.cost <= instance.budget && (!best || s.cost < best->cost)) {
      best = std::move(s);
    }
  }
  return best;
}

}  // namespace catclust

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

#include "catclust/constrained.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <unordered_set>

#include "catclust/hypergraph.hpp"
#include "parallel.hpp"

namespace catclust {

const char* SearchModeName(SearchMode mode) {
  return mode == SearchMode::kDirect ? "direct" : "hypergraph";
}

SymbolVector CandidateTuple::Column(int j) const {
  SymbolVector out(m);
  for (int h = 0; h < m; ++h) out[h] = rows[h * k + j];
  return out;
}

std::vector<SymbolVector> CandidateTuple::Columns() const {
  std::vector<SymbolVector> out;
  for (int j = 0; j < k; ++j) out.push_back(Column(j));
  return out;
}

std::optional<CandidateTuple> RefineTuple(const CategoricalMatrix& matrix,
                                          std::span<const int> slots,
                                          const RelationSet& relations,
                                          int budget) {
  const int k = static_cast<int>(slots.size());
  const int m = matrix.rows();
  if (relations.arity() != k || relations.rows() != m) {
    throw ContractViolation("relations do not match the tuple shape");
  }
  for (int s : slots) {
    if (s != kFreeSlot && (s < 0 || s >= matrix.cols())) {
      throw ContractViolation("tuple column index out of range");
    }
  }
  CandidateTuple x;
  x.k = k;
  x.m = m;
  x.rows.assign(static_cast<size_t>(m) * k, 0);
  x.source_columns.assign(slots.begin(), slots.end());
  for (int h = 0; h < m; ++h) {
    int match = -1;
    for (int t = 0; t < relations.Size(h) && match < 0; ++t) {
      auto z = relations.Tuple(h, t);
      bool agrees = true;
      for (int j = 0; j < k && agrees; ++j) {
        if (slots[j] != kFreeSlot && z[j] != matrix.at(h, slots[j])) {
          agrees = false;
        }
      }
      if (agrees) match = t;
    }
    if (match < 0) {
      x.deviated.push_back(h);
      if (static_cast<int>(x.deviated.size()) > budget) return std::nullopt;
      match = 0;
    }
    auto z = relations.Tuple(h, match);
    std::copy(z.begin(), z.end(), x.rows.begin() + static_cast<size_t>(h) * k);
  }
  return x;
}

ClusteringSolution GreedyAssign(const CategoricalMatrix& matrix,
                                const std::vector<SymbolVector>& centers,
                                int outlier_cap) {
  const int n = matrix.cols();
  if (centers.empty()) throw ContractViolation("greedy needs a center");
  for (const auto& c : centers) {
    if (static_cast<int>(c.size()) != matrix.rows()) {
      throw ContractViolation("center length differs from the row count");
    }
  }
  if (outlier_cap < 0 || outlier_cap > n) {
    throw ContractViolation("outlier cap out of range");
  }
  std::vector<int> nearest(n);
  std::vector<int> delta(n);
  for (int j = 0; j < n; ++j) {
    int best = std::numeric_limits<int>::max();
    for (size_t t = 0; t < centers.size(); ++t) {
      int d = Hamming(matrix.Column(j), centers[t]);
      if (d < best) {
        best = d;
        nearest[j] = static_cast<int>(t);
      }
    }
    delta[j] = best;
  }
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return delta[a] != delta[b] ? delta[a] > delta[b] : a > b;
  });
  ClusteringSolution sol;
  sol.centers = centers;
  sol.clusters.resize(centers.size());
  std::vector<bool> outlier(n, false);
  for (int i = 0; i < outlier_cap; ++i) outlier[order[i]] = true;
  for (int j = 0; j < n; ++j) {
    if (outlier[j]) {
      sol.outliers.push_back(j);
    } else {
      sol.clusters[nearest[j]].push_back(j);
      sol.cost += delta[j];
    }
  }
  return sol;
}

double ConstrainedWorkBound(const ConstrainedInstance& instance) {
  const double n = instance.matrix.cols();
  const int m = instance.matrix.rows();
  const int b = instance.budget;
  double subsets = 0;
  double binom = 1;
  for (int i = 0; i <= std::min(b, m); ++i) {
    subsets += binom;
    binom = binom * (m - i) / (i + 1);
  }
  return std::pow(n, instance.k) * subsets *
         std::pow(static_cast<double>(instance.relations.MaxSize()), b);
}

namespace {

constexpr std::int64_t kNoCost = std::numeric_limits<std::int64_t>::max();

struct ColumnClasses {
  std::vector<int> rep;
  std::vector<int> mult;
};

ColumnClasses GroupIdentical(const CategoricalMatrix& a) {
  ColumnClasses out;
  std::map<SymbolVector, int> index;
  for (int c = 0; c < a.cols(); ++c) {
    auto [it, inserted] =
        index.emplace(a.ColumnVector(c), static_cast<int>(out.rep.size()));
    if (inserted) {
      out.rep.push_back(c);
      out.mult.push_back(1);
    } else {
      ++out.mult[it->second];
    }
  }
  return out;
}

// Slot assignments over column classes: each slot takes a class (at most
// its multiplicity many times) or stays free; at least one slot is taken.
void EnumerateSlots(int k, const ColumnClasses& classes,
                    std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k, kFreeSlot);
  std::vector<int> used(classes.rep.size(), 0);
  auto rec = [&](auto&& self, int j, int taken) -> void {
    if (j == k) {
      if (taken > 0) out.push_back(cur);
      return;
    }
    for (size_t c = 0; c < classes.rep.size(); ++c) {
      if (used[c] == classes.mult[c]) continue;
      ++used[c];
      cur[j] = classes.rep[c];
      self(self, j + 1, taken + 1);
      --used[c];
    }
    cur[j] = kFreeSlot;
    self(self, j + 1, taken);
  };
  rec(rec, 0, 0);
}

// Compares k-tuples stored row by row as the concatenation c_1 c_2 ... c_k.
bool CentersLess(const std::vector<Symbol>& a, const std::vector<Symbol>& b,
                 int m, int k) {
  for (int j = 0; j < k; ++j) {
    for (int h = 0; h < m; ++h) {
      Symbol x = a[h * k + j];
      Symbol y = b[h * k + j];
      if (x != y) return x < y;
    }
  }
  return false;
}

struct Best {
  std::int64_t cost = kNoCost;
  std::vector<Symbol> rows;
  long origin = -1;
  std::vector<int> edited;
};

class Search {
 public:
  Search(const ConstrainedInstance& inst, const SolverOptions& options)
      : inst_(inst),
        a_(inst.matrix),
        m_(a_.rows()),
        n_(a_.cols()),
        k_(inst.k),
        options_(options) {}

  std::optional<ConstrainedOutcome> Run();

 private:
  struct Worker {
    Best best;
    std::vector<int> base;        // n * k distances to the refined tuple
    std::vector<Symbol> scratch;  // edited tuple rows
    std::vector<int> top;         // largest distances seen so far
    std::int64_t evaluated = 0;
  };

  void Load(const CandidateTuple& x, Worker& w) const;
  std::int64_t Cost(const CandidateTuple& x, std::span<const int> rows,
                    std::span<const int> choice, Worker& w) const;
  void Offer(const CandidateTuple& x, long origin, std::span<const int> rows,
             std::span<const int> choice, Worker& w) const;
  void EditsAt(const CandidateTuple& x, long origin,
               const std::vector<int>& rows, Worker& w) const;
  void DirectLevel(long index, int size, Worker& w) const;
  void HypergraphLevel(long index, int edges, Worker& w);
  std::vector<VertexMask> HostEdges(const CandidateTuple& x) const;

  const ConstrainedInstance& inst_;
  const CategoricalMatrix& a_;
  const int m_;
  const int n_;
  const int k_;
  const SolverOptions options_;
  ColumnClasses classes_;
  std::vector<CandidateTuple> admitted_;
  std::vector<std::vector<int>> alternatives_;  // per admitted tuple, per row
  std::vector<std::vector<VertexMask>> hosts_;
  std::vector<std::unordered_set<VertexMask>> seen_;
  std::vector<const PatternHypergraph*> patterns_;
};

void Search::Load(const CandidateTuple& x, Worker& w) const {
  w.base.assign(static_cast<size_t>(n_) * k_, 0);
  for (int c = 0; c < n_; ++c) {
    auto col = a_.Column(c);
    for (int h = 0; h < m_; ++h) {
      const Symbol* row = &x.rows[static_cast<size_t>(h) * k_];
      for (int j = 0; j < k_; ++j) w.base[c * k_ + j] += col[h] != row[j];
    }
  }
}

std::int64_t Search::Cost(const CandidateTuple& x, std::span<const int> rows,
                          std::span<const int> choice, Worker& w) const {
  const int cap = inst_.outlier_cap;
  std::int64_t total = 0;
  w.top.assign(cap, -1);
  for (int c = 0; c < n_; ++c) {
    int delta = std::numeric_limits<int>::max();
    for (int j = 0; j < k_; ++j) {
      int d = w.base[c * k_ + j];
      for (size_t i = 0; i < rows.size(); ++i) {
        const int h = rows[i];
        const Symbol cell = a_.at(h, c);
        d += (cell != inst_.relations.Tuple(h, choice[i])[j]) -
             (cell != x.rows[static_cast<size_t>(h) * k_ + j]);
      }
      delta = std::min(delta, d);
    }
    total += delta;
    // Keep the cap largest distances in ascending order.
    if (cap > 0 && delta > w.top[0]) {
      int i = 0;
      while (i + 1 < cap && w.top[i + 1] < delta) {
        w.top[i] = w.top[i + 1];
        ++i;
      }
      w.top[i] = delta;
    }
  }
  for (int d : w.top) total -= std::max(d, 0);
  return total;
}

void Search::Offer(const CandidateTuple& x, long origin,
                   std::span<const int> rows, std::span<const int> choice,
                   Worker& w) const {
  ++w.evaluated;
  const std::int64_t cost = Cost(x, rows, choice, w);
  if (cost > inst_.budget || cost > w.best.cost) return;
  w.scratch = x.rows;
  for (size_t i = 0; i < rows.size(); ++i) {
    auto z = inst_.relations.Tuple(rows[i], choice[i]);
    std::copy(z.begin(), z.end(),
              w.scratch.begin() + static_cast<size_t>(rows[i]) * k_);
  }
  if (cost == w.best.cost) {
    if (CentersLess(w.best.rows, w.scratch, m_, k_)) return;
    if (w.best.rows == w.scratch && w.best.origin < origin) return;
  }
  w.best.cost = cost;
  w.best.rows = w.scratch;
  w.best.origin = origin;
  w.best.edited.assign(rows.begin(), rows.end());
}

// Every center tuple that differs from x exactly at the given rows, each
// edited row taking a relation tuple other than x's own.
void Search::EditsAt(const CandidateTuple& x, long origin,
                     const std::vector<int>& rows, Worker& w) const {
  const auto& alt = alternatives_[origin];
  for (int h : rows) {
    if (alt[h] == 0) return;
  }
  std::vector<int> pos(rows.size(), 0);
  std::vector<int> choice(rows.size());
  auto own = [&](int h) {
    auto t = x.Row(h);
    int lo = 0;
    while (!std::equal(t.begin(), t.end(),
                       inst_.relations.Tuple(h, lo).begin())) {
      ++lo;
    }
    return lo;
  };
  std::vector<int> skip(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) skip[i] = own(rows[i]);
  while (true) {
    for (size_t i = 0; i < rows.size(); ++i) {
      choice[i] = pos[i] < skip[i] ? pos[i] : pos[i] + 1;
    }
    Offer(x, origin, rows, choice, w);
    size_t i = 0;
    while (i < rows.size() && ++pos[i] == alt[rows[i]]) pos[i++] = 0;
    if (i == rows.size()) break;
  }
}

void Search::DirectLevel(long index, int size, Worker& w) const {
  const CandidateTuple& x = admitted_[index];
  Load(x, w);
  if (size == 0) {
    Offer(x, index, {}, {}, w);
    return;
  }
  std::vector<int> rows(size);
  for (int i = 0; i < size; ++i) rows[i] = i;
  while (true) {
    EditsAt(x, index, rows, w);
    int i = size - 1;
    while (i >= 0 && rows[i] == m_ - size + i) --i;
    if (i < 0) break;
    ++rows[i];
    for (int j = i + 1; j < size; ++j) rows[j] = rows[j - 1] + 1;
  }
}

// Distinct edges of the difference hypergraph around x, comparing only the
// slots that x takes from the matrix.
std::vector<VertexMask> Search::HostEdges(const CandidateTuple& x) const {
  const int cap = 2 * inst_.budget;
  const size_t classes = classes_.rep.size();
  std::vector<std::vector<VertexMask>> diff;
  for (int j = 0; j < k_; ++j) {
    if (x.source_columns[j] == kFreeSlot) continue;
    std::vector<VertexMask> d(classes, 0);
    for (size_t c = 0; c < classes; ++c) {
      auto col = a_.Column(classes_.rep[c]);
      for (int h = 0; h < m_; ++h) {
        if (col[h] != x.rows[static_cast<size_t>(h) * k_ + j]) {
          d[c] |= VertexMask{1} << h;
        }
      }
    }
    diff.push_back(std::move(d));
  }
  std::unordered_set<VertexMask> edges;
  auto rec = [&](auto&& self, size_t slot, VertexMask acc) -> void {
    if (std::popcount(acc) > cap) return;
    if (slot == diff.size()) {
      if (acc != 0) edges.insert(acc);
      return;
    }
    for (VertexMask d : diff[slot]) self(self, slot + 1, acc | d);
  };
  rec(rec, 0, 0);
  std::vector<VertexMask> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

void Search::HypergraphLevel(long index, int edges, Worker& w) {
  const CandidateTuple& x = admitted_[index];
  Load(x, w);
  if (edges == 0) {
    Offer(x, index, {}, {}, w);
    return;
  }
  if (hosts_[index].empty()) return;
  Hypergraph host;
  for (VertexMask e : hosts_[index]) host.AddEdge(e);
  auto& seen = seen_[index];
  std::vector<int> rows;
  for (const PatternHypergraph* p : patterns_) {
    if (static_cast<int>(p->edges.size()) != edges) continue;
    for (VertexMask occ : FindOccurrences(*p, host)) {
      if (!seen.insert(occ).second) continue;
      rows.clear();
      for (int h = 0; h < m_; ++h) {
        if ((occ >> h) & 1) rows.push_back(h);
      }
      EditsAt(x, index, rows, w);
    }
  }
}

std::optional<ConstrainedOutcome> Search::Run() {
  inst_.Validate();
  const bool hyper =
      options_.mode == SearchMode::kHypergraph && inst_.budget > 0;
  if (options_.mode == SearchMode::kHypergraph && m_ > kMaxHostVertices) {
    throw ContractViolation("hypergraph mode supports at most 64 rows");
  }
  const double work = ConstrainedWorkBound(inst_);
  if (work > options_.work_ceiling) {
    throw WorkCeilingExceeded("constrained search needs about " +
                              std::to_string(work) +
                              " steps, above the ceiling of " +
                              std::to_string(options_.work_ceiling));
  }
  if (hyper) {
    for (const auto& p :
         EnumeratePatterns(inst_.budget, EdgeBudget(inst_.budget),
                           options_.work_ceiling)) {
      patterns_.push_back(&p);
    }
  }
  const int threads = internal::ResolveThreads(options_.threads);

  classes_ = GroupIdentical(a_);
  std::vector<std::vector<int>> slots;
  EnumerateSlots(k_, classes_, slots);
  std::vector<std::optional<CandidateTuple>> refined(slots.size());
  internal::ParallelFor(static_cast<long>(slots.size()), threads,
                        [&](long i, int) {
                          refined[i] = RefineTuple(a_, slots[i],
                                                   inst_.relations,
                                                   inst_.budget);
                        });
  for (auto& r : refined) {
    if (r) admitted_.push_back(std::move(*r));
  }
  refined.clear();
  if (admitted_.empty()) return std::nullopt;

  alternatives_.resize(admitted_.size());
  for (size_t i = 0; i < admitted_.size(); ++i) {
    alternatives_[i].resize(m_);
    for (int h = 0; h < m_; ++h) {
      alternatives_[i][h] = inst_.relations.Size(h) - 1;
    }
  }
  if (hyper) {
    hosts_.resize(admitted_.size());
    seen_.resize(admitted_.size());
    internal::ParallelFor(static_cast<long>(admitted_.size()), threads,
                          [&](long i, int) {
                            hosts_[i] = HostEdges(admitted_[i]);
                            seen_[i].insert(0);
                          });
  }

  std::vector<Worker> workers(threads);
  const int levels = hyper ? EdgeBudget(inst_.budget)
                           : (options_.mode == SearchMode::kDirect
                                  ? std::min(inst_.budget, m_)
                                  : 0);
  for (int level = 0; level <= levels; ++level) {
    internal::ParallelFor(static_cast<long>(admitted_.size()), threads,
                          [&](long i, int wi) {
                            if (hyper) {
                              HypergraphLevel(i, level, workers[wi]);
                            } else {
                              DirectLevel(i, level, workers[wi]);
                            }
                          });
    std::int64_t best = kNoCost;
    for (const Worker& w : workers) best = std::min(best, w.best.cost);
    if (best == 0) break;
  }

  const Best* best = nullptr;
  std::int64_t evaluated = 0;
  for (const Worker& w : workers) {
    evaluated += w.evaluated;
    if (w.best.cost == kNoCost) continue;
    if (best == nullptr || w.best.cost < best->cost ||
        (w.best.cost == best->cost &&
         (CentersLess(w.best.rows, best->rows, m_, k_) ||
          (w.best.rows == best->rows && w.best.origin < best->origin)))) {
      best = &w.best;
    }
  }
  if (best == nullptr) return std::nullopt;

  ConstrainedOutcome out;
  out.generator = admitted_[best->origin];
  CandidateTuple centers = out.generator;
  centers.rows = best->rows;
  out.solution = GreedyAssign(a_, centers.Columns(), inst_.outlier_cap);
  if (out.solution.cost != best->cost) {
    throw InvalidSolution("internal cost mismatch in constrained search");
  }
  out.edited_rows = best->edited;
  out.candidates = evaluated;
  return out;
}

}  // namespace

std::optional<ConstrainedOutcome> SolveConstrained(
    const ConstrainedInstance& instance, const SolverOptions& options) {
  return Search(instance, options).Run();
}

}  // namespace catclust

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

#include "catclust/relations.hpp"

#include <algorithm>
#include <string>

namespace catclust {

RelationSet::RelationSet(int arity,
                         const std::vector<std::vector<SymbolVector>>& rows)
    : arity_(arity) {
  if (arity < 1) throw ContractViolation("relation arity must be positive");
  offsets_.push_back(0);
  for (size_t r = 0; r < rows.size(); ++r) {
    std::vector<SymbolVector> tuples = rows[r];
    if (tuples.empty()) {
      throw ContractViolation("relation for row " + std::to_string(r + 1) +
                              " is empty");
    }
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != arity) {
        throw ContractViolation("relation arity mismatch in row " +
                                std::to_string(r + 1) + ": expected " +
                                std::to_string(arity) + ", got " +
                                std::to_string(t.size()));
      }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    for (const auto& t : tuples) data_.insert(data_.end(), t.begin(), t.end());
    offsets_.push_back(offsets_.back() + static_cast<int>(tuples.size()));
  }
}

RelationSet RelationSet::Uniform(int arity,
                                 const std::vector<SymbolVector>& tuples,
                                 int rows) {
  return RelationSet(arity,
                     std::vector<std::vector<SymbolVector>>(rows, tuples));
}

RelationSet RelationSet::Full(const Alphabet& alphabet, int arity, int rows) {
  return Uniform(arity, AllStrings(alphabet.size(), arity), rows);
}

int RelationSet::MaxSize() const {
  int best = 0;
  for (int r = 0; r < rows(); ++r) best = std::max(best, Size(r));
  return best;
}

std::span<const Symbol> RelationSet::Tuple(int row, int index) const {
  return std::span<const Symbol>(data_).subspan(
      static_cast<size_t>(offsets_[row] + index) * arity_, arity_);
}

bool RelationSet::Contains(int row, std::span<const Symbol> tuple) const {
  int lo = 0;
  int hi = Size(row);
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    auto t = Tuple(row, mid);
    if (std::lexicographical_compare(t.begin(), t.end(), tuple.begin(),
                                     tuple.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == Size(row)) return false;
  auto t = Tuple(row, lo);
  return std::equal(t.begin(), t.end(), tuple.begin(), tuple.end());
}

std::vector<SymbolVector> RelationSet::Tuples(int row) const {
  std::vector<SymbolVector> out;
  for (int i = 0; i < Size(row); ++i) {
    auto t = Tuple(row, i);
    out.emplace_back(t.begin(), t.end());
  }
  return out;
}

int RelationSet::MaxSymbol() const {
  int best = -1;
  for (Symbol s : data_) best = std::max(best, static_cast<int>(s));
  return best;
}

std::vector<SymbolVector> AllStrings(int alphabet_size, int length) {
  std::vector<SymbolVector> out;
  SymbolVector cur(length, 0);
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[i] + 1 == alphabet_size) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

}  // namespace catclust

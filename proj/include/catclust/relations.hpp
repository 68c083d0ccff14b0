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

#ifndef CATCLUST_RELATIONS_HPP_
#define CATCLUST_RELATIONS_HPP_

#include <span>
#include <vector>

#include "catclust/matrix.hpp"

namespace catclust {

// One k-ary relation per matrix row. Each relation is kept sorted and
// duplicate-free, so Tuple(row, 0) is the lexicographically smallest tuple.
class RelationSet {
 public:
  RelationSet(int arity, const std::vector<std::vector<SymbolVector>>& rows);

  static RelationSet Uniform(int arity, const std::vector<SymbolVector>& tuples,
                             int rows);
  static RelationSet Full(const Alphabet& alphabet, int arity, int rows);

  int arity() const { return arity_; }
  int rows() const { return static_cast<int>(offsets_.size()) - 1; }

  int Size(int row) const { return offsets_[row + 1] - offsets_[row]; }
  int MaxSize() const;
  std::span<const Symbol> Tuple(int row, int index) const;
  bool Contains(int row, std::span<const Symbol> tuple) const;
  std::vector<SymbolVector> Tuples(int row) const;

  // Largest symbol used by any tuple, or -1 for an empty set.
  int MaxSymbol() const;

 private:
  int arity_;
  std::vector<int> offsets_;  // tuple index range per row
  std::vector<Symbol> data_;  // flattened tuples
};

// All |alphabet|^length strings in lexicographic order.
std::vector<SymbolVector> AllStrings(int alphabet_size, int length);

}  // namespace catclust

#endif  // CATCLUST_RELATIONS_HPP_

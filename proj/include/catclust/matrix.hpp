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

#ifndef CATCLUST_MATRIX_HPP_
#define CATCLUST_MATRIX_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace catclust {

using Symbol = std::uint8_t;
using SymbolVector = std::vector<Symbol>;

inline constexpr int kMaxAlphabetSize = 256;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was not met by its arguments.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A configured search-space ceiling would be exceeded.
class WorkCeilingExceeded : public Error {
 public:
  using Error::Error;
};

// A solution handed to an operation does not have the promised shape.
class InvalidSolution : public Error {
 public:
  using Error::Error;
};

// Ceiling used when the caller does not set one. Honors the
// CATCLUST_WORK_CEILING environment variable.
double DefaultWorkCeiling();

class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const { return size_; }
  bool Contains(int symbol) const { return symbol >= 0 && symbol < size_; }

  bool operator==(const Alphabet&) const = default;

 private:
  int size_;
};

// Dense m x n grid of symbols. Columns are the data points.
class CategoricalMatrix {
 public:
  CategoricalMatrix(Alphabet alphabet, int rows, int cols,
                    std::vector<Symbol> cells);

  static CategoricalMatrix FromRows(Alphabet alphabet,
                                    const std::vector<std::vector<int>>& rows);
  static CategoricalMatrix FromColumns(Alphabet alphabet,
                                       const std::vector<SymbolVector>& cols);

  const Alphabet& alphabet() const { return alphabet_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Symbol at(int row, int col) const { return cells_[row * cols_ + col]; }

  std::span<const Symbol> cells() const { return cells_; }
  std::span<const Symbol> Row(int row) const;
  std::span<const Symbol> Column(int col) const;
  SymbolVector ColumnVector(int col) const;

  // Rows listed in `removed` are dropped; the remaining rows keep their
  // relative order.
  CategoricalMatrix WithoutRows(std::span<const int> removed) const;
  CategoricalMatrix SelectColumns(std::span<const int> cols) const;

  bool operator==(const CategoricalMatrix& other) const;

 private:
  Alphabet alphabet_;
  int rows_;
  int cols_;
  std::vector<Symbol> cells_;
  std::vector<Symbol> by_column_;
};

int Hamming(std::span<const Symbol> x, std::span<const Symbol> y);

CategoricalMatrix Transpose(const CategoricalMatrix& matrix);

}  // namespace catclust

#endif  // CATCLUST_MATRIX_HPP_

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

#include "catclust/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace catclust {

double DefaultWorkCeiling() {
  if (const char* env = std::getenv("CATCLUST_WORK_CEILING")) {
    char* end = nullptr;
    double value = std::strtod(env, &end);
    if (end != env && value > 0) return value;
  }
  return 1e9;
}

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxAlphabetSize) {
    throw ContractViolation("alphabet size must be in [1, " +
                            std::to_string(kMaxAlphabetSize) + "], got " +
                            std::to_string(size));
  }
}

CategoricalMatrix::CategoricalMatrix(Alphabet alphabet, int rows, int cols,
                                     std::vector<Symbol> cells)
    : alphabet_(alphabet), rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1) {
    throw ContractViolation("matrix needs at least one row and one column");
  }
  if (cells_.size() != static_cast<size_t>(rows) * cols) {
    throw ContractViolation("matrix cell count does not match its shape");
  }
  for (Symbol s : cells_) {
    if (!alphabet_.Contains(s)) {
      throw ContractViolation("symbol " + std::to_string(s) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_.size()));
    }
  }
  by_column_.resize(cells_.size());
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      by_column_[c * rows_ + r] = cells_[r * cols_ + c];
    }
  }
}

CategoricalMatrix CategoricalMatrix::FromRows(
    Alphabet alphabet, const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw ContractViolation("matrix needs at least one row");
  const int n = static_cast<int>(rows.front().size());
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw ContractViolation("ragged rows");
    }
    for (int v : row) {
      if (!alphabet.Contains(v)) {
        throw ContractViolation("symbol " + std::to_string(v) +
                                " outside alphabet of size " +
                                std::to_string(alphabet.size()));
      }
      cells.push_back(static_cast<Symbol>(v));
    }
  }
  return CategoricalMatrix(alphabet, static_cast<int>(rows.size()), n,
                           std::move(cells));
}

CategoricalMatrix CategoricalMatrix::FromColumns(
    Alphabet alphabet, const std::vector<SymbolVector>& cols) {
  if (cols.empty()) throw ContractViolation("matrix needs at least one column");
  const int m = static_cast<int>(cols.front().size());
  const int n = static_cast<int>(cols.size());
  std::vector<Symbol> cells(static_cast<size_t>(m) * n);
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(cols[c].size()) != m) {
      throw ContractViolation("columns of different lengths");
    }
    for (int r = 0; r < m; ++r) cells[r * n + c] = cols[c][r];
  }
  return CategoricalMatrix(alphabet, m, n, std::move(cells));
}

std::span<const Symbol> CategoricalMatrix::Row(int row) const {
  return std::span<const Symbol>(cells_).subspan(
      static_cast<size_t>(row) * cols_, cols_);
}

std::span<const Symbol> CategoricalMatrix::Column(int col) const {
  return std::span<const Symbol>(by_column_)
      .subspan(static_cast<size_t>(col) * rows_, rows_);
}

SymbolVector CategoricalMatrix::ColumnVector(int col) const {
  auto c = Column(col);
  return SymbolVector(c.begin(), c.end());
}

CategoricalMatrix CategoricalMatrix::WithoutRows(
    std::span<const int> removed) const {
  std::vector<bool> drop(rows_, false);
  for (int r : removed) {
    if (r < 0 || r >= rows_) throw ContractViolation("row index out of range");
    drop[r] = true;
  }
  std::vector<Symbol> cells;
  int kept = 0;
  for (int r = 0; r < rows_; ++r) {
    if (drop[r]) continue;
    auto row = Row(r);
    cells.insert(cells.end(), row.begin(), row.end());
    ++kept;
  }
  return CategoricalMatrix(alphabet_, kept, cols_, std::move(cells));
}

CategoricalMatrix CategoricalMatrix::SelectColumns(
    std::span<const int> cols) const {
  std::vector<Symbol> cells;
  cells.reserve(static_cast<size_t>(rows_) * cols.size());
  for (int c : cols) {
    if (c < 0 || c >= cols_) {
      throw ContractViolation("column index out of range");
    }
  }
  for (int r = 0; r < rows_; ++r) {
    for (int c : cols) cells.push_back(at(r, c));
  }
  return CategoricalMatrix(alphabet_, rows_, static_cast<int>(cols.size()),
                           std::move(cells));
}

bool CategoricalMatrix::operator==(const CategoricalMatrix& other) const {
  return alphabet_ == other.alphabet_ && rows_ == other.rows_ &&
         cols_ == other.cols_ && cells_ == other.cells_;
}

int Hamming(std::span<const Symbol> x, std::span<const Symbol> y) {
  if (x.size() != y.size()) {
    throw ContractViolation("hamming: length mismatch (" +
                            std::to_string(x.size()) + " vs " +
                            std::to_string(y.size()) + ")");
  }
  int d = 0;
  for (size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

CategoricalMatrix Transpose(const CategoricalMatrix& matrix) {
  std::vector<Symbol> cells;
  cells.reserve(matrix.cells().size());
  for (int c = 0; c < matrix.cols(); ++c) {
    auto col = matrix.Column(c);
    cells.insert(cells.end(), col.begin(), col.end());
  }
  return CategoricalMatrix(matrix.alphabet(), matrix.cols(), matrix.rows(),
                           std::move(cells));
}

}  // namespace catclust

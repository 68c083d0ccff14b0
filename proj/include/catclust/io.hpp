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

#ifndef CATCLUST_IO_HPP_
#define CATCLUST_IO_HPP_

#include <string>
#include <vector>

#include "catclust/column_outliers.hpp"
#include "catclust/matrix.hpp"
#include "catclust/relations.hpp"

namespace catclust {

// Raised for malformed input text; the message names the line.
class ParseError : public Error {
 public:
  using Error::Error;
};

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

// One matrix row per line, comma-separated base-10 integers. Blank lines
// and lines starting with '#' are skipped. alphabet_size = 0 infers
// max(2, largest symbol + 1).
CategoricalMatrix ParseMatrixCsv(const std::string& text,
                                 int alphabet_size = 0);
std::string FormatMatrixCsv(const CategoricalMatrix& matrix);

// One line per matrix row: ';'-separated tuples of k comma-separated
// symbols, or '*' for every tuple. Lines starting with '#' are comments.
RelationSet ParseRelations(const std::string& text, int k, int rows,
                           const Alphabet& alphabet);

// One line per set: whitespace- or comma-separated 1-based column ids of
// `matrix`, each optionally suffixed ":weight".
std::vector<std::vector<WeightedColumn>> ParseRestrictedSets(
    const std::string& text, const CategoricalMatrix& matrix);

}  // namespace catclust

#endif  // CATCLUST_IO_HPP_

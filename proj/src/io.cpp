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

#include "catclust/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace catclust {

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(Trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

bool ParseInt(const std::string& token, int* value) {
  if (token.empty()) return false;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

std::string At(int line) { return "line " + std::to_string(line); }

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

CategoricalMatrix ParseMatrixCsv(const std::string& text, int alphabet_size) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int largest = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<int> row;
    for (const std::string& cell : Split(t, ',')) {
      int v;
      if (!ParseInt(cell, &v) || v < 0) {
        throw ParseError("malformed CSV at " + At(line_no) +
                         ": non-integer cell '" + cell + "'");
      }
      if (alphabet_size > 0 && v >= alphabet_size) {
        throw ParseError("symbol " + std::to_string(v) + " at " +
                         At(line_no) + " is not below the alphabet size " +
                         std::to_string(alphabet_size));
      }
      if (v >= kMaxAlphabetSize) {
        throw ParseError("symbol " + std::to_string(v) + " at " +
                         At(line_no) + " exceeds the largest alphabet");
      }
      largest = std::max(largest, v);
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw ParseError("malformed CSV at " + At(line_no) + ": ragged row with " +
                       std::to_string(row.size()) + " cells, expected " +
                       std::to_string(rows[0].size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("malformed CSV: no data rows");
  const int p = alphabet_size > 0 ? alphabet_size : std::max(2, largest + 1);
  return CategoricalMatrix::FromRows(Alphabet(p), rows);
}

std::string FormatMatrixCsv(const CategoricalMatrix& matrix) {
  std::ostringstream out;
  for (int h = 0; h < matrix.rows(); ++h) {
    for (int j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      out << static_cast<int>(matrix.at(h, j));
    }
    out << '\n';
  }
  return out.str();
}

RelationSet ParseRelations(const std::string& text, int k, int rows,
                           const Alphabet& alphabet) {
  std::vector<std::string> lines;
  std::vector<int> numbers;
  {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = Trim(line);
      if (!t.empty() && t[0] == '#') continue;
      lines.push_back(t);
      numbers.push_back(line_no);
    }
  }
  while (!lines.empty() && lines.back().empty()) {
    lines.pop_back();
    numbers.pop_back();
  }
  if (static_cast<int>(lines.size()) != rows) {
    throw ParseError("relations file has " + std::to_string(lines.size()) +
                     " lines but the matrix has " + std::to_string(rows) +
                     " rows");
  }
  std::vector<std::vector<SymbolVector>> relations;
  for (size_t i = 0; i < lines.size(); ++i) {
    const int line_no = numbers[i];
    if (lines[i].empty()) {
      throw ParseError("empty relation at " + At(line_no));
    }
    if (lines[i] == "*") {
      relations.push_back(AllStrings(alphabet.size(), k));
      continue;
    }
    std::vector<SymbolVector> tuples;
    for (const std::string& tuple : Split(lines[i], ';')) {
      if (tuple.empty()) {
        throw ParseError("empty tuple in relation at " + At(line_no));
      }
      const auto cells = Split(tuple, ',');
      if (static_cast<int>(cells.size()) != k) {
        throw ParseError("relation arity mismatch at " + At(line_no) +
                         ": tuple '" + tuple + "' has " +
                         std::to_string(cells.size()) + " symbols, expected " +
                         std::to_string(k));
      }
      SymbolVector t;
      for (const std::string& cell : cells) {
        int v;
        if (!ParseInt(cell, &v) || v < 0) {
          throw ParseError("non-integer symbol '" + cell +
                           "' in relation at " + At(line_no));
        }
        if (!alphabet.Contains(v)) {
          throw ParseError("relation symbol " + std::to_string(v) + " at " +
                           At(line_no) + " is not below the alphabet size " +
                           std::to_string(alphabet.size()));
        }
        t.push_back(static_cast<Symbol>(v));
      }
      tuples.push_back(std::move(t));
    }
    relations.push_back(std::move(tuples));
  }
  return RelationSet(k, relations);
}

std::vector<std::vector<WeightedColumn>> ParseRestrictedSets(
    const std::string& text, const CategoricalMatrix& matrix) {
  std::vector<std::vector<WeightedColumn>> sets;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream tokens(t);
    std::string token;
    std::vector<WeightedColumn> set;
    while (tokens >> token) {
      const auto colon = token.find(':');
      int col;
      int weight = 1;
      const bool ok =
          ParseInt(token.substr(0, colon), &col) &&
          (colon == std::string::npos ||
           ParseInt(token.substr(colon + 1), &weight));
      if (!ok) {
        throw ParseError("bad set member '" + token + "' at " + At(line_no));
      }
      if (col < 1 || col > matrix.cols()) {
        throw ParseError("column " + std::to_string(col) + " at " +
                         At(line_no) + " is out of range");
      }
      if (weight < 1) {
        throw ParseError("weight at " + At(line_no) + " must be positive");
      }
      set.push_back(WeightedColumn{matrix.ColumnVector(col - 1), weight});
    }
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw ParseError("restricted sets file lists no sets");
  return sets;
}

}  // namespace catclust

// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qcorr/experiments.hpp"
#include "qcorr/frqi.hpp"

namespace qcorr {

using Cell = std::variant<long long, double, std::string>;

/// Header plus records. CSV rendering: ',' separators, '\n' terminators,
/// doubles in fixed notation with 6 decimals.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return header_.size(); }
  const Cell& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

  std::string to_csv() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

std::string format_fixed6(double v);
std::string format_cell(const Cell& cell);

CsvTable entropy_table(const EntropyRow& row);
CsvTable table1_table(std::span<const Table1Row> rows);
CsvTable table2_table(std::span<const Table2Row> rows);
CsvTable sweep_table(std::span<const SweepRow> rows);
CsvTable translate_table(std::span<const TranslateRow> rows);

// One "index bitstring amplitude" line per amplitude with |a| > 1e-12.
std::string state_dump(const StateVector& state);

}  // namespace qcorr

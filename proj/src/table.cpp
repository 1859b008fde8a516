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

#include "qcorr/table.hpp"

#include <cmath>
#include <cstdio>

#include "qcorr/error.hpp"

namespace qcorr {

void CsvTable::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) {
    throw InputError("row has " + std::to_string(row.size()) + " cells, header has " +
                     std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string format_fixed6(double v) {
  if (!std::isfinite(v)) throw NumericError("non-finite value in output table");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_fixed6(*d);
  return std::get<std::string>(cell);
}

std::string CsvTable::to_csv() const {
  std::string out;
  for (std::size_t j = 0; j < header_.size(); ++j) {
    if (j) out += ',';
    out += header_[j];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_cell(row[j]);
    }
    out += '\n';
  }
  return out;
}

CsvTable entropy_table(const EntropyRow& r) {
  CsvTable t({"purity_cp", "purity_c", "purity_p", "S_c", "S_p"});
  t.add_row({r.purity_cp, r.purity_c, r.purity_p, r.s_c, r.s_p});
  return t;
}

CsvTable table1_table(std::span<const Table1Row> rows) {
  CsvTable t({"pattern", "purity_cp", "purity_c", "purity_p", "S_c", "S_p"});
  for (const auto& row : rows) {
    const auto& r = row.values;
    t.add_row({row.pattern, r.purity_cp, r.purity_c, r.purity_p, r.s_c, r.s_p});
  }
  return t;
}

CsvTable table2_table(std::span<const Table2Row> rows) {
  CsvTable t({"pattern", "S_A", "S_B", "S_12", "S_AB", "S_A12", "S_B12", "I0", "IT", "ID"});
  for (const auto& row : rows) {
    const auto& r = row.report;
    t.add_row({row.pattern, r.s_a, r.s_b, r.s_12, r.s_ab, r.s_a12, r.s_b12, r.i0, r.it, r.id});
  }
  return t;
}

CsvTable sweep_table(std::span<const SweepRow> rows) {
  CsvTable t({"x", "S_AB_q", "I_T", "H_AB_c"});
  for (const auto& r : rows) t.add_row({static_cast<long long>(r.x), r.s_ab_quantum, r.it, r.h_ab_classical});
  return t;
}

CsvTable translate_table(std::span<const TranslateRow> rows) {
  CsvTable t({"shift", "S_A", "S_B", "S_AB", "I_AB", "I_T", "H_A", "H_B", "H_AB", "I_c", "NMI"});
  for (const auto& r : rows) {
    const auto& c = r.classical;
    t.add_row({static_cast<long long>(r.shift), r.s_a, r.s_b, r.s_ab, r.i_ab, r.it, c.h_a, c.h_b, c.h_ab,
               c.mutual, c.nmi});
  }
  return t;
}

std::string state_dump(const StateVector& state) {
  const auto n = state.qubits();
  std::string out;
  for (std::size_t idx = 0; idx < state.amplitudes.size(); ++idx) {
    const double a = state.amplitudes[idx];
    if (std::abs(a) <= 1e-12) continue;
    std::string bits(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
      if ((idx >> (n - 1 - q)) & 1U) bits[q] = '1';
    }
    out += std::to_string(idx) + ' ' + bits + ' ' + format_fixed6(a) + '\n';
  }
  return out;
}

}  // namespace qcorr

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

#include <string>
#include <vector>

#include "qcorr/image.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

// Single-image color/position entanglement.
struct EntropyRow {
  double purity_cp = 0;
  double purity_c = 0;
  double purity_p = 0;
  double s_c = 0;
  double s_p = 0;
};

struct Table1Row {
  std::string pattern;
  EntropyRow values;
};

struct Table2Row {
  std::string pattern;
  CorrelationReport report;
};

struct SweepRow {
  int x = 0;
  double s_ab_quantum = 0;
  double it = 0;
  double h_ab_classical = 0;
};

struct TranslateRow {
  long shift = 0;
  double s_a = 0, s_b = 0, s_ab = 0, i_ab = 0, it = 0;
  ClassicalEntropies classical;
};

EntropyRow image_entropy(const Image& image);

// All 2x2 binary patterns "0000".."1111" in lexicographic order.
std::vector<std::string> binary_patterns_2x2();

std::vector<Table1Row> run_table1();

// patron must be a binary 2x2 image.
std::vector<Table2Row> run_table2(const Image& patron);

// Row x uses set_pixel(base_b, pixel_index, x), x = 0..255.
std::vector<SweepRow> run_sweep(const Image& base_a, const Image& base_b, long pixel_index);

// Remaps the binary patron 0 -> low_gray, 255 -> high_gray, then compares it
// against each cyclic translation k = 0..side^2-1. Rows are evaluated on
// worker threads and returned in ascending shift order.
std::vector<TranslateRow> run_translate(const Image& patron, int low_gray, int high_gray);

}  // namespace qcorr

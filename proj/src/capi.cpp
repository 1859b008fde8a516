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

#include "qcorr/qcorr.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qcorr/error.hpp"
#include "qcorr/experiments.hpp"
#include "qcorr/frqi.hpp"
#include "qcorr/image.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/table.hpp"

struct qcorr_image {
  qcorr::Image image;
};

struct qcorr_table {
  qcorr::CsvTable table;
};

namespace {

std::string& last_error() {
  thread_local std::string message;
  return message;
}

qcorr_status fail(qcorr_status status, const char* what) {
  last_error() = what;
  return status;
}

template <class Fn>
qcorr_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return QCORR_OK;
  } catch (const qcorr::InputError& e) {
    return fail(QCORR_ERR_INPUT, e.what());
  } catch (const qcorr::NumericError& e) {
    return fail(QCORR_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QCORR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QCORR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QCORR_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw qcorr::InputError(std::string(name) + " is null");
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const qcorr::Cell& cell_at(const qcorr_table* t, size_t row, size_t col) {
  require(t, "table");
  if (row >= t->table.rows() || col >= t->table.cols()) {
    throw qcorr::InputError("cell (" + std::to_string(row) + ", " + std::to_string(col) + ") out of range");
  }
  return t->table.at(row, col);
}

}  // namespace

extern "C" {

const char* qcorr_version(void) { return "1.0.0"; }

const char* qcorr_last_error(void) { return last_error().c_str(); }

qcorr_status qcorr_image_parse(const char* spec, qcorr_image** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new qcorr_image{qcorr::parse_image_argument(spec)};
  });
}

qcorr_status qcorr_image_from_pixels(int side, const int* pixels, size_t count, qcorr_image** out) {
  return guarded([&] {
    require(pixels, "pixels");
    require(out, "out");
    *out = new qcorr_image{qcorr::Image(side, std::span<const int>(pixels, count))};
  });
}

qcorr_status qcorr_image_read_pgm(const unsigned char* bytes, size_t size, qcorr_image** out) {
  return guarded([&] {
    require(bytes, "bytes");
    require(out, "out");
    *out = new qcorr_image{qcorr::read_pgm(std::span<const std::uint8_t>(bytes, size))};
  });
}

qcorr_status qcorr_image_write_pgm_file(const qcorr_image* image, const char* path) {
  return guarded([&] {
    require(image, "image");
    require(path, "path");
    qcorr::write_pgm_file(image->image, path);
  });
}

qcorr_status qcorr_image_default_patron(qcorr_image** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qcorr_image{qcorr::default_patron()};
  });
}

int qcorr_image_side(const qcorr_image* image) { return image ? image->image.side() : 0; }

qcorr_status qcorr_image_pixels(const qcorr_image* image, int* out, size_t count) {
  return guarded([&] {
    require(image, "image");
    require(out, "out");
    const auto px = image->image.pixels();
    if (count < px.size()) throw qcorr::InputError("output buffer too small for image pixels");
    for (size_t i = 0; i < px.size(); ++i) out[i] = px[i];
  });
}

void qcorr_image_free(qcorr_image* image) { delete image; }

qcorr_status qcorr_correlation_report(const qcorr_image* a, const qcorr_image* b, qcorr_report* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const auto r = qcorr::correlation_report(a->image, b->image);
    const auto& c = *r.classical;
    *out = qcorr_report{r.s_a, r.s_b, r.s_12, r.s_ab, r.s_a12, r.s_b12, r.s_total, r.i0, r.it, r.id,
                        r.i_ab, c.h_a, c.h_b, c.h_ab, c.mutual, c.nmi};
  });
}

qcorr_status qcorr_run_entropy(const qcorr_image* image, qcorr_table** out) {
  return guarded([&] {
    require(image, "image");
    require(out, "out");
    *out = new qcorr_table{qcorr::entropy_table(qcorr::image_entropy(image->image))};
  });
}

qcorr_status qcorr_run_table1(qcorr_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qcorr_table{qcorr::table1_table(qcorr::run_table1())};
  });
}

qcorr_status qcorr_run_table2(const qcorr_image* patron, qcorr_table** out) {
  return guarded([&] {
    require(patron, "patron");
    require(out, "out");
    *out = new qcorr_table{qcorr::table2_table(qcorr::run_table2(patron->image))};
  });
}

qcorr_status qcorr_run_sweep(const qcorr_image* base_a, const qcorr_image* base_b, long pixel_index,
                             qcorr_table** out) {
  return guarded([&] {
    require(base_a, "base_a");
    require(base_b, "base_b");
    require(out, "out");
    *out = new qcorr_table{qcorr::sweep_table(qcorr::run_sweep(base_a->image, base_b->image, pixel_index))};
  });
}

qcorr_status qcorr_run_translate(const qcorr_image* patron, int low_gray, int high_gray, qcorr_table** out) {
  return guarded([&] {
    require(patron, "patron");
    require(out, "out");
    *out = new qcorr_table{qcorr::translate_table(qcorr::run_translate(patron->image, low_gray, high_gray))};
  });
}

qcorr_status qcorr_encode_dump(const qcorr_image* image, char** out_text) {
  return guarded([&] {
    require(image, "image");
    require(out_text, "out_text");
    *out_text = dup_string(qcorr::state_dump(qcorr::encode_frqi(image->image)));
  });
}

size_t qcorr_table_rows(const qcorr_table* table) { return table ? table->table.rows() : 0; }

size_t qcorr_table_cols(const qcorr_table* table) { return table ? table->table.cols() : 0; }

const char* qcorr_table_column(const qcorr_table* table, size_t col) {
  if (table == nullptr || col >= table->table.cols()) return nullptr;
  return table->table.header()[col].c_str();
}

qcorr_status qcorr_table_number(const qcorr_table* table, size_t row, size_t col, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto& cell = cell_at(table, row, col);
    if (const auto* i = std::get_if<long long>(&cell)) {
      *out = static_cast<double>(*i);
    } else if (const auto* d = std::get_if<double>(&cell)) {
      *out = *d;
    } else {
      throw qcorr::InputError("cell (" + std::to_string(row) + ", " + std::to_string(col) + ") is text");
    }
  });
}

qcorr_status qcorr_table_cell_text(const qcorr_table* table, size_t row, size_t col, char** out_text) {
  return guarded([&] {
    require(out_text, "out_text");
    *out_text = dup_string(qcorr::format_cell(cell_at(table, row, col)));
  });
}

qcorr_status qcorr_table_csv(const qcorr_table* table, char** out_text) {
  return guarded([&] {
    require(table, "table");
    require(out_text, "out_text");
    *out_text = dup_string(table->table.to_csv());
  });
}

void qcorr_table_free(qcorr_table* table) { delete table; }

void qcorr_string_free(char* text) { std::free(text); }

}  // extern "C"

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

// Exercises libqcorr strictly through qcorr/qcorr.h.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "qcorr/qcorr.h"

namespace {

qcorr_image* parse(const char* spec) {
  qcorr_image* img = nullptr;
  REQUIRE(qcorr_image_parse(spec, &img) == QCORR_OK);
  return img;
}

std::string take(char* text) {
  std::string s(text);
  qcorr_string_free(text);
  return s;
}

}  // namespace

TEST_CASE("image handles") {
  qcorr_image* img = parse("graylist:51,204,204,51");
  CHECK(qcorr_image_side(img) == 2);
  int px[4] = {};
  CHECK(qcorr_image_pixels(img, px, 4) == QCORR_OK);
  CHECK(px[1] == 204);
  CHECK(qcorr_image_pixels(img, px, 3) == QCORR_ERR_INPUT);
  qcorr_image_free(img);

  const int raw[4] = {255, 0, 0, 0};
  qcorr_image* from = nullptr;
  CHECK(qcorr_image_from_pixels(2, raw, 4, &from) == QCORR_OK);
  qcorr_image_free(from);
  qcorr_image_free(nullptr);

  const unsigned char pgm[] = {'P', '5', '\n', '2', ' ', '2', '\n', '2', '5', '5', '\n', 0xFF, 0, 0, 0};
  qcorr_image* p5 = nullptr;
  CHECK(qcorr_image_read_pgm(pgm, sizeof pgm, &p5) == QCORR_OK);
  CHECK(qcorr_image_pixels(p5, px, 4) == QCORR_OK);
  CHECK(px[0] == 255);
  qcorr_image_free(p5);

  qcorr_image* patron = nullptr;
  CHECK(qcorr_image_default_patron(&patron) == QCORR_OK);
  CHECK(qcorr_image_side(patron) == 8);
  qcorr_image_free(patron);
}

TEST_CASE("error codes and messages") {
  qcorr_image* img = nullptr;
  CHECK(qcorr_image_parse("pattern:101", &img) == QCORR_ERR_INPUT);
  CHECK(img == nullptr);
  CHECK(std::strlen(qcorr_last_error()) > 0);
  CHECK(qcorr_image_parse("/no/such/file.pgm", &img) == QCORR_ERR_INPUT);
  CHECK(std::string(qcorr_last_error()).find("cannot open") != std::string::npos);
  CHECK(qcorr_image_parse(nullptr, &img) == QCORR_ERR_INPUT);

  const int bad[4] = {0, 0, 0, 300};
  CHECK(qcorr_image_from_pixels(2, bad, 4, &img) == QCORR_ERR_INPUT);

  qcorr_image* a = parse("pattern:0000");
  qcorr_image* b = parse("pattern:0000000000000000");
  qcorr_report rep{};
  CHECK(qcorr_correlation_report(a, b, &rep) == QCORR_ERR_INPUT);
  qcorr_table* t = nullptr;
  CHECK(qcorr_run_sweep(a, a, 7, &t) == QCORR_ERR_INPUT);
  CHECK(t == nullptr);
  qcorr_image_free(a);
  qcorr_image_free(b);
}

TEST_CASE("correlation report for the worked pair") {
  qcorr_image* a = parse("pattern:1000");
  qcorr_image* b = parse("pattern:1010");
  qcorr_report r{};
  REQUIRE(qcorr_correlation_report(a, b, &r) == QCORR_OK);
  CHECK(std::abs(r.s_a - 0.811278) < 1e-6);
  CHECK(std::abs(r.s_b - 1.0) < 1e-9);
  CHECK(std::abs(r.s_ab - 1.5) < 1e-9);
  CHECK(std::abs(r.it - 3.311278) < 1e-6);
  CHECK(std::abs(r.i0) < 1e-9);
  CHECK(std::abs(r.h_ab - 1.5) < 1e-12);
  CHECK(std::abs(r.i_ab - 0.311278) < 1e-6);
  qcorr_image_free(a);
  qcorr_image_free(b);
}

TEST_CASE("tables") {
  qcorr_table* t = nullptr;
  REQUIRE(qcorr_run_table1(&t) == QCORR_OK);
  CHECK(qcorr_table_rows(t) == 16);
  CHECK(qcorr_table_cols(t) == 6);
  CHECK(std::string(qcorr_table_column(t, 0)) == "pattern");
  CHECK(qcorr_table_column(t, 6) == nullptr);
  double v = 0;
  CHECK(qcorr_table_number(t, 8, 2, &v) == QCORR_OK);
  CHECK(std::abs(v - 0.625) < 1e-12);
  CHECK(qcorr_table_number(t, 8, 0, &v) == QCORR_ERR_INPUT);  // text cell
  CHECK(qcorr_table_number(t, 16, 1, &v) == QCORR_ERR_INPUT);
  char* text = nullptr;
  REQUIRE(qcorr_table_cell_text(t, 8, 0, &text) == QCORR_OK);
  CHECK(take(text) == "1000");
  REQUIRE(qcorr_table_csv(t, &text) == QCORR_OK);
  CHECK(take(text).rfind("pattern,purity_cp,", 0) == 0);
  qcorr_table_free(t);

  qcorr_image* patron = parse("pattern:1000");
  REQUIRE(qcorr_run_table2(patron, &t) == QCORR_OK);
  CHECK(qcorr_table_rows(t) == 16);
  REQUIRE(qcorr_table_cell_text(t, 10, 8, &text) == QCORR_OK);
  CHECK(take(text) == "3.311278");
  qcorr_table_free(t);

  REQUIRE(qcorr_run_entropy(patron, &t) == QCORR_OK);
  CHECK(qcorr_table_rows(t) == 1);
  qcorr_table_free(t);
  qcorr_image_free(patron);

  qcorr_image* zero = parse("pattern:0000");
  REQUIRE(qcorr_run_sweep(zero, zero, 2, &t) == QCORR_OK);
  CHECK(qcorr_table_rows(t) == 256);
  CHECK(qcorr_table_number(t, 255, 0, &v) == QCORR_OK);
  CHECK(v == 255.0);
  qcorr_table_free(t);
  qcorr_image_free(zero);

  qcorr_image* small = parse("pattern:0110100110010110");
  REQUIRE(qcorr_run_translate(small, 0, 128, &t) == QCORR_OK);
  CHECK(qcorr_table_rows(t) == 16);
  CHECK(qcorr_table_cols(t) == 11);
  qcorr_table_free(t);
  CHECK(qcorr_run_translate(small, 0, 999, &t) == QCORR_ERR_INPUT);
  qcorr_image_free(small);
}

TEST_CASE("encode dump") {
  qcorr_image* img = parse("graylist:51,204,204,51");
  char* text = nullptr;
  REQUIRE(qcorr_encode_dump(img, &text) == QCORR_OK);
  CHECK(take(text).rfind("0 000 0.475528\n", 0) == 0);
  qcorr_image_free(img);
}

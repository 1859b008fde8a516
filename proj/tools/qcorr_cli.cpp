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

// qcorr: command-line front end over the libqcorr C API.
//
//   qcorr entropy   --image <spec>
//   qcorr table1
//   qcorr table2    --patron <spec>
//   qcorr sweep     --base-a <spec> --base-b <spec> [--pixel k]
//   qcorr translate [--patron <spec>] [--low g] [--high g]
//   qcorr encode    --image <spec> --dump-state
//
// <spec> is "pattern:<bits>", "graylist:<v,...>" or a PGM path. Exit codes:
// 0 success, 2 usage/input error, 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "qcorr/qcorr.h"

namespace {

struct ImageDeleter {
  void operator()(qcorr_image* p) const { qcorr_image_free(p); }
};
struct TableDeleter {
  void operator()(qcorr_table* p) const { qcorr_table_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { qcorr_string_free(p); }
};
using ImagePtr = std::unique_ptr<qcorr_image, ImageDeleter>;
using TablePtr = std::unique_ptr<qcorr_table, TableDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries a qcorr_status out of a command body.
struct Failure {
  int code;
  std::string message;
};

void check(qcorr_status status, const std::string& context) {
  if (status != QCORR_OK) throw Failure{static_cast<int>(status), context + ": " + qcorr_last_error()};
}

ImagePtr load_image(const std::string& spec, const char* what) {
  qcorr_image* raw = nullptr;
  check(qcorr_image_parse(spec.c_str(), &raw), what);
  return ImagePtr(raw);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) throw Failure{QCORR_ERR_INPUT, "cannot write '" + out_path + "'"};
}

void emit_table(qcorr_table* raw, const std::string& out_path) {
  TablePtr table(raw);
  char* csv = nullptr;
  check(qcorr_table_csv(table.get(), &csv), "render");
  StringPtr text(csv);
  emit(text.get(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FRQI image correlation measures: quantum entropies vs joint-histogram baselines"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  app.add_option("--out", out_path, "Write output to this file instead of standard output");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));

  std::string image_spec;
  auto* entropy = app.add_subcommand("entropy", "Purities and color/position entropies of one image");
  entropy->add_option("--image", image_spec, "Image: pattern:<bits>, graylist:<v,...> or PGM path")->required();

  auto* table1 = app.add_subcommand("table1", "Entanglement measures for all 16 binary 2x2 images");

  std::string patron_spec = "pattern:1000";
  auto* table2 = app.add_subcommand("table2", "Compare a binary 2x2 patron against all 16 binary 2x2 images");
  table2->add_option("--patron", patron_spec, "Patron image")->capture_default_str();

  std::string base_a_spec;
  std::string base_b_spec;
  long pixel = 2;
  auto* sweep = app.add_subcommand("sweep", "Sweep one pixel of image B over gray levels 0..255");
  sweep->add_option("--base-a", base_a_spec, "Image A")->required();
  sweep->add_option("--base-b", base_b_spec, "Base image B")->required();
  sweep->add_option("--pixel", pixel, "Row-major index of the swept pixel")->capture_default_str();

  std::string translate_patron;
  int low = 0;
  int high = 128;
  auto* translate = app.add_subcommand("translate", "Compare a patron against each cyclic translation of itself");
  translate->add_option("--patron", translate_patron, "Binary patron image (default: built-in 8x8 stripe)");
  translate->add_option("--low", low, "Gray level replacing black")->capture_default_str();
  translate->add_option("--high", high, "Gray level replacing white")->capture_default_str();

  bool dump_state = false;
  auto* encode = app.add_subcommand("encode", "List the nonzero FRQI amplitudes of an image");
  encode->add_option("--image", image_spec, "Image: pattern:<bits>, graylist:<v,...> or PGM path")->required();
  encode->add_flag("--dump-state", dump_state, "Print 'index bitstring amplitude' lines (default output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return QCORR_ERR_INPUT;
  }

  try {
    qcorr_table* table = nullptr;
    if (entropy->parsed()) {
      const auto img = load_image(image_spec, "--image");
      check(qcorr_run_entropy(img.get(), &table), "entropy");
      emit_table(table, out_path);
    } else if (table1->parsed()) {
      check(qcorr_run_table1(&table), "table1");
      emit_table(table, out_path);
    } else if (table2->parsed()) {
      const auto patron = load_image(patron_spec, "--patron");
      check(qcorr_run_table2(patron.get(), &table), "table2");
      emit_table(table, out_path);
    } else if (sweep->parsed()) {
      const auto a = load_image(base_a_spec, "--base-a");
      const auto b = load_image(base_b_spec, "--base-b");
      check(qcorr_run_sweep(a.get(), b.get(), pixel, &table), "sweep");
      emit_table(table, out_path);
    } else if (translate->parsed()) {
      ImagePtr patron;
      if (translate_patron.empty()) {
        qcorr_image* raw = nullptr;
        check(qcorr_image_default_patron(&raw), "default patron");
        patron.reset(raw);
      } else {
        patron = load_image(translate_patron, "--patron");
      }
      check(qcorr_run_translate(patron.get(), low, high, &table), "translate");
      emit_table(table, out_path);
    } else if (encode->parsed()) {
      (void)dump_state;
      const auto img = load_image(image_spec, "--image");
      char* text = nullptr;
      check(qcorr_encode_dump(img.get(), &text), "encode");
      StringPtr owned(text);
      emit(owned.get(), out_path);
    }
  } catch (const Failure& f) {
    std::cerr << "qcorr: " << f.message << '\n';
    return f.code;
  }
  return 0;
}

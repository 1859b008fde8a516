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

#include "qcorr/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qcorr/error.hpp"
#include "qcorr/frqi.hpp"

namespace qcorr {

namespace {

// Runs body(i) for i in [0, count) on up to hardware_concurrency threads and
// rethrows the first exception.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

EntropyRow image_entropy(const Image& image) {
  const auto state = encode_frqi(image);
  const auto rho = density(state);
  const Register color{QubitLabel::color_a()};
  const auto positions = position_labels(2 * image.bits_per_axis());
  const auto rho_c = partial_trace(rho, color);
  const auto rho_p = partial_trace(rho, positions);

  EntropyRow row;
  row.purity_cp = purity(rho.matrix);
  row.purity_c = purity(rho_c.matrix);
  row.purity_p = purity(rho_p.matrix);
  row.s_c = von_neumann_entropy(rho_c);
  row.s_p = von_neumann_entropy(rho_p);
  return row;
}

std::vector<std::string> binary_patterns_2x2() {
  std::vector<std::string> out;
  for (unsigned k = 0; k < 16; ++k) {
    std::string s(4, '0');
    for (int bit = 0; bit < 4; ++bit) {
      if ((k >> (3 - bit)) & 1U) s[bit] = '1';
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Table1Row> run_table1() {
  std::vector<Table1Row> rows;
  for (const auto& p : binary_patterns_2x2()) rows.push_back({p, image_entropy(parse_bitstring(p))});
  return rows;
}

std::vector<Table2Row> run_table2(const Image& patron) {
  if (patron.side() != 2) throw InputError("table2 patron must be a 2x2 image");
  if (!patron.is_binary()) throw InputError("table2 patron must be binary (gray values 0 and 255 only)");
  std::vector<Table2Row> rows;
  for (const auto& p : binary_patterns_2x2()) rows.push_back({p, correlation_report(patron, parse_bitstring(p))});
  return rows;
}

std::vector<SweepRow> run_sweep(const Image& base_a, const Image& base_b, long pixel_index) {
  if (base_a.side() != base_b.side()) throw InputError("sweep base images differ in size");
  std::vector<SweepRow> rows(256);
  // Validates the index before doing any work.
  (void)set_pixel(base_b, pixel_index, 0);
  parallel_for(rows.size(), [&](std::size_t x) {
    const auto b = set_pixel(base_b, pixel_index, static_cast<int>(x));
    const auto r = correlation_report(base_a, b);
    rows[x] = {static_cast<int>(x), r.s_ab, r.it, r.classical->h_ab};
  });
  return rows;
}

std::vector<TranslateRow> run_translate(const Image& patron, int low_gray, int high_gray) {
  if (!patron.is_binary()) throw InputError("translate patron must be binary (gray values 0 and 255 only)");
  for (int g : {low_gray, high_gray}) {
    if (g < 0 || g > 255) throw InputError("gray value " + std::to_string(g) + " outside [0, 255]");
  }
  std::vector<std::uint8_t> px(patron.pixels().begin(), patron.pixels().end());
  for (auto& v : px) v = static_cast<std::uint8_t>(v == 0 ? low_gray : high_gray);
  const Image remapped(patron.side(), std::move(px));

  std::vector<TranslateRow> rows(remapped.size());
  parallel_for(rows.size(), [&](std::size_t k) {
    const auto shifted = translate_cyclic(remapped, static_cast<long>(k));
    const auto r = correlation_report(remapped, shifted);
    rows[k] = {static_cast<long>(k), r.s_a, r.s_b, r.s_ab, r.i_ab, r.it, *r.classical};
  });
  return rows;
}

}  // namespace qcorr

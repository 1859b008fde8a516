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

#include "qcorr/frqi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcorr/error.hpp"

namespace qcorr {

std::string QubitLabel::name() const {
  switch (kind) {
    case Kind::Position: return "p" + std::to_string(index);
    case Kind::ColorA: return "A";
    case Kind::ColorB: return "B";
  }
  return "?";
}

Register position_labels(int count) {
  Register reg;
  reg.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) reg.push_back(QubitLabel::position(k));
  return reg;
}

double color_to_angle(int color) {
  if (color < 0 || color > 255) {
    throw InputError("gray value " + std::to_string(color) + " outside [0, 255]");
  }
  return color * (std::numbers::pi / 2.0) / 255.0;
}

StateVector encode_frqi(const Image& image) {
  const int pos_qubits = 2 * image.bits_per_axis();
  const std::size_t npix = image.size();
  const double norm = 1.0 / image.side();

  StateVector s;
  s.reg.push_back(QubitLabel::color_a());
  const auto pos = position_labels(pos_qubits);
  s.reg.insert(s.reg.end(), pos.begin(), pos.end());
  s.amplitudes.assign(2 * npix, 0.0);
  for (std::size_t i = 0; i < npix; ++i) {
    const double theta = color_to_angle(image.at(i));
    s.amplitudes[i] = norm * std::cos(theta);
    s.amplitudes[npix + i] = norm * std::sin(theta);
  }
  return s;
}

StateVector encode_joint(const Image& a, const Image& b) {
  if (a.side() != b.side()) {
    throw InputError("image sizes differ: " + std::to_string(a.side()) + " vs " + std::to_string(b.side()));
  }
  const int pos_qubits = 2 * a.bits_per_axis();
  const std::size_t npix = a.size();
  const double norm = 1.0 / a.side();

  StateVector s;
  s.reg = position_labels(pos_qubits);
  s.reg.push_back(QubitLabel::color_a());
  s.reg.push_back(QubitLabel::color_b());
  s.amplitudes.assign(4 * npix, 0.0);
  for (std::size_t i = 0; i < npix; ++i) {
    const double ta = color_to_angle(a.at(i));
    const double tb = color_to_angle(b.at(i));
    const double fa[2] = {std::cos(ta), std::sin(ta)};
    const double fb[2] = {std::cos(tb), std::sin(tb)};
    for (int ca = 0; ca < 2; ++ca) {
      for (int cb = 0; cb < 2; ++cb) s.amplitudes[4 * i + 2 * ca + cb] = norm * fa[ca] * fb[cb];
    }
  }
  return s;
}

DensityMatrix density(const StateVector& state) { return {state.reg, outer(state.amplitudes)}; }

namespace {

struct TraceLayout {
  Register kept;
  // Bit position (from the least significant end) of each kept qubit, in
  // register order, and of each traced qubit.
  std::vector<int> kept_bits;
  std::vector<int> traced_bits;
};

TraceLayout layout_for(const Register& reg, std::span<const QubitLabel> keep) {
  if (keep.empty()) throw InputError("partial trace must keep at least one qubit");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (std::find(reg.begin(), reg.end(), keep[i]) == reg.end()) {
      throw InputError("qubit " + keep[i].name() + " is not in the register");
    }
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (keep[i] == keep[j]) throw InputError("qubit " + keep[i].name() + " listed twice");
    }
  }
  TraceLayout out;
  const int n = static_cast<int>(reg.size());
  for (int q = 0; q < n; ++q) {
    const int bit = n - 1 - q;
    if (std::find(keep.begin(), keep.end(), reg[q]) != keep.end()) {
      out.kept.push_back(reg[q]);
      out.kept_bits.push_back(bit);
    } else {
      out.traced_bits.push_back(bit);
    }
  }
  return out;
}

// Spreads the bits of `compact` (most significant first) onto `bits`.
std::size_t scatter(std::size_t compact, const std::vector<int>& bits) {
  std::size_t full = 0;
  const auto k = bits.size();
  for (std::size_t j = 0; j < k; ++j) {
    if ((compact >> (k - 1 - j)) & 1U) full |= std::size_t{1} << bits[j];
  }
  return full;
}

std::vector<std::size_t> scatter_table(const std::vector<int>& bits) {
  std::vector<std::size_t> table(std::size_t{1} << bits.size());
  for (std::size_t c = 0; c < table.size(); ++c) table[c] = scatter(c, bits);
  return table;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const QubitLabel> keep) {
  const auto layout = layout_for(rho.reg, keep);
  const auto kept_index = scatter_table(layout.kept_bits);
  const auto traced_index = scatter_table(layout.traced_bits);
  const auto dk = kept_index.size();

  SymMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t c = r; c < dk; ++c) {
      double acc = 0.0;
      for (auto t : traced_index) acc += rho.matrix(kept_index[r] | t, kept_index[c] | t);
      out.set(r, c, acc);
    }
  }
  return {layout.kept, std::move(out)};
}

DensityMatrix reduced_density(const StateVector& state, std::span<const QubitLabel> keep) {
  const auto layout = layout_for(state.reg, keep);
  const auto kept_index = scatter_table(layout.kept_bits);
  const auto traced_index = scatter_table(layout.traced_bits);
  const auto dk = kept_index.size();
  const auto dt = traced_index.size();

  // psi as a dk x dt matrix.
  std::vector<double> psi(dk * dt);
  for (std::size_t r = 0; r < dk; ++r) {
    for (std::size_t t = 0; t < dt; ++t) psi[r * dt + t] = state.amplitudes[kept_index[r] | traced_index[t]];
  }
  SymMatrix out(dk);
  for (std::size_t r = 0; r < dk; ++r) {
    const double* pr = psi.data() + r * dt;
    for (std::size_t c = r; c < dk; ++c) {
      const double* pc = psi.data() + c * dt;
      double acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) acc += pr[t] * pc[t];
      out.set(r, c, acc);
    }
  }
  return {layout.kept, std::move(out)};
}

}  // namespace qcorr

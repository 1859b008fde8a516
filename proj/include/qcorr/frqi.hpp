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

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qcorr/image.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

/// Identifies one qubit of an FRQI register.
struct QubitLabel {
  enum class Kind { Position, ColorA, ColorB };

  Kind kind = Kind::Position;
  // Position qubit number; 0 is the most significant bit of the pixel index.
  int index = 0;

  static QubitLabel position(int k) { return {Kind::Position, k}; }
  static QubitLabel color_a() { return {Kind::ColorA, 0}; }
  static QubitLabel color_b() { return {Kind::ColorB, 0}; }

  std::string name() const;

  friend auto operator<=>(const QubitLabel&, const QubitLabel&) = default;
};

using Register = std::vector<QubitLabel>;

// Position(0) .. Position(count - 1).
Register position_labels(int count);

/// Real amplitude vector over a labeled register. Register entry 0 is the
/// most significant bit of the basis index.
struct StateVector {
  Register reg;
  std::vector<double> amplitudes;

  std::size_t qubits() const { return reg.size(); }
};

struct DensityMatrix {
  Register reg;
  SymMatrix matrix;

  std::size_t qubits() const { return reg.size(); }
};

// Linear map [0, 255] -> [0, pi/2].
double color_to_angle(int color);

// Single image on [ColorA, Position(0..2n-1)], color bit most significant:
// amplitude(c, i) = 2^-n * (c == 0 ? cos : sin)(theta_i).
StateVector encode_frqi(const Image& image);

// Two images on [Position(0..2n-1), ColorA, ColorB]:
// amplitude(i, a, b) = 2^-n * f(a, theta_A,i) * f(b, theta_B,i).
StateVector encode_joint(const Image& a, const Image& b);

DensityMatrix density(const StateVector& state);

// Traces out every qubit not in keep. The result register lists the kept
// qubits in their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const QubitLabel> keep);

// Reduced state straight from the amplitudes (psi reshaped to kept x traced,
// then psi psi^T). Equivalent to partial_trace(density(state), keep) but
// never forms the full density matrix.
DensityMatrix reduced_density(const StateVector& state, std::span<const QubitLabel> keep);

}  // namespace qcorr

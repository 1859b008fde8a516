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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcorr/frqi.hpp"
#include "qcorr/image.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

// All entropies are in bits (base-2 logarithm) with 0 log 0 := 0.

// Eigenvalues in [-kClampTolerance, 0) are treated as 0; anything lower is
// rejected as an invalid density matrix.
inline constexpr double kClampTolerance = 1e-9;

double entropy_of_spectrum(const Spectrum& spectrum);
double von_neumann_entropy(const SymMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

// Entropy of the reduced state on `part`.
double subsystem_entropy(const DensityMatrix& rho, std::span<const QubitLabel> part);

// S(A|B) = S(AB) - S(B). May be negative.
double conditional_entropy(const DensityMatrix& rho, std::span<const QubitLabel> part_a,
                           std::span<const QubitLabel> part_b);

// I(A;B) = S(A) + S(B) - S(AB), with tiny negatives clamped to 0.
double quantum_mutual_information(const DensityMatrix& rho, std::span<const QubitLabel> part_a,
                                  std::span<const QubitLabel> part_b);

struct TripartiteEntropies {
  // Single parts, pairs and the whole system for the partition (C, A, B).
  double s_c = 0, s_a = 0, s_b = 0;
  double s_ab = 0, s_ac = 0, s_bc = 0;
  double s_abc = 0;
};

struct TripartiteMeasures {
  double interaction = 0;        // I0
  double total = 0;              // IT
  double dual_total = 0;         // ID
};

// `third`, `part_a`, `part_b` must partition the register.
TripartiteEntropies tripartite_entropies(const DensityMatrix& rho, std::span<const QubitLabel> third,
                                         std::span<const QubitLabel> part_a,
                                         std::span<const QubitLabel> part_b);

TripartiteMeasures tripartite_measures(const TripartiteEntropies& s);
TripartiteMeasures tripartite_measures(const DensityMatrix& rho, std::span<const QubitLabel> third,
                                       std::span<const QubitLabel> part_a,
                                       std::span<const QubitLabel> part_b);

/// Co-occurrence counts of gray-value pairs at identical positions.
class JointHistogram {
 public:
  JointHistogram() : counts_(256 * 256, 0) {}

  std::uint64_t count(int va, int vb) const { return counts_[static_cast<std::size_t>(va) * 256 + vb]; }
  void add(int va, int vb) {
    ++counts_[static_cast<std::size_t>(va) * 256 + vb];
    ++total_;
  }
  std::uint64_t total() const { return total_; }

  std::array<std::uint64_t, 256> marginal_a() const;
  std::array<std::uint64_t, 256> marginal_b() const;
  std::span<const std::uint64_t> cells() const { return counts_; }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

JointHistogram joint_histogram(const Image& a, const Image& b);

// Shannon entropy of the distribution given by nonnegative counts. Depends
// only on the multiset of counts.
double shannon_entropy(std::span<const std::uint64_t> counts);

struct ClassicalEntropies {
  double h_a = 0;
  double h_b = 0;
  double h_ab = 0;
  double mutual = 0;
  // (H_A + H_B) / H_AB, defined as 2 when H_AB == 0.
  double nmi = 0;
};

ClassicalEntropies classical_entropies(const JointHistogram& h);

/// Every subsystem entropy of the joint (positions, A, B) state of two images
/// plus the tripartite measures, and optionally the classical baseline.
struct CorrelationReport {
  double s_a = 0, s_b = 0, s_12 = 0;
  double s_ab = 0, s_a12 = 0, s_b12 = 0;
  double s_total = 0;
  double i0 = 0, it = 0, id = 0;
  double i_ab = 0;  // quantum I(A;B)
  std::optional<ClassicalEntropies> classical;
};

CorrelationReport correlation_report(const Image& a, const Image& b, bool with_classical = true);

}  // namespace qcorr

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

#include <cstddef>
#include <span>
#include <vector>

namespace qcorr {

/// Dense real symmetric matrix, row-major. Every density matrix in this
/// library is real because FRQI amplitudes are real and nonnegative.
class SymMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  SymMatrix() = default;
  // Zero matrix.
  explicit SymMatrix(std::size_t dim);
  // Validates |a_ij - a_ji| <= kSymmetryTolerance; throws InputError otherwise.
  SymMatrix(std::size_t dim, std::vector<double> row_major);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const double> data() const { return data_; }

  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }

  SymMatrix scaled(double factor) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues in descending order.
struct Spectrum {
  std::vector<double> values;
  double sum() const;
};

struct EigenDecomposition {
  Spectrum spectrum;
  // Column k of the row-major dim x dim matrix is the unit eigenvector for
  // spectrum.values[k].
  std::vector<double> vectors;
};

SymMatrix outer(std::span<const double> v);

double trace(const SymMatrix& m);

// General product of two symmetric matrices, returned row-major (the product
// of two symmetric matrices is only symmetric when they commute).
std::vector<double> matmul(const SymMatrix& a, const SymMatrix& b);

// Tr(m * m), computed without forming the product.
double purity(const SymMatrix& m);

// Householder tridiagonalization followed by implicit-shift QL. Throws
// NumericError when the total QL iteration count exceeds 100 * dim.
Spectrum sym_eigenvalues(const SymMatrix& m);
EigenDecomposition sym_eigen(const SymMatrix& m);

// max |m - Q diag(lambda) Q^T|
double reconstruction_residual(const SymMatrix& m, const EigenDecomposition& eig);

}  // namespace qcorr

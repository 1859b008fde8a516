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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qcorr/error.hpp"
#include "qcorr/frqi.hpp"
#include "qcorr/measures.hpp"

using qcorr::QubitLabel;
using qcorr::Register;

namespace {

const QubitLabel kA = QubitLabel::color_a();
const QubitLabel kB = QubitLabel::color_b();

qcorr::Image random_gray(int side, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gray(0, 255);
  std::vector<int> px(static_cast<std::size_t>(side) * side);
  for (auto& v : px) v = gray(rng);
  return qcorr::Image(side, std::span<const int>(px));
}

double max_abs_diff(const qcorr::SymMatrix& a, const qcorr::SymMatrix& b) {
  REQUIRE(a.dim() == b.dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

// Joint state of the two-image worked example: A = 1000, B = 1010.
qcorr::DensityMatrix worked_joint() {
  return qcorr::density(qcorr::encode_joint(qcorr::parse_bitstring("1000"), qcorr::parse_bitstring("1010")));
}

}  // namespace

TEST_CASE("color_to_angle") {
  CHECK(oracle::printed3(qcorr::color_to_angle(51), 0.314));
  CHECK(oracle::printed3(qcorr::color_to_angle(204), 1.256));
  CHECK(qcorr::color_to_angle(0) == 0.0);
  CHECK(std::abs(qcorr::color_to_angle(255) - std::numbers::pi / 2) < 1e-15);
  CHECK(std::abs(qcorr::color_to_angle(100) - 2 * qcorr::color_to_angle(50)) < 1e-15);
  CHECK_THROWS_AS(qcorr::color_to_angle(256), qcorr::InputError);
  CHECK_THROWS_AS(qcorr::color_to_angle(-1), qcorr::InputError);
}

TEST_CASE("encode_frqi: gray example reproduces the printed amplitudes") {
  const auto s = qcorr::encode_frqi(qcorr::parse_graylist("51,204,204,51"));
  REQUIRE(s.amplitudes.size() == 8);
  REQUIRE(s.reg.size() == 3);
  CHECK(s.reg[0] == kA);
  CHECK(s.reg[1] == QubitLabel::position(0));
  const double printed[8] = {0.475, 0.154, 0.154, 0.475, 0.154, 0.475, 0.475, 0.154};
  for (int i = 0; i < 8; ++i) CHECK(oracle::printed3(s.amplitudes[i], printed[i]));
  CHECK(std::abs(s.amplitudes[0] - 0.5 * std::cos(oracle::angle(51))) < 1e-15);
}

TEST_CASE("encode_frqi: constant images") {
  const auto black = qcorr::encode_frqi(qcorr::Image::filled(2, 0));
  const auto white = qcorr::encode_frqi(qcorr::Image::filled(2, 255));
  for (int i = 0; i < 4; ++i) {
    CHECK(black.amplitudes[i] == 0.5);
    CHECK(black.amplitudes[4 + i] == 0.0);
    CHECK(std::abs(white.amplitudes[i]) < 1e-16);
    CHECK(white.amplitudes[4 + i] == 0.5);
  }
}

TEST_CASE("encode_joint: worked example and sweep endpoint") {
  const auto s = qcorr::encode_joint(qcorr::parse_bitstring("1000"), qcorr::parse_bitstring("1010"));
  REQUIRE(s.reg == Register{QubitLabel::position(0), QubitLabel::position(1), kA, kB});
  for (std::size_t i = 0; i < 16; ++i) {
    const bool on = i == 3 || i == 4 || i == 9 || i == 12;
    CHECK(std::abs(s.amplitudes[i] - (on ? 0.5 : 0.0)) < 1e-15);
  }

  const auto z = qcorr::encode_joint(qcorr::Image::filled(2, 0), qcorr::Image::filled(2, 0));
  for (std::size_t i = 0; i < 16; ++i) CHECK(z.amplitudes[i] == (i % 4 == 0 ? 0.5 : 0.0));

  // a = 0000, b = 0010: amplitude (i, a, b) = 1/2 f(a, 0) f(b, theta_b,i).
  const auto e = qcorr::encode_joint(qcorr::Image::filled(2, 0), qcorr::parse_graylist("0,0,255,0"));
  for (std::size_t i = 0; i < 16; ++i) {
    const bool on = i == 0 || i == 4 || i == 9 || i == 12;
    CHECK(std::abs(e.amplitudes[i] - (on ? 0.5 : 0.0)) < 1e-15);
  }

  CHECK_THROWS_AS(qcorr::encode_joint(qcorr::Image::filled(2, 0), qcorr::Image::filled(4, 0)), qcorr::InputError);
}

TEST_CASE("density") {
  const auto rho = qcorr::density(qcorr::encode_frqi(qcorr::parse_graylist("51,204,204,51")));
  CHECK(oracle::printed3(rho.matrix(0, 0), 0.226));
  CHECK(oracle::printed3(rho.matrix(0, 1), 0.073));
  CHECK(oracle::printed3(rho.matrix(1, 1), 0.023));
  CHECK(std::abs(qcorr::purity(rho.matrix) - 1.0) < 1e-9);

  const auto joint = worked_joint();
  const std::size_t on[4] = {3, 4, 9, 12};
  double total = 0.0;
  for (double x : joint.matrix.data()) total += std::abs(x);
  for (auto r : on) {
    for (auto c : on) CHECK(std::abs(joint.matrix(r, c) - 0.25) < 1e-15);
  }
  CHECK(std::abs(total - 16 * 0.25) < 1e-12);

  const qcorr::StateVector zero{{kA}, {1.0, 0.0}};
  const auto p = qcorr::density(zero);
  CHECK(p.matrix(0, 0) == 1.0);
  CHECK(p.matrix(1, 1) == 0.0);
}

TEST_CASE("partial_trace: printed reduced matrices") {
  const auto rho = qcorr::density(qcorr::encode_frqi(qcorr::parse_graylist("51,204,204,51")));
  const auto positions = qcorr::position_labels(2);
  const auto rp = qcorr::partial_trace(rho, positions);
  REQUIRE(rp.matrix.dim() == 4);
  CHECK(rp.reg == positions);
  const double printed[4][4] = {{0.250, 0.146, 0.146, 0.250},
                                {0.146, 0.250, 0.250, 0.146},
                                {0.146, 0.250, 0.250, 0.146},
                                {0.250, 0.146, 0.146, 0.250}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // Printed values are truncated to 3 decimals (0.14695 -> 0.146).
      CHECK(std::abs(rp.matrix(i, j) - printed[i][j]) < 1e-3);
    }
  }
  // Closed form: rho_p[i][j] = cos(theta_i - theta_j) / 4.
  const int g[4] = {51, 204, 204, 51};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(rp.matrix(i, j) - 0.25 * std::cos(oracle::angle(g[i]) - oracle::angle(g[j]))) < 1e-15);
    }
  }

  const auto joint = worked_joint();
  const Register ab{kA, kB};
  const auto rab = qcorr::partial_trace(joint, ab);
  const double diag[4] = {0.5, 0.25, 0.0, 0.25};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(std::abs(rab.matrix(i, j) - (i == j ? diag[i] : 0.0)) < 1e-15);
  }
}

TEST_CASE("partial_trace: product and Bell states") {
  const Register two{QubitLabel::position(0), QubitLabel::position(1)};
  const qcorr::StateVector zz{two, {1.0, 0.0, 0.0, 0.0}};
  const Register q0{QubitLabel::position(0)};
  const auto r = qcorr::partial_trace(qcorr::density(zz), q0);
  CHECK(r.matrix(0, 0) == 1.0);
  CHECK(r.matrix(0, 1) == 0.0);
  CHECK(r.matrix(1, 1) == 0.0);

  const double h = std::sqrt(0.5);
  const qcorr::StateVector bell{two, {h, 0.0, 0.0, h}};
  for (const auto& q : two) {
    const Register keep{q};
    const auto m = qcorr::partial_trace(qcorr::density(bell), keep);
    CHECK(std::abs(m.matrix(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(m.matrix(1, 1) - 0.5) < 1e-15);
    CHECK(m.matrix(0, 1) == 0.0);
  }
}

TEST_CASE("partial_trace: errors") {
  const auto rho = worked_joint();
  CHECK_THROWS_AS(qcorr::partial_trace(rho, Register{}), qcorr::InputError);
  CHECK_THROWS_AS(qcorr::partial_trace(rho, Register{QubitLabel::position(5)}), qcorr::InputError);
  CHECK_THROWS_AS(qcorr::partial_trace(rho, Register{kA, kA}), qcorr::InputError);
  const auto single = qcorr::density(qcorr::encode_frqi(qcorr::Image::filled(2, 0)));
  CHECK_THROWS_AS(qcorr::partial_trace(single, Register{kB}), qcorr::InputError);
}

TEST_CASE("partial_trace keeps register order regardless of the order requested") {
  const auto rho = worked_joint();
  const auto r = qcorr::partial_trace(rho, Register{kB, QubitLabel::position(1)});
  CHECK(r.reg == Register{QubitLabel::position(1), kB});
}

TEST_CASE("property: partial trace agrees with the brute-force oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int side = trial < 8 ? 2 : 4;
    const auto rho = qcorr::density(qcorr::encode_joint(random_gray(side, rng), random_gray(side, rng)));
    const int n = static_cast<int>(rho.reg.size());
    std::vector<double> full(rho.matrix.data().begin(), rho.matrix.data().end());
    for (unsigned mask = 1; mask < (1U << n); mask += (side == 2 ? 1 : 7)) {
      Register keep;
      for (int q = 0; q < n; ++q) {
        if (mask & (1U << (n - 1 - q))) keep.push_back(rho.reg[q]);
      }
      int dim = 0;
      const auto expected = oracle::brute_partial_trace(full, n, mask, dim);
      const auto got = qcorr::partial_trace(rho, keep);
      REQUIRE(static_cast<int>(got.matrix.dim()) == dim);
      for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(got.matrix.data()[i] - expected[i]) < 1e-14);
    }
  }
}

TEST_CASE("property: encoded states are normalized, pure, and traces preserve trace and PSD") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int side = 2 << (trial % 3);
    const auto img = random_gray(side, rng);
    const auto s = qcorr::encode_frqi(img);
    double norm = 0.0;
    for (double x : s.amplitudes) {
      CHECK(x >= 0.0);
      norm += x * x;
    }
    CHECK(std::abs(norm - 1.0) < 1e-12);
    const auto rho = qcorr::density(s);
    CHECK(std::abs(qcorr::purity(rho.matrix) - 1.0) < 1e-9);

    const auto rp = qcorr::partial_trace(rho, qcorr::position_labels(2 * img.bits_per_axis()));
    CHECK(std::abs(qcorr::trace(rp.matrix) - 1.0) < 1e-12);
    CHECK(qcorr::sym_eigenvalues(rp.matrix).values.back() >= -1e-9);
  }
}

TEST_CASE("property: color marginal matches the closed form") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int side = 2 << (trial % 3);
    const auto img = random_gray(side, rng);
    const auto rc = qcorr::partial_trace(qcorr::density(qcorr::encode_frqi(img)), Register{kA});
    double c2 = 0, cs = 0, s2 = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      const double t = oracle::angle(img.at(i));
      c2 += std::cos(t) * std::cos(t);
      cs += std::cos(t) * std::sin(t);
      s2 += std::sin(t) * std::sin(t);
    }
    const double n = static_cast<double>(img.size());
    CHECK(std::abs(rc.matrix(0, 0) - c2 / n) < 1e-12);
    CHECK(std::abs(rc.matrix(0, 1) - cs / n) < 1e-12);
    CHECK(std::abs(rc.matrix(1, 1) - s2 / n) < 1e-12);
  }
}

TEST_CASE("property: trace order independence and composition") {
  const auto rho = worked_joint();
  const auto positions = qcorr::position_labels(2);
  Register p_a = positions;
  p_a.push_back(kA);
  Register p_b = positions;
  p_b.push_back(kB);
  const auto via_b_then_a = qcorr::partial_trace(qcorr::partial_trace(rho, p_a), positions);
  const auto via_a_then_b = qcorr::partial_trace(qcorr::partial_trace(rho, p_b), positions);
  const auto direct = qcorr::partial_trace(rho, positions);
  CHECK(max_abs_diff(via_b_then_a.matrix, direct.matrix) < 1e-12);
  CHECK(max_abs_diff(via_a_then_b.matrix, direct.matrix) < 1e-12);

  std::mt19937_64 rng(43);
  const auto big = qcorr::density(qcorr::encode_joint(random_gray(4, rng), random_gray(4, rng)));
  const Register keep1{QubitLabel::position(0), QubitLabel::position(2), kA, kB};
  const Register keep2{QubitLabel::position(2), kB};
  CHECK(max_abs_diff(qcorr::partial_trace(qcorr::partial_trace(big, keep1), keep2).matrix,
                     qcorr::partial_trace(big, keep2).matrix) < 1e-12);
}

TEST_CASE("reduced_density agrees with partial_trace of the density") {
  std::mt19937_64 rng(47);
  const auto s = qcorr::encode_joint(random_gray(4, rng), random_gray(4, rng));
  const auto rho = qcorr::density(s);
  const Register keeps[] = {{kA}, {kA, kB}, qcorr::position_labels(4), {QubitLabel::position(1), kB}};
  for (const auto& keep : keeps) {
    const auto a = qcorr::reduced_density(s, keep);
    const auto b = qcorr::partial_trace(rho, keep);
    CHECK(a.reg == b.reg);
    CHECK(max_abs_diff(a.matrix, b.matrix) < 1e-14);
  }
}

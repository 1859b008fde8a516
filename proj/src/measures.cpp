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

#include "qcorr/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

bool contains(std::span<const QubitLabel> labels, const QubitLabel& q) {
  return std::find(labels.begin(), labels.end(), q) != labels.end();
}

void require_disjoint(std::span<const QubitLabel> a, std::span<const QubitLabel> b) {
  for (const auto& q : a) {
    if (contains(b, q)) throw InputError("subsystems overlap on qubit " + q.name());
  }
}

Register join(std::span<const QubitLabel> a, std::span<const QubitLabel> b) {
  Register out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

double entropy_of_spectrum(const Spectrum& spectrum) {
  double s = 0.0;
  for (double lambda : spectrum.values) {
    if (lambda < -kClampTolerance) {
      throw NumericError("density matrix has eigenvalue " + std::to_string(lambda) + " below -1e-9");
    }
    if (lambda <= 0.0) continue;
    s -= lambda * std::log2(lambda);
  }
  return std::max(0.0, s);
}

double von_neumann_entropy(const SymMatrix& rho) { return entropy_of_spectrum(sym_eigenvalues(rho)); }

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix); }

double subsystem_entropy(const DensityMatrix& rho, std::span<const QubitLabel> part) {
  if (part.size() == rho.reg.size() &&
      std::all_of(rho.reg.begin(), rho.reg.end(), [&](const auto& q) { return contains(part, q); })) {
    return von_neumann_entropy(rho);
  }
  return von_neumann_entropy(partial_trace(rho, part));
}

double conditional_entropy(const DensityMatrix& rho, std::span<const QubitLabel> part_a,
                           std::span<const QubitLabel> part_b) {
  require_disjoint(part_a, part_b);
  const auto ab = join(part_a, part_b);
  return subsystem_entropy(rho, ab) - subsystem_entropy(rho, part_b);
}

double quantum_mutual_information(const DensityMatrix& rho, std::span<const QubitLabel> part_a,
                                  std::span<const QubitLabel> part_b) {
  if (part_a.empty() || part_b.empty()) throw InputError("mutual information needs two nonempty parts");
  require_disjoint(part_a, part_b);
  const auto ab = join(part_a, part_b);
  const double mi = subsystem_entropy(rho, part_a) + subsystem_entropy(rho, part_b) - subsystem_entropy(rho, ab);
  if (mi < -kClampTolerance) {
    throw NumericError("quantum mutual information " + std::to_string(mi) + " is negative");
  }
  return std::max(0.0, mi);
}

TripartiteEntropies tripartite_entropies(const DensityMatrix& rho, std::span<const QubitLabel> third,
                                         std::span<const QubitLabel> part_a,
                                         std::span<const QubitLabel> part_b) {
  if (third.empty() || part_a.empty() || part_b.empty()) {
    throw InputError("tripartite measures need three nonempty parts");
  }
  require_disjoint(third, part_a);
  require_disjoint(third, part_b);
  require_disjoint(part_a, part_b);
  if (third.size() + part_a.size() + part_b.size() != rho.reg.size()) {
    throw InputError("tripartite parts do not cover the register");
  }
  for (const auto& q : rho.reg) {
    if (!contains(third, q) && !contains(part_a, q) && !contains(part_b, q)) {
      throw InputError("qubit " + q.name() + " is in no part");
    }
  }

  TripartiteEntropies s;
  s.s_c = subsystem_entropy(rho, third);
  s.s_a = subsystem_entropy(rho, part_a);
  s.s_b = subsystem_entropy(rho, part_b);
  s.s_ab = subsystem_entropy(rho, join(part_a, part_b));
  s.s_ac = subsystem_entropy(rho, join(third, part_a));
  s.s_bc = subsystem_entropy(rho, join(third, part_b));
  s.s_abc = von_neumann_entropy(rho);
  return s;
}

TripartiteMeasures tripartite_measures(const TripartiteEntropies& s) {
  TripartiteMeasures m;
  m.interaction = s.s_a + s.s_b + s.s_c - s.s_ab - s.s_ac - s.s_bc + s.s_abc;
  m.total = s.s_a + s.s_b + s.s_c - s.s_abc;
  m.dual_total = s.s_ab + s.s_ac + s.s_bc - 2.0 * s.s_abc;
  return m;
}

TripartiteMeasures tripartite_measures(const DensityMatrix& rho, std::span<const QubitLabel> third,
                                       std::span<const QubitLabel> part_a,
                                       std::span<const QubitLabel> part_b) {
  return tripartite_measures(tripartite_entropies(rho, third, part_a, part_b));
}

std::array<std::uint64_t, 256> JointHistogram::marginal_a() const {
  std::array<std::uint64_t, 256> m{};
  for (int va = 0; va < 256; ++va) {
    for (int vb = 0; vb < 256; ++vb) m[va] += count(va, vb);
  }
  return m;
}

std::array<std::uint64_t, 256> JointHistogram::marginal_b() const {
  std::array<std::uint64_t, 256> m{};
  for (int va = 0; va < 256; ++va) {
    for (int vb = 0; vb < 256; ++vb) m[vb] += count(va, vb);
  }
  return m;
}

JointHistogram joint_histogram(const Image& a, const Image& b) {
  if (a.side() != b.side()) {
    throw InputError("image sizes differ: " + std::to_string(a.side()) + " vs " + std::to_string(b.side()));
  }
  JointHistogram h;
  for (std::size_t i = 0; i < a.size(); ++i) h.add(a.at(i), b.at(i));
  return h;
}

double shannon_entropy(std::span<const std::uint64_t> counts) {
  std::vector<std::uint64_t> nz;
  std::uint64_t total = 0;
  for (auto c : counts) {
    if (c == 0) continue;
    nz.push_back(c);
    total += c;
  }
  if (total == 0) return 0.0;
  // Fixed summation order so relabeled histograms give bit-identical results.
  std::sort(nz.begin(), nz.end());
  const double t = static_cast<double>(total);
  double h = 0.0;
  for (auto c : nz) {
    const double p = static_cast<double>(c) / t;
    h -= p * std::log2(p);
  }
  return std::max(0.0, h);
}

ClassicalEntropies classical_entropies(const JointHistogram& h) {
  if (h.total() == 0) throw InputError("empty joint histogram");
  ClassicalEntropies e;
  const auto ma = h.marginal_a();
  const auto mb = h.marginal_b();
  e.h_a = shannon_entropy(ma);
  e.h_b = shannon_entropy(mb);
  e.h_ab = shannon_entropy(h.cells());
  e.mutual = std::max(0.0, e.h_a + e.h_b - e.h_ab);
  e.nmi = e.h_ab == 0.0 ? 2.0 : (e.h_a + e.h_b) / e.h_ab;
  return e;
}

CorrelationReport correlation_report(const Image& a, const Image& b, bool with_classical) {
  const auto rho = density(encode_joint(a, b));
  const auto positions = position_labels(2 * a.bits_per_axis());
  const Register ca{QubitLabel::color_a()};
  const Register cb{QubitLabel::color_b()};

  const auto s = tripartite_entropies(rho, positions, ca, cb);
  const auto m = tripartite_measures(s);

  CorrelationReport r;
  r.s_a = s.s_a;
  r.s_b = s.s_b;
  r.s_12 = s.s_c;
  r.s_ab = s.s_ab;
  r.s_a12 = s.s_ac;
  r.s_b12 = s.s_bc;
  r.s_total = s.s_abc;
  r.i0 = m.interaction;
  r.it = m.total;
  r.id = m.dual_total;
  r.i_ab = std::max(0.0, s.s_a + s.s_b - s.s_ab);
  if (with_classical) r.classical = classical_entropies(joint_histogram(a, b));
  return r;
}

}  // namespace qcorr

// Copyright 2026 The qpga authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpga/scattering.hpp"

#include <cmath>
#include <string>

#include "qpga/errors.hpp"
#include "qpga/rng.hpp"

namespace qpga {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
  return h;
}

// y -> z basis rotation H S^dag, S = diag(1, i): maps the sigma_y
// eigenbasis onto the computational basis, so the y polarization is read
// as a sigma_z measurement like everything else.
ComplexMatrix y_rotation() {
  ComplexMatrix g(2, 2);
  g << Complex(kInvSqrt2, 0), Complex(0, -kInvSqrt2), Complex(kInvSqrt2, 0),
      Complex(0, kInvSqrt2);
  return g;
}

// Partial trace of a (2N)x(2N) joint density onto the 2-dim ancilla factor
// (ancilla is the leftmost register).
ComplexMatrix reduce_to_ancilla(const ComplexMatrix& joint, int sys_dim) {
  ComplexMatrix anc = ComplexMatrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      anc(a, b) = joint.block(a * sys_dim, b * sys_dim, sys_dim, sys_dim).trace();
  return anc;
}

double polarization_after(const ComplexMatrix& rotation, const ComplexMatrix& joint,
                          int sys_dim) {
  const ComplexMatrix rot = tensor(rotation, ComplexMatrix::Identity(sys_dim, sys_dim));
  const ComplexMatrix anc = reduce_to_ancilla(rot * joint * rot.adjoint(), sys_dim);
  return (anc(0, 0) - anc(1, 1)).real();
}

long sample_plus_count(double p_plus, long shots, SplitMix64 stream) {
  long plus = 0;
  for (long s = 0; s < shots; ++s) {
    if (stream.next_double() < p_plus) ++plus;
  }
  return plus;
}

void fill_sampled(double exact_value, long shots, SplitMix64 stream, double& mean,
                  double& stderr_out) {
  const long plus = sample_plus_count((1.0 + exact_value) / 2.0, shots, stream);
  mean = static_cast<double>(2 * plus - shots) / static_cast<double>(shots);
  stderr_out = std::sqrt((1.0 - mean * mean) / static_cast<double>(shots));
}

}  // namespace

CircuitResult scatter_exact(const QuditState& rho, const ComplexMatrix& a, double tol) {
  const int dim = rho.dim();
  if (a.rows() != dim || a.cols() != dim) {
    throw DimensionError("scatter_exact: operator is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " but the state has dimension " +
                         std::to_string(dim));
  }
  if (!is_unitary(a, tol)) {
    throw ValidationError("scatter_exact: controlled operator is not unitary within tolerance");
  }

  // |0><0| ox rho, then H on the ancilla, then the controlled gate.
  ComplexMatrix joint = ComplexMatrix::Zero(2 * dim, 2 * dim);
  joint.topLeftCorner(dim, dim) = rho.density();

  const ComplexMatrix h_full = tensor(hadamard(), ComplexMatrix::Identity(dim, dim));
  joint = h_full * joint * h_full.adjoint();

  ComplexMatrix ctrl = ComplexMatrix::Zero(2 * dim, 2 * dim);
  ctrl.topLeftCorner(dim, dim) = ComplexMatrix::Identity(dim, dim);
  ctrl.bottomRightCorner(dim, dim) = a;
  joint = ctrl * joint * ctrl.adjoint();

  CircuitResult result;
  result.mode = RunMode::exact;
  result.sigma_z = polarization_after(hadamard(), joint, dim);
  result.sigma_y = polarization_after(y_rotation(), joint, dim);
  return result;
}

CircuitResult sample_polarizations(const CircuitResult& exact, long shots,
                                   std::uint64_t seed) {
  if (shots < 1) throw ValidationError("sampling requires shots >= 1");
  const SplitMix64 root(seed);
  CircuitResult result;
  result.mode = RunMode::sampled;
  result.shots = shots;
  result.seed = seed;
  fill_sampled(exact.sigma_z, shots, root.split(0), result.sigma_z, result.stderr_z);
  fill_sampled(exact.sigma_y, shots, root.split(1), result.sigma_y, result.stderr_y);
  return result;
}

CircuitResult scatter_sampled(const QuditState& rho, const ComplexMatrix& a, long shots,
                              std::uint64_t seed, double tol) {
  return sample_polarizations(scatter_exact(rho, a, tol), shots, seed);
}

}  // namespace qpga

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

#include "qpga/state.hpp"

#include <cmath>
#include <string>

#include "qpga/errors.hpp"

namespace qpga {

namespace {
// Spectrum may dip slightly negative from rounding; anything below this is a
// genuinely non-positive matrix.
constexpr double kEigenvalueFloor = -1e-10;
}  // namespace

QuditState QuditState::pure(ComplexVector amplitudes, double tol) {
  const int dim = static_cast<int>(amplitudes.size());
  if (dim < 1) throw ValidationError("pure state: empty amplitude vector");
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw ValidationError("pure state: norm " + std::to_string(norm) +
                          " deviates from 1 beyond tolerance");
  }
  return QuditState(dim, StateKind::pure, std::move(amplitudes), ComplexMatrix());
}

QuditState QuditState::mixed(ComplexMatrix density, double tol) {
  const int dim = static_cast<int>(density.rows());
  if (dim < 1 || density.cols() != density.rows()) {
    throw ValidationError("mixed state: density matrix must be square and nonempty");
  }
  if (!is_hermitian(density, tol)) {
    throw ValidationError("mixed state: density matrix is not hermitian within tolerance");
  }
  const double trace = density.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw ValidationError("mixed state: trace " + std::to_string(trace) +
                          " deviates from 1 beyond tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(density, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues().minCoeff();
  if (lowest < kEigenvalueFloor) {
    throw ValidationError("mixed state: eigenvalue " + std::to_string(lowest) +
                          " below the positivity floor");
  }
  return QuditState(dim, StateKind::mixed, ComplexVector(), std::move(density));
}

QuditState QuditState::basis_state(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw ValidationError("basis_state: index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return pure(std::move(v));
}

QuditState QuditState::maximally_mixed(int dim) {
  if (dim < 1) throw ValidationError("maximally_mixed: dimension must be >= 1");
  return mixed(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

const ComplexVector& QuditState::amplitudes() const {
  if (kind_ != StateKind::pure) {
    throw ValidationError("amplitudes(): state is mixed; use density()");
  }
  return amplitudes_;
}

ComplexMatrix QuditState::density() const {
  if (kind_ == StateKind::pure) return amplitudes_ * amplitudes_.adjoint();
  return density_;
}

}  // namespace qpga

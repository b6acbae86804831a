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

#pragma once

#include <Eigen/Dense>

#include "qpga/linalg.hpp"
#include "qpga/rng.hpp"
#include "qpga/state.hpp"

namespace qpga::test {

inline ComplexMatrix random_matrix(int rows, int cols, SplitMix64& rng) {
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
  return m;
}

inline ComplexMatrix random_hermitian(int dim, SplitMix64& rng) {
  const ComplexMatrix m = random_matrix(dim, dim, rng);
  return (m + m.adjoint()) / 2.0;
}

inline ComplexMatrix random_unitary(int dim, SplitMix64& rng) {
  const ComplexMatrix m = random_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  ComplexMatrix q = qr.householderQ();
  // Fix the phase ambiguity so the result is stable across Eigen versions.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline QuditState random_pure(int dim, SplitMix64& rng) {
  ComplexVector v(dim);
  for (int n = 0; n < dim; ++n)
    v(n) = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
  v /= v.norm();
  return QuditState::pure(std::move(v));
}

inline QuditState random_mixed(int dim, SplitMix64& rng) {
  const ComplexMatrix m = random_matrix(dim, dim, rng);
  ComplexMatrix rho = m * m.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return QuditState::mixed(std::move(rho));
}

}  // namespace qpga::test

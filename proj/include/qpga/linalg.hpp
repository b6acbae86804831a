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
#include <complex>
#include <cstdint>

#include "qpga/tolerances.hpp"

namespace qpga {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Refuse to build tensor products beyond this many entries; everything here
// is desk scale and a runaway Kronecker chain is a bug, not a workload.
inline constexpr std::int64_t kMaxTensorElements = std::int64_t{1} << 26;

/// N-dimensional discrete Fourier transform, entry (j,k) = exp(+2*pi*i*j*k/N)/sqrt(N).
/// The positive exponent is fixed project-wide: it is the unique sign for which
/// V = F U F^dag together with the phase exp(i*pi*p*q/N) yields hermitian
/// phase-point operators.
ComplexMatrix dft_matrix(int dim);

/// Kronecker product, (a ox b)[(i*rows_b + k), (j*cols_b + l)] = a(i,j) * b(k,l).
/// The left factor is the slow index; register chains list the leftmost
/// register first.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::int64_t max_elements = kMaxTensorElements);

/// Kronecker product of column vectors with the same index convention.
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b,
                     std::int64_t max_elements = kMaxTensorElements);

/// Tr(a*b) as sum_{i,j} a(i,j) b(j,i); never forms the product matrix.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise comparison with an absolute tolerance.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

bool is_unitary(const ComplexMatrix& a, double tol = kConstructionTol);
bool is_hermitian(const ComplexMatrix& a, double tol = kConstructionTol);

}  // namespace qpga

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

#include "qpga/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpga/errors.hpp"

namespace qpga {

namespace {

void check_tensor_size(std::int64_t rows, std::int64_t cols, std::int64_t max_elements) {
  if (rows <= 0 || cols <= 0 || rows > max_elements || cols > max_elements ||
      rows * cols > max_elements) {
    throw DimensionError("tensor product size " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds the configured maximum of " +
                         std::to_string(max_elements) + " elements");
  }
}

}  // namespace

ComplexMatrix dft_matrix(int dim) {
  if (dim < 1) throw DimensionError("dft_matrix: dimension must be >= 1");
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix f(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      // jk mod N keeps the argument small; exp(2 pi i jk / N) is N-periodic.
      const double arg = 2.0 * std::numbers::pi * ((j * k) % dim) / dim;
      f(j, k) = norm * Complex(std::cos(arg), std::sin(arg));
    }
  }
  return f;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::int64_t max_elements) {
  const std::int64_t rows = static_cast<std::int64_t>(a.rows()) * b.rows();
  const std::int64_t cols = static_cast<std::int64_t>(a.cols()) * b.cols();
  check_tensor_size(rows, cols, max_elements);
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b,
                     std::int64_t max_elements) {
  const std::int64_t n = static_cast<std::int64_t>(a.size()) * b.size();
  check_tensor_size(n, 1, max_elements);
  ComplexVector out(n);
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionError("trace_product: need square matrices of equal dimension, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a.cwiseProduct(b.transpose()).sum();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  ComplexMatrix gram = a * a.adjoint();
  gram -= ComplexMatrix::Identity(a.rows(), a.cols());
  return gram.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qpga

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

#include "qpga/wigner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpga/errors.hpp"
#include "qpga/phase_point.hpp"

namespace qpga {

namespace {

int mod(int value, int period) {
  const int r = value % period;
  return r < 0 ? r + period : r;
}

}  // namespace

WignerGrid wigner(const QuditState& rho, double tol) {
  const int n_dim = rho.dim();
  const int grid = 2 * n_dim;
  const ComplexMatrix density = rho.density();
  WignerGrid w{n_dim, Eigen::MatrixXd(grid, grid)};
  for (int q = 0; q < grid; ++q) {
    for (int p = 0; p < grid; ++p) {
      const Complex t =
          trace_product(phase_point_op(PhasePointIndex(n_dim, q, p)), density);
      if (std::abs(t.imag()) > tol) {
        throw ValidationError("wigner: Tr(A(" + std::to_string(q) + "," + std::to_string(p) +
                              ") rho) has imaginary residue " + std::to_string(t.imag()));
      }
      w.values(q, p) = t.real() / (2.0 * n_dim);
    }
  }
  return w;
}

double line_sum(const WignerGrid& w, int b, int c) {
  const int grid = w.grid();
  const int b_m = mod(b, grid);
  const int c_m = mod(c, grid);
  double sum = 0.0;
  for (int q = 0; q < grid; ++q) sum += w.values(q, mod(b_m * q + c_m, grid));
  return sum;
}

double vline_sum(const WignerGrid& w, int q0) {
  const int grid = w.grid();
  return w.values.row(mod(q0, grid)).sum();
}

std::map<int, double> translation_probabilities(const QuditState& rho, int b, int a,
                                                double phase_tol) {
  const int n_dim = rho.dim();
  const TranslationIndex idx(n_dim, b, a);
  if (idx.a % n_dim == 0 && idx.b % n_dim == 0) {
    throw ValidationError("translation_probabilities: T(" + std::to_string(idx.b) + "," +
                          std::to_string(idx.a) +
                          ") is a global phase; no nontrivial eigenspaces");
  }
  const ComplexMatrix t = translation_op(idx);

  // T is unitary hence normal: its Schur form is diagonal and the Schur
  // basis is an orthonormal eigenbasis, degenerate phases included.
  Eigen::ComplexSchur<ComplexMatrix> schur(t, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw EigenphaseError("translation_probabilities: Schur decomposition failed");
  }
  const ComplexMatrix& triangular = schur.matrixT();
  const ComplexMatrix& basis = schur.matrixU();
  for (int i = 0; i < n_dim; ++i) {
    for (int j = i + 1; j < n_dim; ++j) {
      if (std::abs(triangular(i, j)) > phase_tol) {
        throw EigenphaseError("translation_probabilities: operator is not normal");
      }
    }
  }

  const ComplexMatrix density = rho.density();
  std::map<int, double> probabilities;
  for (int i = 0; i < n_dim; ++i) {
    const Complex lambda = triangular(i, i);
    // Match onto the lattice e^{i pi c / N}, c in [0, 2N).
    const int c = mod(static_cast<int>(std::lround(std::arg(lambda) * n_dim /
                                                   std::numbers::pi)),
                      2 * n_dim);
    const Complex lattice{std::cos(std::numbers::pi * c / n_dim),
                          std::sin(std::numbers::pi * c / n_dim)};
    if (std::abs(lambda - lattice) > phase_tol) {
      throw EigenphaseError(
          "translation_probabilities: eigenvalue off the e^{i pi c/N} lattice by " +
          std::to_string(std::abs(lambda - lattice)));
    }
    const ComplexVector vec = basis.col(i);
    probabilities[c] += (vec.adjoint() * density * vec)(0, 0).real();
  }
  return probabilities;
}

CatMapSpec::CatMapSpec(int dim_in, int shear_in, int offset_in) : dim(dim_in) {
  if (dim_in < 2) throw DimensionError("CatMapSpec: dimension must be >= 2");
  shear = mod(shear_in, 2 * dim_in);
  offset = mod(offset_in, 2 * dim_in);
}

namespace {

ComplexMatrix cat_map_matrix(const CatMapSpec& spec) {
  // Quadratic phase: shear b as e^{i pi b n^2 / N}, offset c as the
  // momentum displacement e^{i pi c n / N}.
  const int n_dim = spec.dim;
  ComplexMatrix c_mat = ComplexMatrix::Zero(n_dim, n_dim);
  for (int n = 0; n < n_dim; ++n) {
    const int numerator = mod(spec.shear * n * n + spec.offset * n, 2 * n_dim);
    const double arg = std::numbers::pi * numerator / n_dim;
    c_mat(n, n) = Complex(std::cos(arg), std::sin(arg));
  }
  return c_mat;
}

}  // namespace

CatMapReport cat_map_scan(const CatMapSpec& spec, double tol) {
  const int n_dim = spec.dim;
  const int grid = 2 * n_dim;
  CatMapReport report{spec, cat_map_matrix(spec), Eigen::MatrixXd(grid, grid), 0.0, false};
  for (int q = 0; q < grid; ++q) {
    for (int p = 0; p < grid; ++p) {
      const ComplexMatrix& source = phase_point_op(PhasePointIndex(n_dim, q, p));
      const ComplexMatrix& target = phase_point_op(
          PhasePointIndex(n_dim, q, p - spec.shear * q - spec.offset));
      const double residual =
          (report.unitary.adjoint() * source * report.unitary - target)
              .cwiseAbs()
              .maxCoeff();
      report.residuals(q, p) = residual;
    }
  }
  report.max_residual = report.residuals.maxCoeff();
  report.exact = report.max_residual <= tol;
  return report;
}

ComplexMatrix cat_map_unitary(const CatMapSpec& spec, double tol) {
  CatMapReport report = cat_map_scan(spec, tol);
  const Eigen::MatrixXd cell = report.residuals.topLeftCorner(spec.dim, spec.dim);
  const double cell_max = cell.maxCoeff();
  if (cell_max > tol) {
    throw CovarianceError("cat map (shear=" + std::to_string(spec.shear) + ", offset=" +
                              std::to_string(spec.offset) + ", N=" + std::to_string(spec.dim) +
                              ") is not exactly covariant: fundamental-cell residual " +
                              std::to_string(cell_max),
                          cell, cell_max);
  }
  return std::move(report.unitary);
}

}  // namespace qpga

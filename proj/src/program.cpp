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

#include "qpga/program.hpp"

#include <cmath>
#include <string>

#include "qpga/errors.hpp"
#include "qpga/phase_point.hpp"

namespace qpga {

namespace {

void check_cell_key(const GridPoint& pt, int dim) {
  if (pt.first < 0 || pt.first >= dim || pt.second < 0 || pt.second >= dim) {
    throw DimensionError("coefficient key (" + std::to_string(pt.first) + "," +
                         std::to_string(pt.second) + ") outside the fundamental cell [0," +
                         std::to_string(dim) + ")^2");
  }
}

}  // namespace

OperatorSpec OperatorSpec::from_matrix(ComplexMatrix m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw DimensionError("OperatorSpec: matrix must be square and nonempty");
  }
  OperatorSpec op;
  op.dim_ = static_cast<int>(m.rows());
  op.matrix_ = std::move(m);
  op.has_matrix_ = true;
  return op;
}

OperatorSpec OperatorSpec::from_coefficients(int dim, CoefficientMap coeffs) {
  if (dim < 1) throw DimensionError("OperatorSpec: dimension must be >= 1");
  for (const auto& [pt, value] : coeffs) check_cell_key(pt, dim);
  OperatorSpec op;
  op.dim_ = dim;
  op.coeffs_ = std::move(coeffs);
  op.has_coeffs_ = true;
  return op;
}

const ComplexMatrix& OperatorSpec::matrix() const {
  if (!has_matrix_) {
    ComplexMatrix m = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& [pt, value] : coeffs_) {
      m += value * phase_point_op(PhasePointIndex(dim_, pt.first, pt.second));
    }
    matrix_ = std::move(m);
    has_matrix_ = true;
  }
  return matrix_;
}

const CoefficientMap& OperatorSpec::coefficients() const {
  if (!has_coeffs_) {
    CoefficientMap coeffs;
    for (int q = 0; q < dim_; ++q) {
      for (int p = 0; p < dim_; ++p) {
        coeffs[{q, p}] =
            trace_product(matrix_, phase_point_op(PhasePointIndex(dim_, q, p))) /
            static_cast<double>(dim_);
      }
    }
    coeffs_ = std::move(coeffs);
    has_coeffs_ = true;
  }
  return coeffs_;
}

CoefficientMap expand(const OperatorSpec& op) { return op.coefficients(); }

std::pair<RealCoefficientMap, RealCoefficientMap> hermitian_split(const OperatorSpec& op) {
  RealCoefficientMap h, k;
  for (const auto& [pt, value] : op.coefficients()) {
    h[pt] = value.real();
    k[pt] = value.imag();
  }
  return {std::move(h), std::move(k)};
}

ProgramState compile_program(int dim, const RealCoefficientMap& coeffs, double drop_tol) {
  if (dim < 2) throw DimensionError("compile_program: dimension must be >= 2");
  double scale = 0.0;
  for (const auto& [pt, value] : coeffs) {
    check_cell_key(pt, dim);
    if (std::abs(value) >= drop_tol) scale += std::abs(value);
  }
  if (scale == 0.0) {
    throw DegenerateProgramError("compile_program: all coefficients vanish");
  }
  ProgramState ps;
  ps.dim = dim;
  ps.extent = dim;
  ps.scale = scale;
  for (const auto& [pt, value] : coeffs) {
    if (std::abs(value) < drop_tol) continue;
    ps.amplitude[pt] = std::sqrt(std::abs(value) / scale);
    ps.sign_bit[pt] = value < 0.0 ? 1 : 0;
  }
  return ps;
}

RealCoefficientMap decompile_program(const ProgramState& ps) {
  RealCoefficientMap coeffs;
  for (const auto& [pt, c] : ps.amplitude) {
    const int phi = ps.sign_bit.at(pt);
    coeffs[pt] = ps.scale * c * c * (phi ? -1.0 : 1.0);
  }
  return coeffs;
}

ComplexVector program_vector(const ProgramState& ps) {
  if (ps.extent < 1 || ps.amplitude.empty()) {
    throw DegenerateProgramError("program_vector: empty program");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(ps.extent) * ps.extent * 2);
  double norm2 = 0.0;
  for (const auto& [pt, c] : ps.amplitude) {
    const auto [q, p] = pt;
    if (q < 0 || q >= ps.extent || p < 0 || p >= ps.extent) {
      throw DimensionError("program_vector: point (" + std::to_string(q) + "," +
                           std::to_string(p) + ") outside register extent " +
                           std::to_string(ps.extent));
    }
    const int phi = ps.sign_bit.at(pt);
    v((static_cast<Eigen::Index>(q) * ps.extent + p) * 2 + phi) = c;
    norm2 += c * c;
  }
  if (std::abs(norm2 - 1.0) > kConstructionTol) {
    throw ValidationError("program_vector: amplitudes are not normalized (sum c^2 = " +
                          std::to_string(norm2) + ")");
  }
  return v;
}

}  // namespace qpga

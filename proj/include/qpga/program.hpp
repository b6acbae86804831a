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

#include <map>
#include <utility>

#include "qpga/linalg.hpp"

namespace qpga {

using GridPoint = std::pair<int, int>;  // (q, p)
using CoefficientMap = std::map<GridPoint, Complex>;
using RealCoefficientMap = std::map<GridPoint, double>;

/// An operator on the N-dimensional system, held as a dense matrix, as
/// expansion coefficients o(q,p) over the phase-point basis (q,p in [0,N)^2),
/// or both. The two forms are interconvertible; conversions are cached.
class OperatorSpec {
 public:
  static OperatorSpec from_matrix(ComplexMatrix m);
  static OperatorSpec from_coefficients(int dim, CoefficientMap coeffs);

  int dim() const { return dim_; }
  bool has_matrix() const { return has_matrix_; }
  bool has_coefficients() const { return has_coeffs_; }

  /// Dense matrix form, materializing sum o(q,p) A(q,p) when needed.
  const ComplexMatrix& matrix() const;

  /// Coefficient form, expanding o(q,p) = Tr(O A(q,p)) / N when needed.
  const CoefficientMap& coefficients() const;

 private:
  OperatorSpec() = default;

  int dim_ = 0;
  mutable bool has_matrix_ = false;
  mutable bool has_coeffs_ = false;
  mutable ComplexMatrix matrix_;
  mutable CoefficientMap coeffs_;
};

/// Program-register payload for the gate array: nonnegative amplitudes
/// c(q,p) with sum of squares 1, sign bits phi(q,p) in {0,1}, and the
/// out-of-band scale S. The encoded real coefficient at each point is
/// S * c^2(q,p) * (-1)^phi(q,p).
///
/// `extent` is the dimension of each program register: N for programs
/// compiled from an operator expansion (support inside the fundamental
/// cell), 2N for grid-addressed point and domain programs.
struct ProgramState {
  int dim = 0;     // system dimension N
  int extent = 0;  // program register dimension (N or 2N)
  std::map<GridPoint, double> amplitude;
  std::map<GridPoint, int> sign_bit;
  double scale = 0.0;

  bool contains(const GridPoint& pt) const { return amplitude.count(pt) != 0; }
};

/// Expansion coefficients o(q,p) = Tr(O A(q,p)) / N over the fundamental cell.
CoefficientMap expand(const OperatorSpec& op);

/// Split into real coefficient maps h = Re o and k = Im o, so that
/// O = sum h A  +  i * sum k A with both component sums hermitian.
std::pair<RealCoefficientMap, RealCoefficientMap> hermitian_split(const OperatorSpec& op);

/// Normalize a real coefficient map into a program: S = sum |coeff|,
/// c = sqrt(|coeff|/S), phi = [coeff < 0]. Coefficients below drop_tol in
/// magnitude are treated as exact zeros. Throws DegenerateProgramError when
/// nothing survives.
ProgramState compile_program(int dim, const RealCoefficientMap& coeffs,
                             double drop_tol = kCoefficientDropTol);

/// Inverse of compile_program: the encoded coefficients S * c^2 * (-1)^phi.
RealCoefficientMap decompile_program(const ProgramState& ps);

/// The program register state vector over (q-register) ox (p-register) ox
/// (sign qubit): amplitude c(q,p) at basis index (q, p, phi(q,p)). Length
/// extent * extent * 2; unit norm.
ComplexVector program_vector(const ProgramState& ps);

}  // namespace qpga

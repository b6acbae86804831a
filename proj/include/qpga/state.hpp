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

#include "qpga/linalg.hpp"

namespace qpga {

enum class StateKind { pure, mixed };

/// State of an N-dimensional system: a unit vector or a density matrix.
/// Construction validates the defining invariants (norm 1; hermitian,
/// unit trace, positive semidefinite up to -1e-10 on the spectrum) and the
/// object is immutable afterwards.
class QuditState {
 public:
  static QuditState pure(ComplexVector amplitudes, double tol = kConstructionTol);
  static QuditState mixed(ComplexMatrix density, double tol = kConstructionTol);

  static QuditState basis_state(int dim, int index);
  static QuditState maximally_mixed(int dim);

  int dim() const { return dim_; }
  StateKind kind() const { return kind_; }

  /// Pure amplitudes; throws for mixed states.
  const ComplexVector& amplitudes() const;

  /// Density matrix view, materialized as |psi><psi| for pure states.
  ComplexMatrix density() const;

 private:
  QuditState(int dim, StateKind kind, ComplexVector amps, ComplexMatrix rho)
      : dim_(dim), kind_(kind), amplitudes_(std::move(amps)), density_(std::move(rho)) {}

  int dim_;
  StateKind kind_;
  ComplexVector amplitudes_;  // pure only
  ComplexMatrix density_;     // mixed only
};

}  // namespace qpga

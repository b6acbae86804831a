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

#include <cstdint>

#include "qpga/state.hpp"

namespace qpga {

enum class RunMode { exact, sampled };

/// Ancilla polarizations produced by a circuit run. In sampled mode the
/// values are empirical means of +-1 outcomes with binomial standard errors
/// sqrt((1 - mean^2)/shots); exact mode leaves shots = 0 and stderr = 0.
struct CircuitResult {
  double sigma_z = 0.0;
  double sigma_y = 0.0;
  RunMode mode = RunMode::exact;
  long shots = 0;
  std::uint64_t seed = 0;
  double stderr_z = 0.0;
  double stderr_y = 0.0;
};

/// Scattering circuit: ancilla |0>, Hadamard, controlled-a on the system,
/// then one polarization readout per basis. The z reading applies the
/// closing Hadamard (x -> z rotation) and measures sigma_z; the y reading
/// rotates by H S^dag (y -> z, S = diag(1, i)) and measures sigma_z. The
/// full joint density matrix is evolved and reduced to the ancilla — the
/// direct-trace identity sigma_z + i sigma_y = Tr(a rho) is what the tests
/// check against, never how this function computes.
///
/// Preconditions: a unitary within tol, dimensions match.
CircuitResult scatter_exact(const QuditState& rho, const ComplexMatrix& a,
                            double tol = kCircuitTol);

/// Same circuit, but the two polarizations are estimated from `shots`
/// independent +-1 outcomes each, drawn from the exact outcome
/// probabilities (1 +- <sigma>)/2. The z and y draws use independent
/// substreams split from `seed`; results are a pure function of
/// (rho, a, shots, seed).
CircuitResult scatter_sampled(const QuditState& rho, const ComplexMatrix& a,
                              long shots, std::uint64_t seed,
                              double tol = kCircuitTol);

/// Estimate both polarizations of an exact result by seeded sampling.
/// Shared by the scattering and programmable-array front ends.
CircuitResult sample_polarizations(const CircuitResult& exact, long shots,
                                   std::uint64_t seed);

}  // namespace qpga

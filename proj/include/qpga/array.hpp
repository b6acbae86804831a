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

#include <array>
#include <cstdint>
#include <string_view>

#include "qpga/program.hpp"
#include "qpga/scattering.hpp"
#include "qpga/state.hpp"

namespace qpga {

/// Register layout of the programmable array. The order below is the single
/// project-wide tensor convention; the leftmost register owns the slowest
/// index.
struct ArrayConfig {
  int dim = 0;
  bool include_sign_register = false;

  static constexpr std::array<std::string_view, 5> register_order{
      "ancilla", "q-register", "p-register", "sign", "system"};
};

/// Fixed gate array evaluating one phase-point operator, programmed by the
/// basis state |q>|p> (grid indices, q,p in [0,2N)). The ancilla-controlled
/// network applies V^{-1} powers driven by the p register, the reflection,
/// U powers driven by the q register, and the inter-register phase
/// e^{i pi p q / N}. Exact output satisfies sigma_z = Tr(rho A(q,p)) = 2N W(q,p).
CircuitResult run_point_program(const QuditState& rho, int q, int p);
CircuitResult run_point_program_sampled(const QuditState& rho, int q, int p,
                                        long shots, std::uint64_t seed);

/// Same array with the program register in the state program_vector(ps) and
/// the ancilla-controlled sign flip on the sign qubit. Exact output:
/// sigma_z = Tr(rho sum c^2(q,p) (-1)^phi(q,p) A(q,p)).
CircuitResult run_program(const QuditState& rho, const ProgramState& ps);
CircuitResult run_program_sampled(const QuditState& rho, const ProgramState& ps,
                                  long shots, std::uint64_t seed);

/// Expectation value assembled from the two compiled programs.
struct ExpectationResult {
  Complex value{0.0, 0.0};
  double stderr_re = 0.0;  // scale_h * stderr of the hermitian-part run
  double stderr_im = 0.0;  // scale_k * stderr of the anti-hermitian-part run
  double scale_h = 0.0;
  double scale_k = 0.0;
  RunMode mode = RunMode::exact;
  long shots = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;  // zero operator: value is exactly 0 by fiat
};

/// Full pipeline: expand O, split hermitian/anti-hermitian, compile both
/// programs, run each on the array, recombine as
/// S_h <sigma_z>_h + i S_k <sigma_z>_k. Exact mode reproduces Tr(rho O).
/// Sampled runs draw `shots` outcomes per program from substreams of `seed`.
ExpectationResult expectation(const QuditState& rho, const OperatorSpec& op,
                              RunMode mode = RunMode::exact, long shots = 0,
                              std::uint64_t seed = 0);

}  // namespace qpga

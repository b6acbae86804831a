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

#include "qpga/array.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpga/errors.hpp"
#include "qpga/rng.hpp"

namespace qpga {

namespace {

Complex cell_phase(int numerator, int dim) {
  // e^{i pi numerator / N}, numerator already reduced mod 2N by callers.
  const double arg = std::numbers::pi * numerator / dim;
  return {std::cos(arg), std::sin(arg)};
}

// The joint register stack (ancilla, q-register, p-register, [sign], system)
// flattened row-major in that order: the ancilla owns the slowest index.
struct JointShape {
  int extent;    // q/p register dimension E
  int sign_dim;  // 2 with the sign register, 1 without
  int dim;       // system dimension N

  Eigen::Index rest() const {
    return static_cast<Eigen::Index>(extent) * extent * sign_dim * dim;
  }
  Eigen::Index block_offset(int q, int p, int phi) const {
    return ((static_cast<Eigen::Index>(q) * extent + p) * sign_dim + phi) *
           static_cast<Eigen::Index>(dim);
  }
};

using JointColumns = Eigen::MatrixXcd;  // 2*rest rows, one column per system vector

void apply_hadamard_on_ancilla(JointColumns& cols, const JointShape& shape) {
  const Eigen::Index rest = shape.rest();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const JointColumns top = cols.topRows(rest);
  cols.topRows(rest) = (top + cols.bottomRows(rest)) * inv_sqrt2;
  cols.bottomRows(rest) = (top - cols.bottomRows(rest).eval()) * inv_sqrt2;
}

// Each stage below acts on the ancilla=1 half only, blockwise over the
// (q, p, phi) program values.

void apply_ctrl_shift_v_inverse(Eigen::Ref<JointColumns> bottom, const JointShape& shape) {
  const int n_dim = shape.dim;
  for (int q = 0; q < shape.extent; ++q) {
    for (int p = 0; p < shape.extent; ++p) {
      for (int phi = 0; phi < shape.sign_dim; ++phi) {
        const Eigen::Index off = shape.block_offset(q, p, phi);
        for (int n = 0; n < n_dim; ++n) {
          // V^{-p}|n> = e^{-2 pi i n p / N}|n>
          bottom.row(off + n) *= cell_phase(-2 * ((n * p) % (2 * n_dim)), n_dim);
        }
      }
    }
  }
}

void apply_ctrl_reflection(Eigen::Ref<JointColumns> bottom, const JointShape& shape) {
  const int n_dim = shape.dim;
  JointColumns scratch(n_dim, bottom.cols());
  for (int q = 0; q < shape.extent; ++q) {
    for (int p = 0; p < shape.extent; ++p) {
      for (int phi = 0; phi < shape.sign_dim; ++phi) {
        const Eigen::Index off = shape.block_offset(q, p, phi);
        scratch = bottom.middleRows(off, n_dim);
        for (int n = 0; n < n_dim; ++n) {
          bottom.row(off + (n_dim - n) % n_dim) = scratch.row(n);
        }
      }
    }
  }
}

void apply_ctrl_shift_u_powers(Eigen::Ref<JointColumns> bottom, const JointShape& shape) {
  const int n_dim = shape.dim;
  JointColumns scratch(n_dim, bottom.cols());
  for (int q = 0; q < shape.extent; ++q) {
    if (q % n_dim == 0) continue;  // U^q = I
    for (int p = 0; p < shape.extent; ++p) {
      for (int phi = 0; phi < shape.sign_dim; ++phi) {
        const Eigen::Index off = shape.block_offset(q, p, phi);
        scratch = bottom.middleRows(off, n_dim);
        for (int n = 0; n < n_dim; ++n) {
          bottom.row(off + (n + q) % n_dim) = scratch.row(n);
        }
      }
    }
  }
}

void apply_ctrl_cell_phase(Eigen::Ref<JointColumns> bottom, const JointShape& shape) {
  const int n_dim = shape.dim;
  for (int q = 0; q < shape.extent; ++q) {
    for (int p = 0; p < shape.extent; ++p) {
      const Complex phase = cell_phase((q * p) % (2 * n_dim), n_dim);
      for (int phi = 0; phi < shape.sign_dim; ++phi) {
        bottom.middleRows(shape.block_offset(q, p, phi), n_dim) *= phase;
      }
    }
  }
}

void apply_ctrl_sign_flip(Eigen::Ref<JointColumns> bottom, const JointShape& shape) {
  if (shape.sign_dim != 2) return;
  for (int q = 0; q < shape.extent; ++q) {
    for (int p = 0; p < shape.extent; ++p) {
      bottom.middleRows(shape.block_offset(q, p, 1), shape.dim) *= -1.0;
    }
  }
}

// Exact run of the gate array. The joint density |0><0| ox |Psi_P><Psi_P| ox rho
// is carried in factored form B rho B^dag, where the columns of B are the
// joint vectors for each system basis state (a single column when rho is
// pure); the circuit acts on B. The polarizations read
//   sigma_z = 2 Re Tr(K rho),  sigma_y = 2 Im Tr(K rho),  K = top^dag bottom,
// which is the closing-Hadamard sigma_z measurement and the H S^dag-rotated
// y measurement expressed on the pre-rotation state.
CircuitResult run_array(const QuditState& rho, const ProgramState& ps,
                        bool include_sign_register) {
  const int n_dim = rho.dim();
  if (ps.dim != n_dim) {
    throw DimensionError("run_array: program dimension " + std::to_string(ps.dim) +
                         " does not match state dimension " + std::to_string(n_dim));
  }
  const JointShape shape{ps.extent, include_sign_register ? 2 : 1, n_dim};
  const bool pure = rho.kind() == StateKind::pure;
  const int n_cols = pure ? 1 : n_dim;

  JointColumns cols = JointColumns::Zero(2 * shape.rest(), n_cols);
  double norm2 = 0.0;
  for (const auto& [pt, amp] : ps.amplitude) {
    const auto [q, p] = pt;
    if (q < 0 || q >= ps.extent || p < 0 || p >= ps.extent) {
      throw DimensionError("run_array: program point (" + std::to_string(q) + "," +
                           std::to_string(p) + ") outside register extent " +
                           std::to_string(ps.extent));
    }
    const int phi = include_sign_register ? ps.sign_bit.at(pt) : 0;
    const Eigen::Index off = shape.block_offset(q, p, phi);
    if (pure) {
      cols.col(0).segment(off, n_dim) = amp * rho.amplitudes();
    } else {
      for (int k = 0; k < n_dim; ++k) cols(off + k, k) = amp;
    }
    norm2 += amp * amp;
  }
  if (std::abs(norm2 - 1.0) > kConstructionTol) {
    throw ValidationError("run_array: program amplitudes are not normalized");
  }

  apply_hadamard_on_ancilla(cols, shape);
  auto bottom = cols.bottomRows(shape.rest());
  apply_ctrl_shift_v_inverse(bottom, shape);
  apply_ctrl_reflection(bottom, shape);
  apply_ctrl_shift_u_powers(bottom, shape);
  apply_ctrl_cell_phase(bottom, shape);
  apply_ctrl_sign_flip(bottom, shape);

  Complex overlap;
  if (pure) {
    overlap = cols.col(0).head(shape.rest()).dot(cols.col(0).tail(shape.rest()));
  } else {
    const ComplexMatrix k_matrix =
        cols.topRows(shape.rest()).adjoint() * cols.bottomRows(shape.rest());
    overlap = (k_matrix * rho.density()).trace();
  }

  CircuitResult result;
  result.mode = RunMode::exact;
  result.sigma_z = 2.0 * overlap.real();
  result.sigma_y = 2.0 * overlap.imag();
  return result;
}

ProgramState point_program(int dim, int q, int p) {
  ProgramState ps;
  ps.dim = dim;
  ps.extent = 2 * dim;
  ps.amplitude[{q, p}] = 1.0;
  ps.sign_bit[{q, p}] = 0;
  ps.scale = 1.0;
  return ps;
}

void check_grid_index(int dim, int q, int p) {
  if (q < 0 || q >= 2 * dim || p < 0 || p >= 2 * dim) {
    throw DimensionError("point program index (" + std::to_string(q) + "," +
                         std::to_string(p) + ") outside the grid [0," +
                         std::to_string(2 * dim) + ")^2");
  }
}

}  // namespace

CircuitResult run_point_program(const QuditState& rho, int q, int p) {
  check_grid_index(rho.dim(), q, p);
  return run_array(rho, point_program(rho.dim(), q, p), /*include_sign_register=*/false);
}

CircuitResult run_point_program_sampled(const QuditState& rho, int q, int p, long shots,
                                        std::uint64_t seed) {
  return sample_polarizations(run_point_program(rho, q, p), shots, seed);
}

CircuitResult run_program(const QuditState& rho, const ProgramState& ps) {
  return run_array(rho, ps, /*include_sign_register=*/true);
}

CircuitResult run_program_sampled(const QuditState& rho, const ProgramState& ps, long shots,
                                  std::uint64_t seed) {
  return sample_polarizations(run_program(rho, ps), shots, seed);
}

ExpectationResult expectation(const QuditState& rho, const OperatorSpec& op, RunMode mode,
                              long shots, std::uint64_t seed) {
  if (op.dim() != rho.dim()) {
    throw DimensionError("expectation: operator dimension " + std::to_string(op.dim()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  const auto [h_coeffs, k_coeffs] = hermitian_split(op);

  ExpectationResult out;
  out.mode = mode;
  out.shots = mode == RunMode::sampled ? shots : 0;
  out.seed = mode == RunMode::sampled ? seed : 0;

  const SplitMix64 root(seed);
  bool any_part = false;

  // The hermitian and anti-hermitian parts run as separate programs; the
  // anti-hermitian result re-enters multiplied by i on the classical side.
  struct Part {
    const RealCoefficientMap* coeffs;
    Complex unit;
    double* scale_out;
    double* stderr_out;
    std::uint64_t stream;
  };
  for (const Part part : {Part{&h_coeffs, {1.0, 0.0}, &out.scale_h, &out.stderr_re, 0},
                          Part{&k_coeffs, {0.0, 1.0}, &out.scale_k, &out.stderr_im, 1}}) {
    bool all_zero = true;
    for (const auto& [pt, value] : *part.coeffs) {
      if (std::abs(value) >= kCoefficientDropTol) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) continue;
    any_part = true;

    const ProgramState ps = compile_program(op.dim(), *part.coeffs);
    CircuitResult run;
    if (mode == RunMode::exact) {
      run = run_program(rho, ps);
    } else {
      run = run_program_sampled(rho, ps, shots, root.split(part.stream).next());
    }
    out.value += part.unit * (ps.scale * run.sigma_z);
    *part.scale_out = ps.scale;
    *part.stderr_out = ps.scale * run.stderr_z;
  }

  if (!any_part) {
    out.degenerate = true;
    out.value = {0.0, 0.0};
  }
  return out;
}

}  // namespace qpga

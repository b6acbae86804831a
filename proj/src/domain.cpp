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

#include "qpga/domain.hpp"

#include <cmath>
#include <string>

#include "qpga/array.hpp"
#include "qpga/errors.hpp"
#include "qpga/rng.hpp"

namespace qpga {

namespace {

int mod(int value, int period) {
  const int r = value % period;
  return r < 0 ? r + period : r;
}

void require_dim(int dim) {
  if (dim < 2) throw DimensionError("PhaseDomain: dimension must be >= 2");
}

}  // namespace

PhaseDomain::PhaseDomain(int dim, std::map<GridPoint, int> signs, std::string descriptor)
    : dim_(dim), signs_(std::move(signs)), descriptor_(std::move(descriptor)) {
  require_dim(dim);
  if (signs_.empty()) throw ValidationError("PhaseDomain: empty point set");
  for (const auto& [pt, sign] : signs_) {
    if (pt.first < 0 || pt.first >= 2 * dim || pt.second < 0 || pt.second >= 2 * dim) {
      throw DimensionError("PhaseDomain: point (" + std::to_string(pt.first) + "," +
                           std::to_string(pt.second) + ") outside the 2Nx2N grid");
    }
    if (sign != 1 && sign != -1) {
      throw ValidationError("PhaseDomain: signs must be +1 or -1");
    }
  }
}

PhaseDomain PhaseDomain::line(int dim, int b, int c) {
  require_dim(dim);
  const int grid = 2 * dim;
  const int b_m = mod(b, grid);
  const int c_m = mod(c, grid);
  std::map<GridPoint, int> signs;
  for (int q = 0; q < grid; ++q) signs[{q, mod(b_m * q + c_m, grid)}] = 1;
  return PhaseDomain(dim, std::move(signs),
                     "line(b=" + std::to_string(b_m) + ",c=" + std::to_string(c_m) + ")");
}

PhaseDomain PhaseDomain::vline(int dim, int q0) {
  require_dim(dim);
  const int grid = 2 * dim;
  const int q_m = mod(q0, grid);
  std::map<GridPoint, int> signs;
  for (int p = 0; p < grid; ++p) signs[{q_m, p}] = 1;
  return PhaseDomain(dim, std::move(signs), "vline(q0=" + std::to_string(q_m) + ")");
}

PhaseDomain PhaseDomain::hline(int dim, int p0) {
  require_dim(dim);
  const int grid = 2 * dim;
  const int p_m = mod(p0, grid);
  std::map<GridPoint, int> signs;
  for (int q = 0; q < grid; ++q) signs[{q, p_m}] = 1;
  return PhaseDomain(dim, std::move(signs), "hline(p0=" + std::to_string(p_m) + ")");
}

PhaseDomain PhaseDomain::segment(int dim, int b, int c, int q_start, int length) {
  require_dim(dim);
  const int grid = 2 * dim;
  if (length < 1 || length > grid) {
    throw ValidationError("segment: length must be in [1, 2N]");
  }
  const int b_m = mod(b, grid);
  const int c_m = mod(c, grid);
  std::map<GridPoint, int> signs;
  for (int step = 0; step < length; ++step) {
    const int q = mod(q_start + step, grid);
    signs[{q, mod(b_m * q + c_m, grid)}] = 1;
  }
  return PhaseDomain(dim, std::move(signs),
                     "segment(b=" + std::to_string(b_m) + ",c=" + std::to_string(c_m) +
                         ",q0=" + std::to_string(mod(q_start, grid)) +
                         ",len=" + std::to_string(length) + ")");
}

PhaseDomain PhaseDomain::parallelogram(int dim, int q0, int p0, int width, int height) {
  require_dim(dim);
  const int grid = 2 * dim;
  if (width < 1 || height < 1 || width > grid || height > grid) {
    throw ValidationError("parallelogram: sides must be in [1, 2N]");
  }
  std::map<GridPoint, int> signs;
  for (int dq = 0; dq < width; ++dq)
    for (int dp = 0; dp < height; ++dp) signs[{mod(q0 + dq, grid), mod(p0 + dp, grid)}] = 1;
  return PhaseDomain(dim, std::move(signs),
                     "parallelogram(q0=" + std::to_string(mod(q0, grid)) +
                         ",p0=" + std::to_string(mod(p0, grid)) +
                         ",w=" + std::to_string(width) + ",h=" + std::to_string(height) + ")");
}

PhaseDomain PhaseDomain::custom(int dim, std::map<GridPoint, int> signs) {
  return PhaseDomain(dim, std::move(signs), "custom");
}

PhaseDomain PhaseDomain::sheared(int shear, int offset) const {
  const int grid = 2 * dim_;
  std::map<GridPoint, int> mapped;
  for (const auto& [pt, sign] : signs_) {
    mapped[{pt.first, mod(pt.second + shear * pt.first + offset, grid)}] = sign;
  }
  return PhaseDomain(dim_, std::move(mapped),
                     descriptor_ + "+shear(b=" + std::to_string(mod(shear, grid)) +
                         ",c=" + std::to_string(mod(offset, grid)) + ")");
}

PhaseDomain PhaseDomain::united(const PhaseDomain& other) const {
  if (other.dim_ != dim_) throw DimensionError("united: mismatched dimensions");
  std::map<GridPoint, int> merged = signs_;
  for (const auto& [pt, sign] : other.signs_) {
    auto [it, inserted] = merged.emplace(pt, sign);
    if (!inserted && it->second != sign) {
      throw ValidationError("united: overlapping points with conflicting signs");
    }
  }
  return PhaseDomain(dim_, std::move(merged), "custom");
}

ProgramState domain_program(const PhaseDomain& domain) {
  ProgramState ps;
  ps.dim = domain.dim();
  ps.extent = 2 * domain.dim();
  ps.scale = static_cast<double>(domain.size());
  const double amp = 1.0 / std::sqrt(static_cast<double>(domain.size()));
  for (const auto& [pt, sign] : domain.signs()) {
    ps.amplitude[pt] = amp;
    ps.sign_bit[pt] = sign < 0 ? 1 : 0;
  }
  return ps;
}

long decision_shot_count(double epsilon, double delta, double scale) {
  return static_cast<long>(
      std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon) * scale * scale));
}

DecisionResult decide_threshold(const QuditState& rho, const PhaseDomain& domain,
                                double threshold, double epsilon, double delta,
                                std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw ValidationError("decide_threshold: epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("decide_threshold: delta must be in (0, 1)");
  }
  const ProgramState ps = domain_program(domain);

  DecisionResult result;
  result.threshold = threshold;
  result.epsilon = epsilon;
  result.delta = delta;
  result.scale = ps.scale;
  result.seed = seed;
  result.shots = decision_shot_count(epsilon, delta, ps.scale);

  const CircuitResult run = run_program_sampled(rho, ps, result.shots, seed);
  result.estimate = ps.scale * run.sigma_z;

  if (result.estimate >= threshold + epsilon) {
    result.verdict = Verdict::above;
  } else if (result.estimate <= threshold - epsilon) {
    result.verdict = Verdict::below;
  } else {
    result.verdict = Verdict::abstain;
  }
  return result;
}

}  // namespace qpga

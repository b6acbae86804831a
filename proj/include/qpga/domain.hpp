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
#include <map>
#include <string>

#include "qpga/program.hpp"
#include "qpga/state.hpp"

namespace qpga {

/// A set of phase-space grid points with +-1 signs. Lines, segments and
/// parallelograms are constructors; signed unions express differences of
/// Wigner sums.
class PhaseDomain {
 public:
  /// All 2N points of the line p - b q = c (mod 2N), signs +1.
  static PhaseDomain line(int dim, int b, int c);
  /// Vertical line q = q0.
  static PhaseDomain vline(int dim, int q0);
  /// Horizontal line p = p0 (same points as line(dim, 0, p0)).
  static PhaseDomain hline(int dim, int p0);
  /// `length` consecutive points of the line p - b q = c starting at q = q_start.
  static PhaseDomain segment(int dim, int b, int c, int q_start, int length);
  /// Axis-aligned block q in [q0, q0+width), p in [p0, p0+height), wrapped mod 2N.
  static PhaseDomain parallelogram(int dim, int q0, int p0, int width, int height);
  /// Arbitrary signed point set.
  static PhaseDomain custom(int dim, std::map<GridPoint, int> signs);

  /// Image under the classical shear-plus-offset map
  /// (q, p) -> (q, p + shear q + offset); signs are carried along.
  PhaseDomain sheared(int shear, int offset) const;

  /// Signed union; overlapping points must carry equal signs.
  PhaseDomain united(const PhaseDomain& other) const;

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(signs_.size()); }
  const std::map<GridPoint, int>& signs() const { return signs_; }
  const std::string& descriptor() const { return descriptor_; }

 private:
  PhaseDomain(int dim, std::map<GridPoint, int> signs, std::string descriptor);

  int dim_;
  std::map<GridPoint, int> signs_;  // point -> +-1
  std::string descriptor_;
};

/// Grid-addressed program over the domain: uniform amplitudes 1/sqrt(|D|),
/// phi = 0 for sign +1 and 1 for sign -1, scale = |D|. On the array,
/// scale * sigma_z = 2N * sum over the domain of sign * W(q,p).
ProgramState domain_program(const PhaseDomain& domain);

enum class Verdict { above, below, abstain };

struct DecisionResult {
  Verdict verdict = Verdict::abstain;
  long shots = 0;
  double estimate = 0.0;  // scale * empirical sigma_z = estimate of 2N sum sign W
  double threshold = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double scale = 0.0;
  std::uint64_t seed = 0;
};

/// Threshold decision on the scaled domain sum X = 2N sum sign W(q,p),
/// which the array measures as scale * sigma_z (X in [-scale, scale]).
/// Uses shots = ceil(ln(2/delta) / (2 epsilon^2) * scale^2) — independent
/// of N for fixed (epsilon, delta, scale) — and returns `above` when the
/// estimate is at least threshold + epsilon, `below` when at most
/// threshold - epsilon, `abstain` otherwise. By Hoeffding's inequality a
/// verdict contradicting the exact value by more than epsilon has
/// probability at most delta.
DecisionResult decide_threshold(const QuditState& rho, const PhaseDomain& domain,
                                double threshold, double epsilon, double delta,
                                std::uint64_t seed);

/// The shot count used by decide_threshold (exposed for reporting).
long decision_shot_count(double epsilon, double delta, double scale);

}  // namespace qpga

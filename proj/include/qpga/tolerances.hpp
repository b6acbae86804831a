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

namespace qpga {

// Project-wide default tolerances. Every comparison that needs one takes it
// as a parameter; these are only the defaults.
inline constexpr double kConstructionTol = 1e-12;  // state/operator validity
inline constexpr double kCircuitTol = 1e-10;       // circuit-level agreement
inline constexpr double kEigenphaseTol = 1e-8;     // eigenphase lattice matching
inline constexpr double kCovarianceTol = 1e-8;     // cat-map covariance residual
inline constexpr double kCoefficientDropTol = 1e-14;  // program coefficients treated as zero

}  // namespace qpga

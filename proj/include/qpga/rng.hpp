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

namespace qpga {

/// SplitMix64 (Vigna's reference mixer). Chosen over std:: engines because
/// its output is a pure function of the 64-bit seed on every platform, and
/// independent substreams can be split off deterministically. All sampling
/// in the library is seeded per call through this generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent substream: a new generator whose seed is a mix of the
  /// current state and the stream index. Splitting does not advance *this.
  SplitMix64 split(std::uint64_t stream) const {
    SplitMix64 g(state_ ^ (0xd1342543de82ef95ULL * (stream + 1)));
    g.next();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qpga

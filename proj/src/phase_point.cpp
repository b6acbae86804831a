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

#include "qpga/phase_point.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <tuple>

#include "qpga/errors.hpp"

namespace qpga {

namespace {

int mod(int value, int period) {
  const int r = value % period;
  return r < 0 ? r + period : r;
}

void require_dim(int dim, const char* who) {
  if (dim < 2) throw DimensionError(std::string(who) + ": dimension must be >= 2");
}

Complex unit_phase(double turns_of_pi_over_n, int dim) {
  const double arg = std::numbers::pi * turns_of_pi_over_n / dim;
  return {std::cos(arg), std::sin(arg)};
}

}  // namespace

PhasePointIndex::PhasePointIndex(int dim_in, int q_in, int p_in) : dim(dim_in) {
  require_dim(dim_in, "PhasePointIndex");
  q = mod(q_in, 2 * dim);
  p = mod(p_in, 2 * dim);
}

TranslationIndex::TranslationIndex(int dim_in, int b_in, int a_in) : dim(dim_in) {
  require_dim(dim_in, "TranslationIndex");
  b = mod(b_in, 2 * dim);
  a = mod(a_in, 2 * dim);
}

ComplexMatrix shift_u(int dim) {
  require_dim(dim, "shift_u");
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) u((n + 1) % dim, n) = 1.0;
  return u;
}

ComplexMatrix shift_v(int dim) {
  require_dim(dim, "shift_v");
  ComplexMatrix v = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) v(n, n) = unit_phase(2.0 * n, dim);
  return v;
}

ComplexMatrix reflection_r(int dim) {
  require_dim(dim, "reflection_r");
  ComplexMatrix r = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) r((dim - n) % dim, n) = 1.0;
  return r;
}

namespace {

// A(q,p) = U^q R V^{-p} e^{i pi p q / N} has one nonzero entry per column:
// column n carries e^{i pi p q / N} e^{-2 pi i n p / N} at row (q - n) mod N.
ComplexMatrix build_phase_point_op(int dim, int q, int p) {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  const Complex front = unit_phase((p * q) % (2 * dim), dim);
  for (int n = 0; n < dim; ++n) {
    a(mod(q - n, dim), n) = front * unit_phase(-2.0 * ((n * p) % (2 * dim)), dim);
  }
  return a;
}

// Memoized per (N, q, p); Wigner evaluation revisits all 4N^2 indices.
// std::map nodes are stable, so returned references survive later inserts.
class PhasePointCache {
 public:
  const ComplexMatrix& get(int dim, int q, int p) {
    const std::tuple<int, int, int> key{dim, q, p};
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key);
    if (inserted) it->second = build_phase_point_op(dim, q, p);
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, ComplexMatrix> cache_;
};

PhasePointCache& global_cache() {
  static PhasePointCache cache;
  return cache;
}

}  // namespace

const ComplexMatrix& phase_point_op(const PhasePointIndex& idx) {
  return global_cache().get(idx.dim, idx.q, idx.p);
}

ComplexMatrix translation_op(const TranslationIndex& idx) {
  const int dim = idx.dim;
  // T(b,a) = U^a V^b e^{i pi a b / N}: column n carries
  // e^{i pi a b / N} e^{2 pi i n b / N} at row (n + a) mod N.
  ComplexMatrix t = ComplexMatrix::Zero(dim, dim);
  const Complex front = unit_phase((idx.a * idx.b) % (2 * dim), dim);
  for (int n = 0; n < dim; ++n) {
    t((n + idx.a) % dim, n) = front * unit_phase(2.0 * ((n * idx.b) % (2 * dim)), dim);
  }
  return t;
}

}  // namespace qpga

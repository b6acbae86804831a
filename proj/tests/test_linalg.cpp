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

#include <doctest.h>

#include <cmath>

#include "qpga/errors.hpp"
#include "qpga/linalg.hpp"
#include "qpga/phase_point.hpp"
#include "support.hpp"

using namespace qpga;

TEST_CASE("dft_matrix basics") {
  CHECK(dft_matrix(1)(0, 0) == Complex(1.0, 0.0));

  // N=2 is the Hadamard.
  const ComplexMatrix f2 = dft_matrix(2);
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  CHECK(approx_equal(f2, h, kConstructionTol));

  const ComplexMatrix f4 = dft_matrix(4);
  CHECK(approx_equal(f4 * f4.adjoint(), ComplexMatrix::Identity(4, 4), kConstructionTol));

  CHECK_THROWS_AS(dft_matrix(0), DimensionError);
}

TEST_CASE("dft_matrix is unitary for all N <= 32") {
  for (int n = 1; n <= 32; ++n) {
    const ComplexMatrix f = dft_matrix(n);
    CHECK(approx_equal(f * f.adjoint(), ComplexMatrix::Identity(n, n), kConstructionTol));
  }
}

TEST_CASE("tensor product block convention") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
  CHECK(approx_equal(tensor(i2, i3), ComplexMatrix::Identity(6, 6), 0.0));

  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  ComplexMatrix swap4 = ComplexMatrix::Zero(4, 4);
  swap4(0, 2) = swap4(1, 3) = swap4(2, 0) = swap4(3, 1) = 1.0;
  CHECK(approx_equal(tensor(x, i2), swap4, 0.0));
}

TEST_CASE("tensor mixed-product identity against multiplication oracle") {
  SplitMix64 rng(0x1001);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = test::random_matrix(2, 2, rng);
    const ComplexMatrix b = test::random_matrix(2, 2, rng);
    const ComplexMatrix c = test::random_matrix(2, 2, rng);
    const ComplexMatrix d = test::random_matrix(2, 2, rng);
    CHECK(approx_equal(tensor(a, b) * tensor(c, d), tensor((a * c).eval(), (b * d).eval()),
                       kConstructionTol));
  }
}

TEST_CASE("tensor is associative on integer matrices") {
  SplitMix64 rng(0x1002);
  ComplexMatrix a(2, 3), b(3, 2), c(2, 2);
  for (auto* m : {&a, &b, &c}) {
    for (int r = 0; r < m->rows(); ++r)
      for (int col = 0; col < m->cols(); ++col)
        (*m)(r, col) = Complex(std::floor(5.0 * rng.next_double()) - 2.0,
                               std::floor(5.0 * rng.next_double()) - 2.0);
  }
  CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
}

TEST_CASE("tensor size limit") {
  const ComplexMatrix big = ComplexMatrix::Identity(64, 64);
  CHECK_THROWS_AS(tensor(big, big, 1000), DimensionError);
}

TEST_CASE("trace_product") {
  const ComplexMatrix i5 = ComplexMatrix::Identity(5, 5);
  CHECK(trace_product(i5, i5) == Complex(5.0, 0.0));

  // Phase-point orthogonality cases at N=3.
  const ComplexMatrix a00 = phase_point_op(PhasePointIndex(3, 0, 0));
  const ComplexMatrix a10 = phase_point_op(PhasePointIndex(3, 1, 0));
  CHECK(std::abs(trace_product(a00, a00) - Complex(3.0, 0.0)) < kCircuitTol);
  CHECK(std::abs(trace_product(a00, a10)) < kCircuitTol);

  CHECK_THROWS_AS(trace_product(i5, ComplexMatrix::Identity(4, 4)), DimensionError);
}

TEST_CASE("trace_product equals the formed-product trace on random 8x8") {
  SplitMix64 rng(0x1003);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = test::random_matrix(8, 8, rng);
    const ComplexMatrix b = test::random_matrix(8, 8, rng);
    CHECK(std::abs(trace_product(a, b) - (a * b).trace()) < kConstructionTol);
  }
}

TEST_CASE("approx_equal uses the explicit tolerance") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  ComplexMatrix b = a;
  b(1, 1) = Complex(1e-11, 0);
  CHECK(approx_equal(a, b, 1e-10));
  CHECK_FALSE(approx_equal(a, b, 1e-12));
  CHECK_FALSE(approx_equal(a, ComplexMatrix::Zero(2, 3), 1.0));
}

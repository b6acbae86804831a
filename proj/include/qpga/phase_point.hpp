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

/// Point on the 2N x 2N phase-space grid. Constructors reduce q and p
/// modulo 2N. The operator basis lives on the fundamental cell
/// q, p in [0, N); points outside it reproduce cell operators up to the
/// phases A(q+N, p) = e^{i pi p} A(q, p) and A(q, p+N) = e^{i pi q} A(q, p).
struct PhasePointIndex {
  int dim;  // N
  int q;    // in [0, 2N)
  int p;    // in [0, 2N)

  PhasePointIndex(int dim, int q, int p);
};

/// Exponent pair (b, a) of the translation operator T(b,a) = U^a V^b e^{i pi a b / N},
/// reduced modulo 2N (the scalar phase distinguishes a and a+N).
struct TranslationIndex {
  int dim;  // N
  int b;    // in [0, 2N)
  int a;    // in [0, 2N)

  TranslationIndex(int dim, int b, int a);
};

/// Cyclic shift in the computational basis: U|n> = |n+1 mod N>.
ComplexMatrix shift_u(int dim);

/// Cyclic shift in the Fourier basis, V = F U F^dag = diag(e^{2 pi i j / N}).
/// Built directly from its eigenphases.
ComplexMatrix shift_v(int dim);

/// Reflection R|n> = |N - n mod N>; fixes |0>, R^2 = I.
ComplexMatrix reflection_r(int dim);

/// Phase-point operator A(q,p) = U^q R V^{-p} e^{i pi p q / N}.
/// Hermitian and unitary for every grid index. Results are memoized per
/// (N, q, p); the returned reference stays valid for the process lifetime
/// and the cache is safe under concurrent lookup.
const ComplexMatrix& phase_point_op(const PhasePointIndex& idx);

/// Translation operator T(b,a) = U^a V^b e^{i pi a b / N}. Unitary; its
/// eigenvalues lie on the lattice {e^{i pi c / N}, c integer}.
ComplexMatrix translation_op(const TranslationIndex& idx);

}  // namespace qpga

// Copyright 2026 The Ergolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERGOLAB_WEDDERBURN_HPP
#define ERGOLAB_WEDDERBURN_HPP

#include <vector>

#include "ergolab/quantum_group.hpp"

namespace ergolab {

/// Artin-Wedderburn data of the underlying multi-matrix *-algebra.
struct BlockStructure {
  std::vector<Vector> central_idempotents;  // coordinates of z_k, sum = 1
  std::vector<int> block_matrix_dims;       // d_k with ideal dim d_k^2
  int counit_block = -1;                    // unique k with eps(z_k) = 1
  /// basis indices belonging to each block; empty when the basis is not
  /// block-aligned (z_k e_i is neither 0 nor e_i for some i, k)
  std::vector<std::vector<int>> block_indices;
  bool basis_aligned = false;
};

/// Central idempotents via the commutant equations and the spectral
/// decomposition of a random hermitian central element. Requires haar
/// (for the GNS geometry); deterministic for a fixed group.
BlockStructure detect_blocks(const FiniteQuantumGroup& g);

/// A Hopf *-algebra quotient of g onto a sub-collection of its blocks:
/// the quantum-subgroup datum used by the idempotent experiments.
struct HopfQuotient {
  std::vector<int> blocks;        // retained central idempotents
  FiniteQuantumGroup quotient;    // verified + haar solved
  Matrix coordinate_map;          // pi: coordinates of g -> coordinates of quotient
  Vector pulled_back_haar;        // rho = h_B o pi as a functional on g
};

/// Scans every sub-collection of blocks containing the counit block,
/// keeps those whose complementary ideal is a Hopf *-ideal (coproduct,
/// counit and antipode conditions within tol), builds the quotient,
/// validates it with the axiom suite and solves its Haar state.
std::vector<HopfQuotient> enumerate_hopf_quotients(const FiniteQuantumGroup& g,
                                                   double tol = 1e-8);

}  // namespace ergolab

#endif  // ERGOLAB_WEDDERBURN_HPP

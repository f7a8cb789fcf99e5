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

#ifndef ERGOLAB_LP_SPACE_HPP
#define ERGOLAB_LP_SPACE_HPP

#include <array>
#include <vector>

#include "ergolab/certificates.hpp"
#include "ergolab/functionals.hpp"
#include "ergolab/quantum_group.hpp"

namespace ergolab {

struct NonTracialHaar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tracial L^p data over (M, h): GNS left-multiplication matrices, the
/// Gram geometry and the exponent. The density is kept explicit (and equal
/// to one) to mirror the non-tracial weighting that the corepresentation
/// block model carries for real.
struct LpContext {
  FiniteQuantumGroup group;
  double p = 2.0;  // in [1, inf]; use std::numeric_limits infinity for inf
  Matrix gram, gram_sqrt, gram_sqrt_inv;
  std::vector<Matrix> rep;  // lambda(e_i)
  double density = 1.0;

  double conjugate_exponent() const;
};

/// Builds the GNS representation and verifies it is faithful and that h is
/// tracial (NonTracialHaar otherwise; the block model handles that case).
LpContext make_context(const FiniteQuantumGroup& g, double p);

/// ||x||_p = h((x^* x)^{p/2})^{1/p} by spectral calculus in the Gram
/// geometry; operator norm for p = inf.
double lp_norm(const LpContext& ctx, const Vector& x);

/// The L^p extension of T_phi: the same coordinate matrix under the L^p
/// norm contract (the tracial embedding is the identity).
Matrix conv_operator_lp(const LpContext& ctx, const Functional& phi);

/// phi = (phi_1 - phi_2) + i (phi_3 - phi_4) with positive parts, via the
/// Jordan decomposition of the hermitian components' Radon-Nikodym
/// densities. norm_bound = sum phi_k(1) >= ||T^(p)_phi|| / 1.
struct FourKernels {
  std::array<Functional, 4> parts;
  double norm_bound = 0.0;
};
FourKernels four_kernel_decomposition(const LpContext& ctx, const Functional& phi);

/// Adjoint with respect to the L^2(h) inner product; requires p = 2.
Matrix l2_adjoint(const LpContext& ctx, const Matrix& t);

struct LpFixedPoint {
  Vector value;
  bool formula_applied = false;  // h(x) 1 used (faithful tau-invariant state)
};

/// F^(p)(x): h(x) 1 for faithful tau-invariant states (the closed formula
/// with density one); spectral fallback otherwise, flagged in the result.
LpFixedPoint fixed_point_projection_lp(const LpContext& ctx, const Functional& phi,
                                       const Vector& x, double tol = 1e-8);

/// Almost-sure certificate: the a.u. machinery with the single-term
/// decomposition a_{n,1} = (x_n - target) D^{-1/p} (D = 1); the a.u./a.s.
/// distinction carries no finite-dimensional content and the note says so.
Certificate as_certificate(const LpContext& ctx, const std::vector<Vector>& seq,
                           const Vector& target, double epsilon,
                           double tol = 1e-6);

}  // namespace ergolab

#endif  // ERGOLAB_LP_SPACE_HPP

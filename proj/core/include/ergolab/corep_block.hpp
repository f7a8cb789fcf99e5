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

#ifndef ERGOLAB_COREP_BLOCK_HPP
#define ERGOLAB_COREP_BLOCK_HPP

#include <string>
#include <vector>

#include "ergolab/linalg.hpp"

namespace ergolab {

struct NotTauInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One irreducible corepresentation block of a (possibly non-Kac) compact
/// quantum group: the coefficient span of u = (u_ij) with the positive
/// F-matrix that weights Haar orthogonality. F is kept diagonal (a unitary
/// rotation of the corep basis diagonalizes any Hermitian positive F) and
/// normalized so that trace(F) = trace(F^{-1}), the quantum dimension.
///
/// Elements of the span are stored as d x d coefficient arrays in the
/// symbol layout, so the one-parameter groups read literally:
///   sigma_t(u) = F^{it} u F^{it},   tau_t(u) = F^{it} u F^{-it}.
struct CorepBlock {
  std::string label;
  int d = 0;
  RealVector f;  // diagonal of F, strictly positive

  /// Conjugation intertwiner C with C^H C = F for self-conjugate blocks
  /// (the SU_q(2) family); empty when the block came from a file without
  /// self-conjugacy data.
  Matrix conj_intertwiner;

  double quantum_dimension() const { return f.sum(); }
  Matrix f_matrix() const { return f.asDiagonal(); }
  bool has_intertwiner() const { return conj_intertwiner.size() > 0; }
};

/// Spin blocks l = 0, 1/2, ..., l_max of the q-deformation family:
/// F_l = diag(q^{-2m}), m = -l..l, trace [2l+1]_q; q = 1 is classical.
std::vector<CorepBlock> su_q2_blocks(double q, double l_max);

/// Wraps an arbitrary Hermitian positive-definite F from file input:
/// diagonalizes, optionally rescales to the balanced normalization
/// trace(F) = trace(F^{-1}).
CorepBlock block_from_f(const std::string& label, const Matrix& f,
                        bool normalize = false);

/// Functional on the block: Phi(k,j) = omega(u_kj), Psi(k,j) = omega(u_kj^*).
struct BlockFunctional {
  Matrix phi;
  Matrix psi;
};

/// Builds the functional from Phi alone, transporting Psi through the
/// conjugation intertwiner (requires one).
BlockFunctional make_block_functional(const CorepBlock& block, const Matrix& phi);

/// Self-conjugacy consistency of the pair: the S^2 transport of Phi pushed
/// through C must agree with the S^2 transport of Psi. NaN when the block
/// carries no intertwiner.
double s2_consistency_residual(const CorepBlock& block, const BlockFunctional& om);

/// ||[Phi,F]|| + ||[Psi,F]||; zero iff omega is tau-invariant.
double tau_invariance_defect(const CorepBlock& block, const BlockFunctional& om);

// One-parameter groups on coefficient arrays.
Matrix apply_sigma(const CorepBlock& block, double t, const Matrix& x);
Matrix apply_tau(const CorepBlock& block, double t, const Matrix& x);

/// Element of span{u_ij} + span{u_ij^*}: coefficient arrays on both legs.
struct CoeffPair {
  Matrix on_u;
  Matrix on_u_star;
};

/// The antipode S: u_ij -> u_ji^*, extended to the star leg through
/// S^2(u) = F u F^{-1}.
CoeffPair apply_antipode(const CorepBlock& block, const CoeffPair& x);
/// The unitary antipode R = S o tau_{i/2} (F^{1/2} conjugations); R^2 = id.
CoeffPair apply_unitary_antipode(const CorepBlock& block, const CoeffPair& x);
/// tau at complex parameter (analytic continuation on both legs).
CoeffPair apply_tau_analytic(const CorepBlock& block, cplx z, const CoeffPair& x);

/// The #-involution on block functionals: Phi* = Phi^H and
/// Psi* = F^{-1} Psi^H F (from omega^*(x) = conj(omega(S(x)^*))).
BlockFunctional involution_sharp(const CorepBlock& block, const BlockFunctional& om);

struct BlockRelationRow {
  std::string relation;
  double t = 0.0;
  double residual = 0.0;
};

/// Residuals of the modular machinery on the block, per t: the group laws
/// of sigma and tau, the coproduct commutation relations, R tau_t = tau_t R,
/// R^2 = id, S^2 = F-conjugation, the trace balance of F and the KMS
/// consistency linking sigma to the two Haar orthogonality weights (the
/// rows that genuinely fail for a mis-normalized F).
std::vector<BlockRelationRow> verify_commutation_relations(
    const CorepBlock& block, const std::vector<double>& t_grid);

/// T_omega on coefficient arrays: X -> X Phi^T (right multiplication of the
/// symbol matrix by Phi); returned as the d^2 x d^2 matrix on vec(X).
Matrix block_conv_operator(const CorepBlock& block, const BlockFunctional& om);

/// The L^2 extension with the genuine modular weighting: right
/// multiplication by F^{1/4} Phi F^{-1/4}.
Matrix block_conv_operator_l2(const CorepBlock& block, const BlockFunctional& om);

/// Gram matrix on vec(X): <u_ij, u_kl> = delta_jl F(k,i) / trace(F).
Matrix l2_gram_block(const CorepBlock& block);

struct BlockAdjointReport {
  double residual = 0.0;            // ||(T_omega^(2))^H_Gram - T_{omega*}^(2)||
  double commutator_norm = 0.0;     // tau-invariance defect of omega
  double pair_consistency = 0.0;    // s2 residual when available
};

/// Verifies (T_omega^(2))^* = T_{omega^*}^(2) in the block Gram geometry.
/// Requires omega tau-invariant; otherwise NotTauInvariant reports the
/// commutator norm (the identity genuinely fails there).
BlockAdjointReport verify_l2_adjoint(const CorepBlock& block,
                                     const BlockFunctional& om, double tol = 1e-10);

}  // namespace ergolab

#endif  // ERGOLAB_COREP_BLOCK_HPP

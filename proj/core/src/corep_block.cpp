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

#include "ergolab/corep_block.hpp"

#include <cmath>
#include <limits>

namespace ergolab {

namespace {

cplx ipow(double base, cplx exponent) {
  // base^{exponent} for base > 0
  return std::exp(exponent * std::log(base));
}

void check_block(const CorepBlock& block) {
  if (block.d <= 0 || block.f.size() != block.d)
    throw std::invalid_argument("corep block: inconsistent dimension");
  if (block.f.minCoeff() <= 0.0)
    throw std::invalid_argument("corep block: F must be positive definite");
}

}  // namespace

std::vector<CorepBlock> su_q2_blocks(double q, double l_max) {
  if (!(q > 0.0 && q <= 1.0))
    throw std::invalid_argument("su_q2_blocks: q must lie in (0, 1]");
  if (l_max < 0.0) throw std::invalid_argument("su_q2_blocks: l_max < 0");
  std::vector<CorepBlock> blocks;
  const int two_l_max = static_cast<int>(std::lround(2.0 * l_max));
  for (int two_l = 0; two_l <= two_l_max; ++two_l) {
    CorepBlock b;
    const double l = two_l / 2.0;
    b.d = two_l + 1;
    b.f = RealVector(b.d);
    for (int r = 0; r < b.d; ++r) b.f(r) = std::pow(q, two_l - 2 * r);
    b.conj_intertwiner = Matrix::Zero(b.d, b.d);
    for (int r = 0; r < b.d; ++r) {
      const double sign = (two_l - r) % 2 == 0 ? 1.0 : -1.0;
      b.conj_intertwiner(r, b.d - 1 - r) = sign * std::pow(q, r - l);
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "l=%g", l);
    b.label = buf;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

CorepBlock block_from_f(const std::string& label, const Matrix& f,
                        bool normalize) {
  if (f.rows() != f.cols() || f.rows() == 0)
    throw std::invalid_argument("block_from_f: F must be square");
  if ((f - f.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + f.norm()))
    throw std::invalid_argument("block_from_f: F must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es((f + f.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("block_from_f: F must be positive definite");
  CorepBlock b;
  b.label = label;
  b.d = static_cast<int>(f.rows());
  b.f = es.eigenvalues();
  if (normalize) {
    const double tr = b.f.sum();
    const double tr_inv = b.f.cwiseInverse().sum();
    b.f *= std::sqrt(tr_inv / tr);
  }
  return b;
}

BlockFunctional make_block_functional(const CorepBlock& block, const Matrix& phi) {
  check_block(block);
  if (!block.has_intertwiner())
    throw std::invalid_argument(
        "make_block_functional: block carries no conjugation intertwiner; "
        "supply Psi explicitly");
  const Matrix c = block.conj_intertwiner;
  return BlockFunctional{phi, c * phi * c.inverse()};
}

double s2_consistency_residual(const CorepBlock& block, const BlockFunctional& om) {
  check_block(block);
  if (!block.has_intertwiner()) return std::numeric_limits<double>::quiet_NaN();
  const Matrix f = block.f_matrix();
  const Matrix finv = block.f.cwiseInverse().asDiagonal();
  const Matrix c = block.conj_intertwiner;
  const Matrix lhs = c * (f * om.phi * finv) * c.inverse();
  const Matrix rhs = finv * om.psi * f;
  return (lhs - rhs).norm();
}

double tau_invariance_defect(const CorepBlock& block, const BlockFunctional& om) {
  check_block(block);
  const Matrix f = block.f_matrix();
  return (om.phi * f - f * om.phi).norm() + (om.psi * f - f * om.psi).norm();
}

Matrix apply_sigma(const CorepBlock& block, double t, const Matrix& x) {
  check_block(block);
  Matrix out(block.d, block.d);
  for (int i = 0; i < block.d; ++i)
    for (int j = 0; j < block.d; ++j)
      out(i, j) = ipow(block.f(i) * block.f(j), cplx(0.0, t)) * x(i, j);
  return out;
}

Matrix apply_tau(const CorepBlock& block, double t, const Matrix& x) {
  check_block(block);
  Matrix out(block.d, block.d);
  for (int i = 0; i < block.d; ++i)
    for (int j = 0; j < block.d; ++j)
      out(i, j) = ipow(block.f(i) / block.f(j), cplx(0.0, t)) * x(i, j);
  return out;
}

CoeffPair apply_tau_analytic(const CorepBlock& block, cplx z, const CoeffPair& x) {
  check_block(block);
  CoeffPair out{Matrix(block.d, block.d), Matrix(block.d, block.d)};
  for (int i = 0; i < block.d; ++i)
    for (int j = 0; j < block.d; ++j) {
      const double ratio = block.f(i) / block.f(j);
      out.on_u(i, j) = ipow(ratio, cplx(0.0, 1.0) * z) * x.on_u(i, j);
      out.on_u_star(i, j) = ipow(ratio, cplx(0.0, -1.0) * z) * x.on_u_star(i, j);
    }
  return out;
}

CoeffPair apply_antipode(const CorepBlock& block, const CoeffPair& x) {
  check_block(block);
  const Matrix f = block.f_matrix();
  const Matrix finv = block.f.cwiseInverse().asDiagonal();
  // S(u_ij) = u_ji^*;  S(u_ij^*) = (F u F^{-1})_ji.
  return CoeffPair{f * x.on_u_star.transpose() * finv, x.on_u.transpose()};
}

CoeffPair apply_unitary_antipode(const CorepBlock& block, const CoeffPair& x) {
  return apply_antipode(block, apply_tau_analytic(block, cplx(0.0, 0.5), x));
}

BlockFunctional involution_sharp(const CorepBlock& block, const BlockFunctional& om) {
  check_block(block);
  const Matrix f = block.f_matrix();
  const Matrix finv = block.f.cwiseInverse().asDiagonal();
  return BlockFunctional{om.phi.adjoint(), finv * om.psi.adjoint() * f};
}

std::vector<BlockRelationRow> verify_commutation_relations(
    const CorepBlock& block, const std::vector<double>& t_grid) {
  check_block(block);
  const int d = block.d;
  std::vector<BlockRelationRow> rows;
  auto push = [&](const std::string& rel, double t, double residual) {
    rows.push_back({rel, t, residual});
  };

  auto sigma_factor = [&](int i, int j, double t) {
    return ipow(block.f(i) * block.f(j), cplx(0.0, t));
  };
  auto tau_factor = [&](int i, int j, double t) {
    return ipow(block.f(i) / block.f(j), cplx(0.0, t));
  };

  for (double t : t_grid) {
    double law_s = 0.0, law_t = 0.0, eq1a = 0.0, eq1b = 0.0, eq2 = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        law_s = std::max(law_s,
                         std::abs(sigma_factor(i, j, t) * sigma_factor(i, j, t) -
                                  sigma_factor(i, j, 2.0 * t)));
        law_t = std::max(law_t,
                         std::abs(tau_factor(i, j, t) * tau_factor(i, j, t) -
                                  tau_factor(i, j, 2.0 * t)));
        for (int k = 0; k < d; ++k) {
          // Delta(u_ij) = sum_k u_ik (x) u_kj
          eq1a = std::max(eq1a,
                          std::abs(tau_factor(i, k, t) * sigma_factor(k, j, t) -
                                   sigma_factor(i, j, t)));
          eq1b = std::max(eq1b,
                          std::abs(sigma_factor(i, k, t) * tau_factor(k, j, -t) -
                                   sigma_factor(i, j, t)));
          eq2 = std::max(eq2, std::abs(tau_factor(i, k, t) * tau_factor(k, j, t) -
                                       tau_factor(i, j, t)));
        }
      }
    push("sigma_group_law", t, law_s);
    push("tau_group_law", t, law_t);
    push("eq1_left", t, eq1a);
    push("eq1_right", t, eq1b);
    push("eq2", t, eq2);

    // Eq. (3): R tau_t = tau_t R on both legs of the pair space.
    double eq3 = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        CoeffPair basis{Matrix::Zero(d, d), Matrix::Zero(d, d)};
        basis.on_u(i, j) = 1.0;
        const CoeffPair lhs = apply_unitary_antipode(
            block, apply_tau_analytic(block, cplx(t, 0.0), basis));
        const CoeffPair rhs = apply_tau_analytic(
            block, cplx(t, 0.0), apply_unitary_antipode(block, basis));
        eq3 = std::max(eq3, (lhs.on_u - rhs.on_u).cwiseAbs().maxCoeff());
        eq3 = std::max(eq3,
                       (lhs.on_u_star - rhs.on_u_star).cwiseAbs().maxCoeff());
      }
    push("eq3_r_tau", t, eq3);
  }

  // t-independent rows.
  double r2 = 0.0, s2 = 0.0;
  const Matrix f = block.f_matrix();
  const Matrix finv = block.f.cwiseInverse().asDiagonal();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CoeffPair basis{Matrix::Zero(d, d), Matrix::Zero(d, d)};
      basis.on_u(i, j) = 1.0;
      const CoeffPair rr =
          apply_unitary_antipode(block, apply_unitary_antipode(block, basis));
      r2 = std::max(r2, (rr.on_u - basis.on_u).cwiseAbs().maxCoeff());
      r2 = std::max(r2, rr.on_u_star.cwiseAbs().maxCoeff());
      const CoeffPair ss = apply_antipode(block, apply_antipode(block, basis));
      const Matrix expected = f * basis.on_u * finv;
      s2 = std::max(s2, (ss.on_u - expected).cwiseAbs().maxCoeff());
      s2 = std::max(s2, ss.on_u_star.cwiseAbs().maxCoeff());
    }
  push("r_involutive", 0.0, r2);
  push("s2_f_conjugation", 0.0, s2);

  const double tr = block.f.sum();
  const double tr_inv = block.f.cwiseInverse().sum();
  push("trace_balance", 0.0, std::abs(tr - tr_inv));

  // KMS consistency between the two orthogonality weights:
  // h(u_kl^* u_ij) = h(u_ij sigma_i(u_kl^*)) with sigma continued to t = i,
  // i.e. delta_jl delta_ki f_k / tr(F)  vs  delta_ik delta_jl f_k / tr(F^{-1}).
  double kms = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const double lhs = (j == l && k == i) ? block.f(k) / tr : 0.0;
          const double rhs = (i == k && j == l) ? block.f(k) / tr_inv : 0.0;
          kms = std::max(kms, std::abs(lhs - rhs));
        }
  push("kms_consistency", 0.0, kms);

  return rows;
}

Matrix block_conv_operator(const CorepBlock& block, const BlockFunctional& om) {
  check_block(block);
  const int d = block.d;
  Matrix out = Matrix::Zero(d * d, d * d);
  // vec(X Phi^T) = (Phi (x) I) vec(X), column-major vec.
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int i = 0; i < d; ++i)
        out(i + d * a, i + d * b) = om.phi(a, b);
  return out;
}

Matrix block_conv_operator_l2(const CorepBlock& block, const BlockFunctional& om) {
  check_block(block);
  RealVector f14(block.d), f14inv(block.d);
  for (int i = 0; i < block.d; ++i) {
    f14(i) = std::pow(block.f(i), 0.25);
    f14inv(i) = 1.0 / f14(i);
  }
  const Matrix weighted =
      f14.asDiagonal() * om.phi * Matrix(f14inv.asDiagonal());
  BlockFunctional tilted{weighted, om.psi};
  return block_conv_operator(block, tilted);
}

Matrix l2_gram_block(const CorepBlock& block) {
  check_block(block);
  const int d = block.d;
  const double tr = block.f.sum();
  Matrix gram = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i + d * j, i + d * j) = block.f(i) / tr;
  return gram;
}

BlockAdjointReport verify_l2_adjoint(const CorepBlock& block,
                                     const BlockFunctional& om, double tol) {
  check_block(block);
  BlockAdjointReport report;
  report.commutator_norm = tau_invariance_defect(block, om);
  report.pair_consistency = s2_consistency_residual(block, om);
  if (report.commutator_norm > std::max(tol, 1e-10) * (1.0 + om.phi.norm()))
    throw NotTauInvariant("functional is not tau-invariant: ||[Phi,F]|| + "
                          "||[Psi,F]|| = " +
                          std::to_string(report.commutator_norm));
  const Matrix gram = l2_gram_block(block);
  const Matrix t2 = block_conv_operator_l2(block, om);
  const Matrix adj = gram_adjoint(t2, gram);
  const Matrix t2_star = block_conv_operator_l2(block, involution_sharp(block, om));
  report.residual = (adj - t2_star).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace ergolab

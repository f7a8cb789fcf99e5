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

#include "ergolab/lp_space.hpp"

#include <cmath>
#include <limits>

#include "ergolab/conv_ops.hpp"

namespace ergolab {

double LpContext::conjugate_exponent() const {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  return p / (p - 1.0);
}

LpContext make_context(const FiniteQuantumGroup& g, double p) {
  if (p < 1.0) throw std::invalid_argument("make_context: p must be >= 1");
  if (!g.has_haar()) throw StructuralError("make_context: haar state not solved");

  LpContext ctx;
  ctx.group = g;
  ctx.p = p;
  ctx.gram = g.gram();
  Eigen::SelfAdjointEigenSolver<Matrix> es((ctx.gram + ctx.gram.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() <= 1e-12 * (1.0 + ctx.gram.norm()))
    throw NotAState("make_context: haar state is not faithful");
  ctx.gram_sqrt = hermitian_sqrt(ctx.gram);
  ctx.gram_sqrt_inv = hermitian_power(ctx.gram, -0.5);

  double tracial = 0.0;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      cplx d(0.0);
      for (int k = 0; k < g.dim; ++k)
        d += (g.mult(i, j, k) - g.mult(j, i, k)) * g.haar(k);
      tracial = std::max(tracial, std::abs(d));
    }
  if (tracial > 1e-10)
    throw NonTracialHaar(
        "haar state is not tracial (residual " + std::to_string(tracial) +
        "); use the corepresentation block model for non-tracial data");

  ctx.rep.reserve(g.dim);
  for (int i = 0; i < g.dim; ++i) ctx.rep.push_back(g.left_regular(i));

  // Faithfulness of x -> lambda(x): full column rank of the stacked map.
  Matrix lambda_map(g.dim * g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    lambda_map.col(i) =
        Eigen::Map<const Vector>(ctx.rep[i].data(), ctx.rep[i].size());
  Eigen::ColPivHouseholderQR<Matrix> qr(lambda_map);
  qr.setThreshold(1e-10);
  if (static_cast<int>(qr.rank()) != g.dim)
    throw StructuralError("make_context: GNS representation is not faithful");
  return ctx;
}

double lp_norm(const LpContext& ctx, const Vector& x) {
  const auto& g = ctx.group;
  const Matrix lx = g.left_regular(x);
  if (std::isinf(ctx.p))
    return gram_op_norm(lx, ctx.gram_sqrt, ctx.gram_sqrt_inv);

  // |x|^p = (x^* x)^{p/2} by Hermitian calculus in the Gram geometry.
  const Matrix xx = ctx.gram_sqrt * g.left_regular(g.multiply(g.star(x), x)) *
                    ctx.gram_sqrt_inv;
  const Matrix powered =
      ctx.gram_sqrt_inv * hermitian_power(xx, ctx.p / 2.0) * ctx.gram_sqrt;
  const cplx val = g.unit.adjoint() * ctx.gram * (powered * g.unit);
  return std::pow(std::max(0.0, val.real()), 1.0 / ctx.p);
}

Matrix conv_operator_lp(const LpContext& ctx, const Functional& phi) {
  return right_conv_operator(ctx.group, phi).matrix;
}

FourKernels four_kernel_decomposition(const LpContext& ctx, const Functional& phi) {
  const auto& g = ctx.group;
  const int n = g.dim;

  // Radon-Nikodym density: phi(x) = h(d x), d = K^{-T} phi with
  // K(i,j) = h(e_i e_j); nondegenerate because h is faithful.
  const Matrix k = g.pairing();
  const Vector d = k.transpose().partialPivLu().solve(phi.values);

  // Hermitian and antihermitian parts of d.
  const Vector d_re = (d + g.star(d)) / 2.0;
  const Vector d_im = (d - g.star(d)) / cplx(0.0, 2.0);

  auto jordan_split = [&](const Vector& h_elem) -> std::pair<Vector, Vector> {
    const Matrix a = ctx.gram_sqrt * g.left_regular(h_elem) * ctx.gram_sqrt_inv;
    Eigen::SelfAdjointEigenSolver<Matrix> es((a + a.adjoint()) / 2.0);
    RealVector plus = es.eigenvalues().cwiseMax(0.0);
    RealVector minus = (-es.eigenvalues()).cwiseMax(0.0);
    const Matrix vp = es.eigenvectors() * plus.asDiagonal() *
                      es.eigenvectors().adjoint();
    const Matrix vm = es.eigenvectors() * minus.asDiagonal() *
                      es.eigenvectors().adjoint();
    // Pull the spectral parts back to algebra coordinates.
    Matrix lambda_map(n * n, n);
    for (int i = 0; i < n; ++i)
      lambda_map.col(i) =
          Eigen::Map<const Vector>(ctx.rep[i].data(), ctx.rep[i].size());
    auto pull = [&](const Matrix& target) {
      const Matrix plain = ctx.gram_sqrt_inv * target * ctx.gram_sqrt;
      const Vector rhs = Eigen::Map<const Vector>(plain.data(), plain.size());
      return Vector(lambda_map.colPivHouseholderQr().solve(rhs));
    };
    return {pull(vp), pull(vm)};
  };

  auto functional_of_density = [&](const Vector& dens) {
    Vector values(n);
    for (int i = 0; i < n; ++i) {
      Vector ei = Vector::Zero(n);
      ei(i) = 1.0;
      values(i) = g.haar_of(g.multiply(dens, ei));
    }
    return Functional{values};
  };

  const auto [p1, p2] = jordan_split(d_re);
  const auto [p3, p4] = jordan_split(d_im);
  FourKernels out;
  out.parts = {functional_of_density(p1), functional_of_density(p2),
               functional_of_density(p3), functional_of_density(p4)};
  for (const auto& part : out.parts)
    out.norm_bound += std::abs(cplx(part.values.transpose() * g.unit));
  return out;
}

Matrix l2_adjoint(const LpContext& ctx, const Matrix& t) {
  if (std::abs(ctx.p - 2.0) > 1e-12)
    throw std::invalid_argument("l2_adjoint requires p = 2");
  return gram_adjoint(t, ctx.gram);
}

LpFixedPoint fixed_point_projection_lp(const LpContext& ctx, const Functional& phi,
                                       const Vector& x, double tol) {
  const auto& g = ctx.group;
  const StateFlags flags = check_state(g, phi);
  LpFixedPoint out;
  if (flags.state && flags.faithful && is_tau_invariant(g, phi)) {
    out.value = g.haar_of(x) * g.unit;
    out.formula_applied = true;
    return out;
  }
  // The closed formula needs faithfulness; fall back to the spectral
  // projection (the L^p and L^inf fixed spaces agree at finite dimension).
  const Matrix t = right_conv_operator(g, phi).matrix;
  out.value = fixed_point_projection(t, tol).projection * x;
  out.formula_applied = false;
  return out;
}

Certificate as_certificate(const LpContext& ctx, const std::vector<Vector>& seq,
                           const Vector& target, double epsilon, double tol) {
  Certificate cert = au_certificate(ctx.group, seq, target, epsilon, tol);
  cert.note += "; almost-sure witnesses a_{n,1} = (x_n - target) D^{-1/p} "
               "with D = 1 (tracial); the a.u./a.s. distinction collapses "
               "at finite dimension";
  return cert;
}

}  // namespace ergolab

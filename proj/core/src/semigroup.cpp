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

#include "ergolab/semigroup.hpp"

#include <array>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "ergolab/conv_ops.hpp"
#include "ergolab/lp_space.hpp"

namespace ergolab {

GeneratorReport validate_generator(const FiniteQuantumGroup& g,
                                   const GeneratingFunctional& l, double tol) {
  if (l.values.size() != g.dim)
    throw StructuralError("generator dimension mismatch");
  GeneratorReport report;
  report.unit_residual = std::abs(cplx(l.values.transpose() * g.unit));
  report.hermitian_residual =
      (g.involution * l.values - l.values.conjugate()).cwiseAbs().maxCoeff();

  // Conditional positivity: L(f_i^* f_j) PSD on a basis of ker eps.
  const Matrix ker = kernel_basis(Matrix(g.counit.transpose()), 1e-12);
  const int m = static_cast<int>(ker.cols());
  Matrix k(m, m);
  for (int i = 0; i < m; ++i) {
    const Vector star_i = g.star(ker.col(i));
    for (int j = 0; j < m; ++j)
      k(i, j) = l.values.transpose() * g.multiply(star_i, ker.col(j));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es((k + k.adjoint()) / 2.0);
  report.cond_positive_min_eig = m > 0 ? es.eigenvalues().minCoeff() : 0.0;

  const double scale = 1.0 + l.values.norm();
  report.valid = report.unit_residual < tol * scale &&
                 report.hermitian_residual < tol * scale &&
                 report.cond_positive_min_eig > -tol * (1.0 + k.norm());
  return report;
}

GeneratingFunctional poisson_generator(const FiniteQuantumGroup& g,
                                       const Functional& psi) {
  if (!check_state(g, psi).state)
    throw InvalidGenerator("poisson_generator requires a state");
  return GeneratingFunctional{psi.values - g.counit};
}

Matrix expm(const Matrix& m) { return m.exp(); }

namespace {

void require_valid(const FiniteQuantumGroup& g, const GeneratingFunctional& l) {
  const GeneratorReport report = validate_generator(g, l);
  if (!report.valid)
    throw InvalidGenerator(
        "generating functional rejected: |L(1)| = " +
        std::to_string(report.unit_residual) + ", hermitian residual " +
        std::to_string(report.hermitian_residual) + ", min eig on ker eps " +
        std::to_string(report.cond_positive_min_eig));
}

}  // namespace

Functional semigroup_state(const FiniteQuantumGroup& g,
                           const GeneratingFunctional& l, double t) {
  require_valid(g, l);
  if (t < 0.0) throw InvalidGenerator("semigroup_state: t must be >= 0");
  const Matrix tl = right_conv_operator(g, Functional{l.values}).matrix;
  // eps o exp(t T_L), using eps o T_psi = psi.
  return Functional{expm(t * tl).transpose() * g.counit};
}

Vector time_average(const FiniteQuantumGroup& g, const GeneratingFunctional& l,
                    double t, const Vector& x) {
  require_valid(g, l);
  if (t <= 0.0) throw InvalidGenerator("time_average: t must be > 0");
  const Matrix gen = right_conv_operator(g, Functional{l.values}).matrix;
  const int n = g.dim;
  const SpectralProjector p0 = eigen_projector(gen, cplx(0.0), 1e-10);
  const Matrix exp_tg = expm(t * gen);
  // (gen + P0) is invertible; on ker(gen) the correction term vanishes
  // because e^{tG} - I does.
  const Matrix v = t * p0.projector +
                   (gen + p0.projector)
                       .partialPivLu()
                       .solve(exp_tg - Matrix::Identity(n, n) -
                              (exp_tg - Matrix::Identity(n, n)) * p0.projector);
  return (v / t) * x;
}

Vector time_average_quadrature(const FiniteQuantumGroup& g,
                               const GeneratingFunctional& l, double t,
                               const Vector& x) {
  require_valid(g, l);
  if (t <= 0.0) throw InvalidGenerator("time_average_quadrature: t must be > 0");
  const Matrix gen = right_conv_operator(g, Functional{l.values}).matrix;

  // 10-point Gauss-Legendre nodes/weights on [0, 1].
  static const double nodes[10] = {
      0.013046735741414128, 0.06746831665550773, 0.16029521585048778,
      0.2833023029353764,   0.4255628305091844,  0.5744371694908156,
      0.7166976970646236,   0.8397047841495122,  0.9325316833444923,
      0.9869532642585859};
  static const double weights[10] = {
      0.03333567215434403, 0.07472567457529027, 0.10954318125799103,
      0.13463335965499817, 0.14776211235737646, 0.14776211235737646,
      0.13463335965499817, 0.10954318125799103, 0.07472567457529027,
      0.03333567215434403};

  const double op = op_norm(gen);
  const long panels =
      std::max<long>(16, static_cast<long>(std::ceil(t * std::max(1.0, op))));
  const double h = t / static_cast<double>(panels);

  std::array<Matrix, 10> node_steps;
  for (int q = 0; q < 10; ++q) node_steps[q] = expm(nodes[q] * h * gen);
  const Matrix panel_step = expm(h * gen);

  Vector acc = Vector::Zero(g.dim);
  Vector panel_start = x;  // e^{aG} x at the left edge of the current panel
  for (long pnl = 0; pnl < panels; ++pnl) {
    for (int q = 0; q < 10; ++q)
      acc += (weights[q] * h) * (node_steps[q] * panel_start);
    panel_start = panel_step * panel_start;
  }
  return acc / t;
}

std::vector<SemigroupLimitRow> semigroup_limits(const FiniteQuantumGroup& g,
                                                const GeneratingFunctional& l,
                                                const std::vector<double>& ps,
                                                const std::vector<double>& t_grid,
                                                const Vector& x) {
  require_valid(g, l);
  const Matrix gen = right_conv_operator(g, Functional{l.values}).matrix;
  const SpectralProjector p0 = eigen_projector(gen, cplx(0.0), 1e-10);
  const Vector fx = p0.projector * x;

  std::vector<SemigroupLimitRow> rows;
  for (double t : t_grid) {
    const Functional phi_t = semigroup_state(g, l, t);
    const StateFlags flags = check_state(g, phi_t);
    const Functional sharp = involution_sharp(g, phi_t);
    const bool symmetric =
        (sharp.values - phi_t.values).cwiseAbs().maxCoeff() < 1e-10;
    const Vector avg = time_average(g, l, t, x);
    const Vector direct = right_conv_operator(g, phi_t).matrix * x;
    for (double p : ps) {
      const LpContext ctx = make_context(g, p);
      SemigroupLimitRow row;
      row.t = t;
      row.p = p;
      row.residual_avg = lp_norm(ctx, avg - fx);
      row.residual_direct = lp_norm(ctx, direct - fx);
      row.is_state_min_eig = flags.min_eigenvalue;
      row.symmetric = symmetric;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace ergolab

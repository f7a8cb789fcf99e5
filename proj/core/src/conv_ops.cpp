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

#include "ergolab/conv_ops.hpp"

#include <algorithm>
#include <cmath>

#include "ergolab/wedderburn.hpp"

namespace ergolab {

ConvOperator right_conv_operator(const FiniteQuantumGroup& g,
                                 const Functional& phi) {
  if (phi.dim() != g.dim)
    throw StructuralError("right_conv_operator: dimension mismatch");
  Matrix m = Matrix::Zero(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      cplx acc(0.0);
      for (int k = 0; k < g.dim; ++k) acc += g.coproduct(i, j, k) * phi.values(k);
      m(j, i) = acc;  // T(e_i) = sum_j m(j,i) e_j
    }
  return ConvOperator{std::move(m), Side::right, phi, g.name};
}

ConvOperator left_conv_operator(const FiniteQuantumGroup& g,
                                const Functional& phi) {
  if (phi.dim() != g.dim)
    throw StructuralError("left_conv_operator: dimension mismatch");
  Matrix m = Matrix::Zero(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int k = 0; k < g.dim; ++k) {
      cplx acc(0.0);
      for (int j = 0; j < g.dim; ++j) acc += g.coproduct(i, j, k) * phi.values(j);
      m(k, i) = acc;
    }
  return ConvOperator{std::move(m), Side::left, phi, g.name};
}

Matrix cesaro_mean(const Matrix& t, long n) {
  if (n < 1) throw std::invalid_argument("cesaro_mean: n must be >= 1");
  Matrix power = t;
  Matrix acc = t;
  for (long k = 2; k <= n; ++k) {
    power = t * power;
    acc += power;
  }
  return acc / static_cast<double>(n);
}

FixedPointProjection fixed_point_projection(const Matrix& t, double tol) {
  FixedPointProjection out;
  out.spectral_radius = spectral_radius(t);
  if (out.spectral_radius > 1.0 + tol)
    throw NotAKernel("spectral radius " + std::to_string(out.spectral_radius) +
                     " exceeds 1; the source functional was not a state");
  const SpectralProjector sp = eigen_projector(t, cplx(1.0), tol);
  if (sp.rank > 0 && sp.semisimplicity_condition > 1.0 / tol)
    throw NotAKernel("eigenvalue 1 is not semisimple (pairing condition " +
                     std::to_string(sp.semisimplicity_condition) + ")");
  out.projection = sp.projector;
  out.fixed_dim = sp.rank;
  return out;
}

ErgodicityReport check_ergodicity(const FiniteQuantumGroup& g,
                                  const Functional& phi, double tol) {
  if (!check_state(g, phi).state)
    throw NotAState("check_ergodicity requires a state");
  ErgodicityReport report;
  report.fixed = fixed_point_projection(right_conv_operator(g, phi).matrix, tol);
  report.ergodic = report.fixed.fixed_dim == 1;
  return report;
}

CesaroLimit cesaro_limit_functional(const FiniteQuantumGroup& g,
                                    const Functional& phi, double tol,
                                    long n_max) {
  if (!check_state(g, phi).state)
    throw NotAState("cesaro_limit_functional requires a state");
  const Matrix t = right_conv_operator(g, phi).matrix;
  CesaroLimit out;
  const FixedPointProjection fp = fixed_point_projection(t, tol);
  out.f = fp.projection;

  // rho = eps o F, using eps(T_psi(x)) = psi(x).
  out.rho = Functional{out.f.transpose() * g.counit};

  const Functional rr = convolve(g, out.rho, out.rho);
  out.idempotent_residual = (rr.values - out.rho.values).cwiseAbs().maxCoeff();
  out.operator_residual =
      (right_conv_operator(g, out.rho).matrix - out.f).cwiseAbs().maxCoeff();
  out.cesaro_residual = (cesaro_mean(t, n_max) - out.f).norm();
  if (out.cesaro_residual > 1e-2 * (1.0 + out.f.norm()))
    throw NotAKernel("Cesàro mean did not approach the fixed-point projection "
                     "(residual " + std::to_string(out.cesaro_residual) +
                     " at n = " + std::to_string(n_max) + "); corrupted input");
  return out;
}

std::vector<Vector> iterate_orbit(const Matrix& t, const Vector& x, long n_max) {
  std::vector<Vector> orbit;
  orbit.reserve(n_max);
  Vector cur = x;
  for (long k = 0; k < n_max; ++k) {
    cur = t * cur;
    orbit.push_back(cur);
  }
  return orbit;
}

SteinIterates stein_even_iterates(const FiniteQuantumGroup& g,
                                  const Functional& phi, const Vector& x,
                                  long n_max, double tol) {
  if (!check_state(g, phi).state)
    throw NotAState("stein_even_iterates requires a state");
  const Functional sharp = involution_sharp(g, phi);
  const double sym = (sharp.values - phi.values).cwiseAbs().maxCoeff();
  if (sym > tol)
    throw NotSymmetric("state is not symmetric: ||phi - phi^#|| = " +
                       std::to_string(sym));
  if (!is_tau_invariant(g, phi))
    throw NotSymmetric("state is not tau-invariant");

  const Matrix t = right_conv_operator(g, phi).matrix;
  const Matrix t2 = t * t;
  SteinIterates out;
  out.rate = subdominant_modulus(t2);
  out.limit = fixed_point_projection(t2, tol).projection * x;
  Vector cur = x;
  out.iterates.reserve(n_max);
  for (long k = 0; k < n_max; ++k) {
    cur = t2 * cur;
    out.iterates.push_back(cur);
  }
  return out;
}

namespace {

// States with prescribed coordinate support: phi = h(c .) with
// c = (p a)^* (p a) for a Gaussian a masked to the support.
Functional masked_random_state(const FiniteQuantumGroup& g,
                               const std::vector<int>& support,
                               std::mt19937_64& rng) {
  Vector a = Vector::Zero(g.dim);
  const Vector raw = randn_vector(g.dim, rng);
  for (int idx : support) a(idx) = raw(idx);
  const Vector c = g.multiply(g.star(a), a);
  const cplx mass = g.haar_of(c);
  if (std::abs(mass) < 1e-10) return Functional{Vector::Zero(g.dim)};
  Vector values(g.dim);
  for (int i = 0; i < g.dim; ++i) {
    Vector ei = Vector::Zero(g.dim);
    ei(i) = 1.0;
    values(i) = g.haar_of(g.multiply(c, ei)) / mass;
  }
  return Functional{values};
}

}  // namespace

IdempotentScan scan_idempotents(const FiniteQuantumGroup& g, int n_samples,
                                unsigned long seed, double tol) {
  IdempotentScan scan;
  for (const auto& q : enumerate_hopf_quotients(g, std::max(tol, 1e-8)))
    scan.subgroup_haars.push_back(q.pulled_back_haar);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);

  auto record = [&](const Functional& phi) {
    StateFlags flags = check_state(g, phi);
    if (!flags.state) return;
    CesaroLimit limit;
    try {
      limit = cesaro_limit_functional(g, phi, tol);
    } catch (const NotAKernel&) {
      return;
    }
    for (auto& item : scan.items) {
      if ((item.rho - limit.rho.values).cwiseAbs().maxCoeff() < 1e-6) {
        ++item.hits;
        return;
      }
    }
    IdempotentScan::Item item;
    item.rho = limit.rho.values;
    item.idempotent_residual = limit.idempotent_residual;
    item.hits = 1;
    for (const auto& sub : scan.subgroup_haars)
      if ((sub - item.rho).cwiseAbs().maxCoeff() < 1e-6)
        item.matches_subgroup_haar = true;
    scan.items.push_back(std::move(item));
  };

  // Structured sweep: every coordinate-subset support would be 2^n; for the
  // scan it is enough to cover all supports of size <= 3 plus the full one.
  std::vector<std::vector<int>> supports;
  for (int i = 0; i < g.dim; ++i) supports.push_back({i});
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) supports.push_back({i, j});
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      for (int k = j + 1; k < g.dim; ++k) supports.push_back({i, j, k});
  std::vector<int> full(g.dim);
  for (int i = 0; i < g.dim; ++i) full[i] = i;
  supports.push_back(full);

  for (const auto& s : supports) record(masked_random_state(g, s, rng));

  for (int draw = 0; draw < n_samples; ++draw) {
    std::vector<int> s;
    for (int i = 0; i < g.dim; ++i)
      if (coin(rng)) s.push_back(i);
    if (s.empty()) s = full;
    record(masked_random_state(g, s, rng));
  }
  return scan;
}

}  // namespace ergolab

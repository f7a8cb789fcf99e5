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

#include "ergolab/functionals.hpp"

#include <cmath>
#include <sstream>

namespace ergolab {

namespace {

void check_dim(const FiniteQuantumGroup& g, const Functional& phi) {
  if (phi.dim() != g.dim)
    throw StructuralError("functional dimension " + std::to_string(phi.dim()) +
                          " does not match group dimension " +
                          std::to_string(g.dim));
}

}  // namespace

Functional convolve(const FiniteQuantumGroup& g, const Functional& phi,
                    const Functional& psi) {
  check_dim(g, phi);
  check_dim(g, psi);
  Vector out(g.dim);
  for (int i = 0; i < g.dim; ++i) {
    cplx acc(0.0);
    for (int j = 0; j < g.dim; ++j) {
      if (phi.values(j) == cplx(0.0)) continue;
      for (int k = 0; k < g.dim; ++k)
        acc += g.coproduct(i, j, k) * phi.values(j) * psi.values(k);
    }
    out(i) = acc;
  }
  return Functional{out};
}

Functional involution_sharp(const FiniteQuantumGroup& g, const Functional& omega) {
  check_dim(g, omega);
  // omega^*(e_i) = conj(omega(S(e_i)^*)); compute S(e_i)^* on the basis.
  Vector out(g.dim);
  for (int i = 0; i < g.dim; ++i) {
    Vector ei = Vector::Zero(g.dim);
    ei(i) = 1.0;
    const Vector s_star = g.star(g.antipode_of(ei));
    out(i) = std::conj(cplx(omega.values.transpose() * s_star));
  }
  return Functional{out};
}

Matrix positivity_matrix(const FiniteQuantumGroup& g, const Functional& phi) {
  check_dim(g, phi);
  const int n = g.dim;
  Matrix p(n, n);
  for (int i = 0; i < n; ++i) {
    Vector ei = Vector::Zero(n);
    ei(i) = 1.0;
    const Vector star_i = g.star(ei);
    for (int j = 0; j < n; ++j) {
      cplx acc(0.0);
      for (int k = 0; k < n; ++k) {
        if (star_i(k) == cplx(0.0)) continue;
        for (int r = 0; r < n; ++r)
          acc += star_i(k) * g.mult(k, j, r) * phi.values(r);
      }
      p(i, j) = acc;
    }
  }
  return p;
}

StateFlags check_state(const FiniteQuantumGroup& g, const Functional& phi,
                       double tol) {
  StateFlags flags;
  const Matrix p = positivity_matrix(g, phi);
  const double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Matrix> es((p + p.adjoint()) / 2.0);
  flags.min_eigenvalue = es.eigenvalues().minCoeff();
  int argmin = 0;
  es.eigenvalues().minCoeff(&argmin);
  flags.witness = es.eigenvectors().col(argmin);

  const double scale = 1.0 + p.norm();
  flags.positive = herm < tol * scale && flags.min_eigenvalue > -tol * scale;
  flags.faithful = flags.positive && flags.min_eigenvalue > tol * scale;
  flags.at_unit = phi.values.transpose() * g.unit;
  flags.state = flags.positive && std::abs(flags.at_unit - cplx(1.0)) < tol * scale;

  // hermitian: phi(e_i^*) = conj(phi(e_i)), i.e. J phi = conj(phi)
  const Vector lhs = g.involution * phi.values;
  flags.hermitian_residual = (lhs - phi.values.conjugate()).cwiseAbs().maxCoeff();
  flags.hermitian = flags.hermitian_residual < tol * (1.0 + phi.values.norm());
  return flags;
}

bool is_tau_invariant(const FiniteQuantumGroup& g, const Functional& phi) {
  check_dim(g, phi);
  return true;  // finite quantum groups are of Kac type: tau_t = id
}

Functional averaged_state(const FiniteQuantumGroup& g, const Functional& phi,
                          long n) {
  if (n < 1) throw std::invalid_argument("averaged_state: n must be >= 1");
  const StateFlags flags = check_state(g, phi);
  if (!flags.positive)
    throw NonPositive("averaged_state requires a positive functional, min eig " +
                      std::to_string(flags.min_eigenvalue));
  Vector acc = Vector::Zero(g.dim);
  Functional power = phi;
  for (long k = 0; k < n; ++k) {
    acc += power.values;
    if (k + 1 < n) power = convolve(g, power, phi);
  }
  return Functional{acc / static_cast<double>(n)};
}

double dual_norm(const FiniteQuantumGroup& g, const Functional& phi) {
  check_dim(g, phi);
  const Matrix gram = g.gram();
  const Vector v = gram.ldlt().solve(phi.values.conjugate());
  const cplx sq = phi.values.transpose() * v;
  return std::sqrt(std::max(0.0, sq.real()));
}

Functional counit_functional(const FiniteQuantumGroup& g) {
  return Functional{g.counit};
}

Functional haar_functional(const FiniteQuantumGroup& g) {
  if (!g.has_haar()) throw StructuralError("haar state not solved");
  return Functional{g.haar};
}

Functional ev_functional(const FiniteQuantumGroup& g, int index) {
  if (index < 0 || index >= g.dim)
    throw StructuralError("ev functional: index out of range");
  Vector v = Vector::Zero(g.dim);
  v(index) = 1.0;
  return Functional{v};
}

Functional uniform_functional(const FiniteQuantumGroup& g) {
  Vector v(g.dim);
  for (int i = 0; i < g.dim; ++i) v(i) = g.left_regular(i).trace() / double(g.dim);
  return Functional{v};
}

Functional random_state(const FiniteQuantumGroup& g, unsigned long seed) {
  if (!g.has_haar()) throw StructuralError("haar state not solved");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Vector a = randn_vector(g.dim, rng);
    const Vector c = g.multiply(g.star(a), a);
    const cplx mass = g.haar_of(c);
    if (std::abs(mass) < 1e-8) continue;
    Vector values(g.dim);
    for (int i = 0; i < g.dim; ++i) {
      Vector ei = Vector::Zero(g.dim);
      ei(i) = 1.0;
      values(i) = g.haar_of(g.multiply(c, ei)) / mass;
    }
    Functional phi{values};
    if (check_state(g, phi).faithful) return phi;
  }
  throw NonPositive("random_state: failed to draw a faithful state");
}

Functional mix_with_haar(const FiniteQuantumGroup& g, const Functional& phi,
                         double w) {
  if (!g.has_haar()) throw StructuralError("haar state not solved");
  return Functional{(1.0 - w) * phi.values + w * g.haar};
}

Functional parse_state_spec(const FiniteQuantumGroup& g, const std::string& spec) {
  if (spec == "haar") return haar_functional(g);
  if (spec == "counit") return counit_functional(g);
  if (spec == "uniform") return uniform_functional(g);
  if (spec.rfind("ev:", 0) == 0) {
    if (g.name.rfind("c:", 0) != 0)
      throw StructuralError(
          "state 'ev:<index>' is only a state on function algebras c:<group>");
    return ev_functional(g, std::stoi(spec.substr(3)));
  }
  if (spec.rfind("random:", 0) == 0)
    return random_state(g, std::stoul(spec.substr(7)));
  if (spec.rfind("vector:[", 0) == 0 && spec.back() == ']') {
    const std::string body = spec.substr(8, spec.size() - 9);
    std::vector<cplx> entries;
    std::stringstream ss(body);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      const auto comma = pair.find(',');
      if (comma == std::string::npos)
        throw StructuralError("state 'vector:' entries must be re,im pairs");
      entries.emplace_back(std::stod(pair.substr(0, comma)),
                           std::stod(pair.substr(comma + 1)));
    }
    if (static_cast<int>(entries.size()) != g.dim)
      throw StructuralError("state 'vector:' has wrong length");
    Vector v(g.dim);
    for (int i = 0; i < g.dim; ++i) v(i) = entries[i];
    return Functional{v};
  }
  throw StructuralError("unknown state spec '" + spec + "'");
}

}  // namespace ergolab

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

#ifndef ERGOLAB_FUNCTIONALS_HPP
#define ERGOLAB_FUNCTIONALS_HPP

#include <string>

#include "ergolab/quantum_group.hpp"

namespace ergolab {

struct NonPositive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of the dual space, phi_i = phi(e_i).
struct Functional {
  Vector values;

  cplx operator()(const Vector& x) const { return values.transpose() * x; }
  int dim() const { return static_cast<int>(values.size()); }
};

/// Convolution (phi * psi)(e_i) = sum_{j,k} coproduct(i,j,k) phi_j psi_k.
Functional convolve(const FiniteQuantumGroup& g, const Functional& phi,
                    const Functional& psi);

/// The #-involution omega^*(x) = conj(omega(S(x)^*)). On the Kac builtins
/// S(x)^* = S(x^*), so this is the usual symmetric-measure involution.
Functional involution_sharp(const FiniteQuantumGroup& g, const Functional& omega);

/// Positivity matrix P(i,j) = phi(e_i^* e_j).
Matrix positivity_matrix(const FiniteQuantumGroup& g, const Functional& phi);

struct StateFlags {
  bool positive = false;
  bool state = false;
  bool faithful = false;
  bool hermitian = false;
  double min_eigenvalue = 0.0;   // of the positivity matrix
  Vector witness;                // eigenvector of the minimal eigenvalue
  double hermitian_residual = 0.0;
  cplx at_unit;
};

/// Flags per the dual-space invariants; the witness documents failures.
StateFlags check_state(const FiniteQuantumGroup& g, const Functional& phi,
                       double tol = 1e-10);

/// tau_t = id on every finite quantum group (Kac type), so membership in
/// the tau-invariant functionals is automatic here. The call exists so the
/// same surface works where the scaling group is nontrivial (see the
/// corepresentation block model).
bool is_tau_invariant(const FiniteQuantumGroup& g, const Functional& phi);

/// phi_n = (1/n) sum_{k=1..n} phi^{*k}. Requires phi positive.
Functional averaged_state(const FiniteQuantumGroup& g, const Functional& phi,
                          long n);

/// Dual norm induced by the L^2(h) Gram matrix:
/// sup |phi(x)| / ||x||_{L^2} = sqrt(phi^T G^{-1} conj(phi)).
double dual_norm(const FiniteQuantumGroup& g, const Functional& phi);

// Named functionals.
Functional counit_functional(const FiniteQuantumGroup& g);
Functional haar_functional(const FiniteQuantumGroup& g);
/// Coordinate (point-evaluation) functional e_i -> delta_{i,index}; a state
/// exactly on function algebras C(G).
Functional ev_functional(const FiniteQuantumGroup& g, int index);
/// Normalized trace of the left regular representation; a state on every
/// builtin and the uniform measure on C(G).
Functional uniform_functional(const FiniteQuantumGroup& g);
/// Random faithful state h(c . ) with c = a^* a / h(a^* a) for a seeded
/// Gaussian algebra element a; retries the draw until faithful.
Functional random_state(const FiniteQuantumGroup& g, unsigned long seed);
/// Convex mixture (1-w) phi + w haar; keeps states states, used to place
/// random states at a controlled distance from the invariant one.
Functional mix_with_haar(const FiniteQuantumGroup& g, const Functional& phi,
                         double w);

/// State mini-language: "haar" | "counit" | "ev:<index>" | "uniform" |
/// "random:<seed>" | "vector:[re,im;re,im;...]".
Functional parse_state_spec(const FiniteQuantumGroup& g, const std::string& spec);

}  // namespace ergolab

#endif  // ERGOLAB_FUNCTIONALS_HPP

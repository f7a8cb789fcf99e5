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

#ifndef ERGOLAB_SEMIGROUP_HPP
#define ERGOLAB_SEMIGROUP_HPP

#include <vector>

#include "ergolab/functionals.hpp"
#include "ergolab/quantum_group.hpp"

namespace ergolab {

struct InvalidGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Generator of a convolution semigroup of states: hermitian, vanishing at
/// 1, conditionally positive on ker(eps).
struct GeneratingFunctional {
  Vector values;
};

struct GeneratorReport {
  double unit_residual = 0.0;       // |L(1)|
  double hermitian_residual = 0.0;  // ||L o * - conj o L||
  double cond_positive_min_eig = 0.0;  // min eig of L(f_i^* f_j) on ker eps
  bool valid = false;
};

GeneratorReport validate_generator(const FiniteQuantumGroup& g,
                                   const GeneratingFunctional& l,
                                   double tol = 1e-10);

/// Poisson-type generator L = psi - eps from a state psi.
GeneratingFunctional poisson_generator(const FiniteQuantumGroup& g,
                                       const Functional& psi);

/// Matrix exponential (scaling-and-squaring Padé).
Matrix expm(const Matrix& m);

/// phi_t = eps o exp(t T_L); a state for every t >= 0 when L is valid.
Functional semigroup_state(const FiniteQuantumGroup& g,
                           const GeneratingFunctional& l, double t);

/// M_t(x) = (1/t) int_0^t T_{phi_s}(x) ds by the closed form
/// (1/t) [ t P_0 + (G + P_0)^{-1} (e^{tG} - I) ] x  with G = T_L and P_0
/// the spectral projector onto ker G.
Vector time_average(const FiniteQuantumGroup& g, const GeneratingFunctional& l,
                    double t, const Vector& x);

/// Composite Gauss-Legendre quadrature of the same integral; the
/// independent oracle for time_average (quadrature tolerance ~1e-10).
Vector time_average_quadrature(const FiniteQuantumGroup& g,
                               const GeneratingFunctional& l, double t,
                               const Vector& x);

struct SemigroupLimitRow {
  double t = 0.0;
  double p = 2.0;
  double residual_avg = 0.0;     // || M_t^(p)(x) - F^(p)(x) ||_p
  double residual_direct = 0.0;  // || T_{phi_t}(x) - F(x) ||_p
  double is_state_min_eig = 0.0; // min eigenvalue of the positivity matrix
  bool symmetric = false;        // phi_t = phi_t^#
};

/// L^p residual sweep of the averaged and direct semigroup evolution
/// against the fixed-point projection, per t and p.
std::vector<SemigroupLimitRow> semigroup_limits(const FiniteQuantumGroup& g,
                                                const GeneratingFunctional& l,
                                                const std::vector<double>& ps,
                                                const std::vector<double>& t_grid,
                                                const Vector& x);

}  // namespace ergolab

#endif  // ERGOLAB_SEMIGROUP_HPP

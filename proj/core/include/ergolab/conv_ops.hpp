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

#ifndef ERGOLAB_CONV_OPS_HPP
#define ERGOLAB_CONV_OPS_HPP

#include <vector>

#include "ergolab/functionals.hpp"
#include "ergolab/quantum_group.hpp"

namespace ergolab {

struct NotAKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Side { right, left };

/// A convolution operator realized as a matrix on basis coordinates, with
/// its provenance.
struct ConvOperator {
  Matrix matrix;
  Side side = Side::right;
  Functional source;
  std::string group_name;
};

/// T_phi = (id (x) phi) Delta; column i holds the coordinates of T(e_i).
ConvOperator right_conv_operator(const FiniteQuantumGroup& g, const Functional& phi);

/// L_phi = (phi (x) id) Delta; phi -> L_phi is an anti-homomorphism.
ConvOperator left_conv_operator(const FiniteQuantumGroup& g, const Functional& phi);

/// M_n(T) = (1/n) sum_{k=1..n} T^k by running accumulation.
Matrix cesaro_mean(const Matrix& t, long n);

struct FixedPointProjection {
  Matrix projection;       // F with F^2 = F, FT = TF = F
  int fixed_dim = 0;       // dim ker(T - I)
  double spectral_radius = 0.0;
};

/// Spectral projection onto ker(T - I) along ran(T - I). Requires T to be
/// a kernel in the operator sense: spectral radius <= 1 + tol and the
/// eigenvalue 1 semisimple; violations raise NotAKernel.
FixedPointProjection fixed_point_projection(const Matrix& t, double tol = 1e-8);

struct ErgodicityReport {
  bool ergodic = false;
  FixedPointProjection fixed;
};

/// ergodic <=> dim ker(T_phi - I) = 1; phi must be a state.
ErgodicityReport check_ergodicity(const FiniteQuantumGroup& g,
                                  const Functional& phi, double tol = 1e-8);

struct CesaroLimit {
  Functional rho;               // = eps o F, the weak limit of phi_n
  Matrix f;                     // fixed point projection of T_phi
  double idempotent_residual;   // || rho * rho - rho ||_inf
  double operator_residual;     // || T_rho - F ||
  double cesaro_residual;       // || M_{n_max}(T) - F || (diagnostic)
};

/// Weak limit of the averaged states phi_n, extracted spectrally and
/// cross-checked against the running Cesàro mean at n_max.
CesaroLimit cesaro_limit_functional(const FiniteQuantumGroup& g,
                                    const Functional& phi, double tol = 1e-8,
                                    long n_max = 10000);

/// [T x, T^2 x, ..., T^{n_max} x]; no convergence claim.
std::vector<Vector> iterate_orbit(const Matrix& t, const Vector& x, long n_max);

struct SteinIterates {
  Vector limit;                 // F_{T^2} x
  double rate;                  // second-largest |eigenvalue| of T^2
  std::vector<Vector> iterates; // T^2 x, T^4 x, ...
};

/// Even iterates T^{2n} x of a symmetric state (phi = phi^#); converges to
/// the fixed-point projection of T^2 applied to x.
SteinIterates stein_even_iterates(const FiniteQuantumGroup& g,
                                  const Functional& phi, const Vector& x,
                                  long n_max, double tol = 1e-8);

struct IdempotentScan {
  struct Item {
    Vector rho;
    double idempotent_residual = 0.0;
    bool matches_subgroup_haar = false;
    int hits = 0;  // how many scanned states converged here
  };
  std::vector<Item> items;
  std::vector<Vector> subgroup_haars;  // pullbacks h_B o pi per Hopf quotient
};

/// Cesàro-limit scan over states with random and structured supports,
/// deduplicated and compared against the Haar states of all quantum
/// subgroups (Hopf *-algebra quotients) of g.
IdempotentScan scan_idempotents(const FiniteQuantumGroup& g, int n_samples,
                                unsigned long seed, double tol = 1e-8);

}  // namespace ergolab

#endif  // ERGOLAB_CONV_OPS_HPP

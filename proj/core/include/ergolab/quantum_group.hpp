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

#ifndef ERGOLAB_QUANTUM_GROUP_HPP
#define ERGOLAB_QUANTUM_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "ergolab/linalg.hpp"

namespace ergolab {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUniqueHaar : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional Hopf *-algebra given by dense structure constants,
/// together with its Haar state once solved. Instances are treated as
/// immutable values; every operation below returns fresh data.
///
/// Basis conventions:
///   e_i e_j        = sum_k mult(i,j,k) e_k
///   Delta(e_i)     = sum_{j,k} coproduct(i,j,k) e_j (x) e_k
///   (e_i)^*        = sum_k involution(i,k) e_k   (conjugate-linear extension)
///   S(e_i)         = sum_k antipode(i,k) e_k
///   1              = sum_i unit(i) e_i
struct FiniteQuantumGroup {
  std::string name;
  int dim = 0;
  Vector unit;
  Tensor3 mult;
  Tensor3 coproduct;
  Vector counit;
  Matrix involution;
  Matrix antipode;
  Vector haar;  // empty until solve_haar has run

  bool has_haar() const { return haar.size() == dim; }

  /// Index of the unit when it coincides with a basis vector, else -1.
  /// (For function algebras the unit is the sum of all minimal idempotents,
  /// so no single index exists.)
  int unit_index() const;

  // Coordinate arithmetic.
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector star(const Vector& x) const;
  Vector antipode_of(const Vector& x) const;
  cplx counit_of(const Vector& x) const { return counit.transpose() * x; }
  cplx haar_of(const Vector& x) const;

  /// Matrix of left multiplication by e_i (the GNS representation matrix).
  Matrix left_regular(int i) const;
  /// Matrix of left multiplication by x.
  Matrix left_regular(const Vector& x) const;

  /// Gram matrix G(i,j) = h(e_i^* e_j). Requires haar.
  Matrix gram() const;
  /// Bilinear pairing K(i,j) = h(e_i e_j). Requires haar.
  Matrix pairing() const;

  /// Throws StructuralError if tensor shapes are inconsistent with dim.
  void check_shapes() const;
};

/// Residual report of the Hopf *-algebra axiom suite.
struct AxiomReport {
  struct Entry {
    std::string name;
    double residual = 0.0;
    bool pass = false;
  };
  std::vector<Entry> entries;
  double galois_cond_left = 0.0;
  double galois_cond_right = 0.0;
  double gram_min_eigenvalue = 0.0;  // meaningful only when haar present
  double tol = 0.0;

  bool all_pass() const;
  double max_residual() const;
  const Entry* find(const std::string& name) const;
  /// Name of the worst failing entry, or empty when all pass.
  std::string worst_failure() const;
};

/// Evaluates every structural invariant: associativity, unit law,
/// coassociativity, counit law, Delta a unital *-homomorphism, antipode
/// laws, Kac-type conditions, cancellation (invertibility of the two
/// Galois maps, condition numbers reported) and, when the Haar vector is
/// present, its invariance, normalization, traciality, unimodularity and
/// the positivity of the Gram matrix.
AxiomReport verify_axioms(const FiniteQuantumGroup& g, double tol = 1e-10);

/// Solves the right-invariance system { (id (x) h) Delta(e_i) = h(e_i) 1,
/// h(1) = 1 } by an SVD nullspace of the stacked equations. Uniqueness is
/// judged by the singular-value gap; bi-invariance and Gram positivity are
/// verified post hoc. Returns a copy of the group with `haar` filled.
FiniteQuantumGroup solve_haar(FiniteQuantumGroup g, double tol = 1e-10);

/// Rewrites all structure tensors in the basis f_a = sum_i B(a,i) e_i.
FiniteQuantumGroup change_basis(const FiniteQuantumGroup& g, const Matrix& b,
                                const std::string& new_name = "");

}  // namespace ergolab

#endif  // ERGOLAB_QUANTUM_GROUP_HPP

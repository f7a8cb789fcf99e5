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

#ifndef ERGOLAB_CERTIFICATES_HPP
#define ERGOLAB_CERTIFICATES_HPP

#include <string>
#include <vector>

#include "ergolab/quantum_group.hpp"

namespace ergolab {

struct CertificateFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Witness for 'pointwise' convergence: a projection e in the algebra with
/// small h(1-e) such that ||(x_m - target) e||_inf tends to zero. At finite
/// dimension with faithful h the certificate degenerates: e = 1 works
/// exactly when the sequence converges in norm, which the report records.
struct Certificate {
  Vector projection;            // coordinates of e
  int projection_rank = 0;      // rank of lambda(e)
  double h_complement = 0.0;    // h(1 - e)
  std::vector<double> tails;    // sup_{m >= k} ||(x_m - target) e||_inf
  bool trivial_projection = true;  // e == 1
  std::string note;
};

/// Almost-uniform certificate for the sequence against the target, at level
/// epsilon. `tol` is the norm-convergence threshold for the final tail.
/// Throws CertificateFailed when no admissible projection exists.
Certificate au_certificate(const FiniteQuantumGroup& g,
                           const std::vector<Vector>& seq, const Vector& target,
                           double epsilon, double tol = 1e-6);

}  // namespace ergolab

#endif  // ERGOLAB_CERTIFICATES_HPP

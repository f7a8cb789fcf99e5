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

#include "ergolab/certificates.hpp"

#include <algorithm>
#include <cmath>

namespace ergolab {

namespace {

std::vector<double> suffix_max(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  double running = 0.0;
  for (std::size_t i = v.size(); i-- > 0;) {
    running = std::max(running, v[i]);
    out[i] = running;
  }
  return out;
}

}  // namespace

Certificate au_certificate(const FiniteQuantumGroup& g,
                           const std::vector<Vector>& seq, const Vector& target,
                           double epsilon, double tol) {
  if (!g.has_haar())
    throw StructuralError("au_certificate requires a solved Haar state");
  if (seq.empty()) throw std::invalid_argument("au_certificate: empty sequence");
  const int n = g.dim;

  const Matrix gram = g.gram();
  const Matrix gram_sqrt = hermitian_sqrt(gram);
  const Matrix gram_sqrt_inv = hermitian_power(gram, -0.5);

  std::vector<Matrix> deltas;  // lambda(x_m - target)
  deltas.reserve(seq.size());
  std::vector<double> norms;
  for (const auto& x : seq) {
    deltas.push_back(g.left_regular(Vector(x - target)));
    norms.push_back(gram_op_norm(deltas.back(), gram_sqrt, gram_sqrt_inv));
  }

  Certificate cert;
  cert.tails = suffix_max(norms);
  if (cert.tails.back() < tol) {
    cert.projection = g.unit;
    cert.projection_rank = n;
    cert.h_complement = 0.0;
    cert.trivial_projection = true;
    cert.note = "norm convergence; e = 1 certifies (finite-dimensional "
                "degeneracy of almost-uniform convergence)";
    return cert;
  }

  // Restricted convergence: look for the largest projection in the algebra
  // whose range lies in the joint asymptotic kernel of the tail operators.
  const std::size_t window = std::max<std::size_t>(1, seq.size() / 4);
  Matrix stacked(static_cast<int>(window) * n, n);
  for (std::size_t w = 0; w < window; ++w)
    stacked.middleRows(static_cast<int>(w) * n, n) =
        deltas[seq.size() - window + w];
  const Matrix kernel = kernel_basis(stacked, tol);

  if (kernel.cols() > 0) {
    // Gram-orthogonal projector onto the kernel subspace.
    Eigen::HouseholderQR<Matrix> qr(gram_sqrt * kernel);
    const Matrix q = Matrix(qr.householderQ())
                         .leftCols(static_cast<int>(kernel.cols()));
    const Matrix proj_gns = gram_sqrt_inv * q * q.adjoint() * gram_sqrt;

    // Pull the projector back to an algebra element if possible.
    Matrix lambda_map(n * n, n);
    for (int i = 0; i < n; ++i) {
      const Matrix l = g.left_regular(i);
      lambda_map.col(i) = Eigen::Map<const Vector>(l.data(), l.size());
    }
    const Vector rhs =
        Eigen::Map<const Vector>(proj_gns.data(), proj_gns.size());
    const Vector e = lambda_map.colPivHouseholderQr().solve(rhs);
    const double in_algebra = (lambda_map * e - rhs).norm();
    const double idem = (g.multiply(e, e) - e).cwiseAbs().maxCoeff();
    const double selfadj = (g.star(e) - e).cwiseAbs().maxCoeff();
    const double hc = 1.0 - g.haar_of(e).real();

    if (in_algebra < 1e-8 && idem < 1e-8 && selfadj < 1e-8 && hc < epsilon) {
      const Matrix le = g.left_regular(e);
      std::vector<double> restricted;
      restricted.reserve(deltas.size());
      for (const auto& d : deltas)
        restricted.push_back(gram_op_norm(d * le, gram_sqrt, gram_sqrt_inv));
      const std::vector<double> tails = suffix_max(restricted);
      if (tails.back() < tol) {
        cert.projection = e;
        cert.projection_rank =
            static_cast<int>(std::lround(proj_gns.trace().real()));
        cert.h_complement = hc;
        cert.tails = tails;
        cert.trivial_projection = false;
        cert.note = "restricted convergence on a proper projection";
        return cert;
      }
    }
  }

  throw CertificateFailed(
      "no projection e with h(1-e) < " + std::to_string(epsilon) +
      " certifies convergence; final tail " + std::to_string(cert.tails.back()));
}

}  // namespace ergolab

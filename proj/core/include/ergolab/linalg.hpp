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

#ifndef ERGOLAB_LINALG_HPP
#define ERGOLAB_LINALG_HPP

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace ergolab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense complex 3-tensor with t(i,j,k) indexing, row-major in (i,j,k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int d0, int d1, int d2)
      : d0_(d0), d1_(d1), d2_(d2),
        data_(static_cast<std::size_t>(d0) * d1 * d2, cplx(0.0, 0.0)) {}

  cplx& operator()(int i, int j, int k) {
    return data_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
  }
  cplx operator()(int i, int j, int k) const {
    return data_[(static_cast<std::size_t>(i) * d1_ + j) * d2_ + k];
  }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  const std::vector<cplx>& raw() const { return data_; }

 private:
  int d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<cplx> data_;
};

inline double frob(const Matrix& m) { return m.norm(); }

/// Largest singular value.
inline double op_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

/// Hermitian principal power A^p via eigendecomposition; eigenvalues below
/// `clamp` are clamped to zero before the power is taken.
Matrix hermitian_power(const Matrix& a, double p, double clamp = -1e-12);

/// Principal square root of a Hermitian positive definite matrix.
Matrix hermitian_sqrt(const Matrix& a);

/// A^{it} for Hermitian positive definite A and real t (unitary).
Matrix hermitian_imag_power(const Matrix& a, double t);

/// Adjoint of `op` with respect to the inner product <a,b> = a^H G b,
/// G Hermitian positive definite: G^{-1} op^H G.
Matrix gram_adjoint(const Matrix& op, const Matrix& gram);

/// Operator norm of `op` acting on the G-weighted space:
/// the largest singular value of G^{1/2} op G^{-1/2}.
double gram_op_norm(const Matrix& op, const Matrix& gram_sqrt,
                    const Matrix& gram_sqrt_inv);

/// Orthonormal basis (columns) of the numerical kernel of `m`, i.e. the
/// right singular vectors whose singular values fall below
/// rel_tol * max(1, sigma_max).
Matrix kernel_basis(const Matrix& m, double rel_tol = 1e-8);

/// Same for the kernel of m^H (left singular vectors of small sigma).
Matrix cokernel_basis(const Matrix& m, double rel_tol = 1e-8);

struct SpectralProjector {
  Matrix projector;      // P with P^2 = P, commuting with the matrix
  int rank = 0;          // dimension of the target eigenspace
  double semisimplicity_condition = 0.0;  // cond of the W^H X pairing
};

/// Spectral projector of `m` onto the eigenvalue cluster near `lambda`
/// along the complementary invariant subspace. Requires the eigenvalue to
/// be semisimple; the returned condition number diagnoses violations.
SpectralProjector eigen_projector(const Matrix& m, cplx lambda,
                                  double rel_tol = 1e-8);

/// Spectral radius via eigenvalues.
double spectral_radius(const Matrix& m);

/// Second-largest |eigenvalue|.
double subdominant_modulus(const Matrix& m);

/// Standard complex Gaussian vector/matrix, reproducible from the engine.
Vector randn_vector(int n, std::mt19937_64& rng);
Matrix randn_matrix(int rows, int cols, std::mt19937_64& rng);

/// Least-squares slope of log(y) against log(x); used for decay-rate fits.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace ergolab

#endif  // ERGOLAB_LINALG_HPP

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

#include "ergolab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergolab {

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> hermitian_eig(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((a + a.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigendecomposition failed");
  }
  return es;
}

}  // namespace

Matrix hermitian_power(const Matrix& a, double p, double clamp) {
  auto es = hermitian_eig(a);
  RealVector vals = es.eigenvalues();
  for (int i = 0; i < vals.size(); ++i) {
    double v = vals(i);
    if (v < 0.0) {
      if (v < clamp) {
        // keep the clamp honest: large negative parts are a caller bug
        if (v < -1e-6 * std::max(1.0, std::abs(vals(vals.size() - 1)))) {
          throw std::runtime_error("hermitian_power: matrix is not PSD");
        }
      }
      v = 0.0;
    }
    vals(i) = std::pow(v, p);
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix hermitian_sqrt(const Matrix& a) { return hermitian_power(a, 0.5); }

Matrix hermitian_imag_power(const Matrix& a, double t) {
  auto es = hermitian_eig(a);
  Vector vals(es.eigenvalues().size());
  for (int i = 0; i < vals.size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v <= 0.0) {
      throw std::runtime_error("hermitian_imag_power: matrix is not positive");
    }
    vals(i) = std::exp(cplx(0.0, t * std::log(v)));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix gram_adjoint(const Matrix& op, const Matrix& gram) {
  return gram.ldlt().solve(op.adjoint() * gram);
}

double gram_op_norm(const Matrix& op, const Matrix& gram_sqrt,
                    const Matrix& gram_sqrt_inv) {
  return op_norm(gram_sqrt * op * gram_sqrt_inv);
}

Matrix kernel_basis(const Matrix& m, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int k = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < cutoff) ++k;
  return svd.matrixV().rightCols(k);
}

Matrix cokernel_basis(const Matrix& m, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int k = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) < cutoff) ++k;
  return svd.matrixU().rightCols(k);
}

SpectralProjector eigen_projector(const Matrix& m, cplx lambda, double rel_tol) {
  const int n = static_cast<int>(m.rows());
  const Matrix shifted = m - lambda * Matrix::Identity(n, n);
  SpectralProjector out;
  const Matrix x = kernel_basis(shifted, rel_tol);    // right eigenvectors
  const Matrix w = cokernel_basis(shifted, rel_tol);  // left eigenvectors
  out.rank = static_cast<int>(x.cols());
  if (out.rank == 0) {
    out.projector = Matrix::Zero(n, n);
    out.semisimplicity_condition = 1.0;
    return out;
  }
  const Matrix pairing = w.adjoint() * x;  // singular iff eigenvalue defective
  Eigen::JacobiSVD<Matrix> svd(pairing);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double smax = svd.singularValues()(0);
  out.semisimplicity_condition = (smin > 0.0) ? smax / smin
                                              : std::numeric_limits<double>::infinity();
  out.projector = x * pairing.partialPivLu().solve(w.adjoint());
  return out;
}

double spectral_radius(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m, /*computeEigenvectors=*/false);
  double r = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    r = std::max(r, std::abs(es.eigenvalues()(i)));
  return r;
}

double subdominant_modulus(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> es(m, false);
  std::vector<double> mods;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    mods.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(mods.begin(), mods.end(), std::greater<double>());
  return mods.size() > 1 ? mods[1] : 0.0;
}

Vector randn_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v(i) = cplx(re, im) / std::sqrt(2.0);
  }
  return v;
}

Matrix randn_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      m(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  return m;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope: need >= 2 samples");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(std::max(y[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ergolab

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

#include "ergolab/wedderburn.hpp"

#include <algorithm>
#include <cmath>

namespace ergolab {

namespace {

// Right multiplication matrix: (x e_i)_r = sum_j x_j mult(j,i,r).
Matrix right_regular(const FiniteQuantumGroup& g, int i) {
  Matrix r(g.dim, g.dim);
  for (int j = 0; j < g.dim; ++j)
    for (int k = 0; k < g.dim; ++k) r(k, j) = g.mult(j, i, k);
  return r;
}

// vec(lambda(e_i)) columns; used to pull matrices back to algebra elements.
Matrix regular_rep_map(const FiniteQuantumGroup& g) {
  Matrix lam(g.dim * g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i) {
    const Matrix l = g.left_regular(i);
    lam.col(i) = Eigen::Map<const Vector>(l.data(), l.size());
  }
  return lam;
}

Vector element_from_matrix(const Matrix& lambda_map, const Matrix& target,
                           double* residual) {
  const Vector rhs = Eigen::Map<const Vector>(target.data(), target.size());
  const Vector coords = lambda_map.colPivHouseholderQr().solve(rhs);
  if (residual) *residual = (lambda_map * coords - rhs).norm();
  return coords;
}

// Coefficient matrix of Delta(v): M(j,k) = sum_i v_i coproduct(i,j,k).
Matrix coproduct_matrix(const FiniteQuantumGroup& g, const Vector& v) {
  Matrix m = Matrix::Zero(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i) {
    if (v(i) == cplx(0.0)) continue;
    for (int j = 0; j < g.dim; ++j)
      for (int k = 0; k < g.dim; ++k) m(j, k) += v(i) * g.coproduct(i, j, k);
  }
  return m;
}

}  // namespace

BlockStructure detect_blocks(const FiniteQuantumGroup& g) {
  g.check_shapes();
  if (!g.has_haar())
    throw StructuralError("detect_blocks requires a solved Haar state");
  const int n = g.dim;

  // Center: x with e_i x = x e_i for all i.
  Matrix stacked(n * n, n);
  for (int i = 0; i < n; ++i)
    stacked.middleRows(i * n, n) = g.left_regular(i) - right_regular(g, i);
  const Matrix center = kernel_basis(stacked, 1e-10);
  const int n_blocks = static_cast<int>(center.cols());
  if (n_blocks == 0) throw StructuralError("detect_blocks: empty center");

  const Matrix gram = g.gram();
  const Matrix gram_sqrt = hermitian_sqrt(gram);
  const Matrix gram_sqrt_inv = hermitian_power(gram, -0.5);
  const Matrix lambda_map = regular_rep_map(g);

  BlockStructure out;
  std::mt19937_64 rng(0x5eedULL);
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Random hermitian central element; its eigenvalues separate the
    // blocks almost surely.
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector z = Vector::Zero(n);
    for (int k = 0; k < n_blocks; ++k) {
      const Vector v = center.col(k);
      z += gauss(rng) * (v + g.star(v)) / 2.0;
    }
    const Matrix lz = g.left_regular(z);
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram_sqrt * lz * gram_sqrt_inv);
    if (es.info() != Eigen::Success) continue;

    // Cluster eigenvalues.
    std::vector<std::pair<double, int>> vals;
    for (int i = 0; i < n; ++i) vals.push_back({es.eigenvalues()(i), i});
    std::sort(vals.begin(), vals.end());
    const double spread = std::max(1.0, vals.back().first - vals.front().first);
    std::vector<std::vector<int>> clusters{{vals[0].second}};
    for (int i = 1; i < n; ++i) {
      if (vals[i].first - vals[i - 1].first > 1e-6 * spread)
        clusters.push_back({});
      clusters.back().push_back(vals[i].second);
    }
    if (static_cast<int>(clusters.size()) != n_blocks) continue;

    out.central_idempotents.clear();
    out.block_matrix_dims.clear();
    bool ok = true;
    for (const auto& cluster : clusters) {
      Matrix proj_h = Matrix::Zero(n, n);
      for (int idx : cluster) {
        const Vector u = es.eigenvectors().col(idx);
        proj_h += u * u.adjoint();
      }
      const Matrix proj = gram_sqrt_inv * proj_h * gram_sqrt;
      double residual = 0.0;
      const Vector zk = element_from_matrix(lambda_map, proj, &residual);
      if (residual > 1e-8) {
        ok = false;
        break;
      }
      const Vector sq = g.multiply(zk, zk);
      if ((sq - zk).cwiseAbs().maxCoeff() > 1e-8) {
        ok = false;
        break;
      }
      out.central_idempotents.push_back(zk);
      const double ideal_dim = proj.trace().real();
      out.block_matrix_dims.push_back(
          static_cast<int>(std::lround(std::sqrt(ideal_dim))));
    }
    if (!ok) continue;

    // Deterministic order: by counit value desc, then ideal dim, then
    // lexicographic coordinates.
    std::vector<int> order(n_blocks);
    for (int k = 0; k < n_blocks; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double ea = std::abs(cplx(g.counit.transpose() *
                                      out.central_idempotents[a]));
      const double eb = std::abs(cplx(g.counit.transpose() *
                                      out.central_idempotents[b]));
      if (std::abs(ea - eb) > 0.5) return ea > eb;
      if (out.block_matrix_dims[a] != out.block_matrix_dims[b])
        return out.block_matrix_dims[a] < out.block_matrix_dims[b];
      for (int i = 0; i < n; ++i) {
        const double da = out.central_idempotents[a](i).real();
        const double db = out.central_idempotents[b](i).real();
        if (std::abs(da - db) > 1e-6) return da > db;
      }
      return false;
    });
    std::vector<Vector> idem;
    std::vector<int> dims;
    for (int k : order) {
      idem.push_back(out.central_idempotents[k]);
      dims.push_back(out.block_matrix_dims[k]);
    }
    out.central_idempotents = idem;
    out.block_matrix_dims = dims;

    for (int k = 0; k < n_blocks; ++k) {
      const double eps_val = std::abs(
          cplx(g.counit.transpose() * out.central_idempotents[k]) - cplx(1.0));
      if (eps_val < 1e-8) out.counit_block = k;
    }
    if (out.counit_block < 0) continue;

    // Basis alignment.
    out.block_indices.assign(n_blocks, {});
    out.basis_aligned = true;
    for (int i = 0; i < n && out.basis_aligned; ++i) {
      Vector ei = Vector::Zero(n);
      ei(i) = 1.0;
      int home = -1;
      for (int k = 0; k < n_blocks; ++k) {
        const Vector zi = g.multiply(out.central_idempotents[k], ei);
        if ((zi - ei).cwiseAbs().maxCoeff() < 1e-8)
          home = k;
        else if (zi.cwiseAbs().maxCoeff() > 1e-8)
          home = -2;
      }
      if (home >= 0)
        out.block_indices[home].push_back(i);
      else
        out.basis_aligned = false;
    }
    if (!out.basis_aligned) out.block_indices.clear();
    return out;
  }
  throw StructuralError("detect_blocks: could not separate the center");
}

std::vector<HopfQuotient> enumerate_hopf_quotients(const FiniteQuantumGroup& g,
                                                   double tol) {
  const BlockStructure blocks = detect_blocks(g);
  const int nb = static_cast<int>(blocks.central_idempotents.size());
  const int n = g.dim;
  std::vector<HopfQuotient> out;

  for (unsigned mask = 1; mask < (1u << nb); ++mask) {
    if (!(mask & (1u << blocks.counit_block))) continue;

    Vector zs = Vector::Zero(n);
    std::vector<int> kept;
    for (int k = 0; k < nb; ++k)
      if (mask & (1u << k)) {
        zs += blocks.central_idempotents[k];
        kept.push_back(k);
      }
    const Matrix lz = g.left_regular(zs);
    const Matrix lcompl = Matrix::Identity(n, n) - lz;

    // Ideal basis: range of multiplication by 1 - z_S.
    Eigen::ColPivHouseholderQR<Matrix> qr_ideal(lcompl);
    qr_ideal.setThreshold(1e-8);
    const int ideal_dim = static_cast<int>(qr_ideal.rank());
    const int r = n - ideal_dim;
    if (r <= 0) continue;

    bool hopf_ideal = true;
    for (int c = 0; c < ideal_dim && hopf_ideal; ++c) {
      const Vector v =
          lcompl.col(qr_ideal.colsPermutation().indices()(c));
      const double e_counit = std::abs(cplx(g.counit.transpose() * v));
      const double e_antipode =
          (lz * g.antipode_of(v)).cwiseAbs().maxCoeff();
      const Matrix dv = coproduct_matrix(g, v);
      const double e_coproduct =
          (lz * dv * lz.transpose()).cwiseAbs().maxCoeff();
      if (e_counit > tol || e_antipode > tol || e_coproduct > tol)
        hopf_ideal = false;
    }
    if (!hopf_ideal) continue;

    // Quotient basis from pivot columns of multiplication by z_S.
    Eigen::ColPivHouseholderQR<Matrix> qr(lz);
    qr.setThreshold(1e-8);
    if (static_cast<int>(qr.rank()) != r) continue;
    Matrix f(n, r);
    for (int j = 0; j < r; ++j)
      f.col(j) = lz.col(qr.colsPermutation().indices()(j));
    const Matrix fpinv =
        (f.adjoint() * f).ldlt().solve(f.adjoint());  // left inverse of F
    const Matrix proj = fpinv * lz;                   // pi in coordinates

    FiniteQuantumGroup q;
    q.name = g.name + "/blocks";
    q.dim = r;
    q.unit = proj * g.unit;
    q.counit = Vector(r);
    q.mult = Tensor3(r, r, r);
    q.coproduct = Tensor3(r, r, r);
    q.involution = Matrix::Zero(r, r);
    q.antipode = Matrix::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      q.counit(i) = g.counit_of(f.col(i));
      q.involution.row(i) = (proj * g.star(f.col(i))).transpose();
      q.antipode.row(i) = (proj * g.antipode_of(f.col(i))).transpose();
      const Matrix dv = proj * coproduct_matrix(g, f.col(i)) * proj.transpose();
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) q.coproduct(i, j, k) = dv(j, k);
      for (int j = 0; j < r; ++j) {
        const Vector prod = proj * g.multiply(f.col(i), f.col(j));
        for (int k = 0; k < r; ++k) q.mult(i, j, k) = prod(k);
      }
    }

    try {
      const AxiomReport report = verify_axioms(q, std::max(tol, 1e-8));
      if (!report.all_pass()) continue;
      q = solve_haar(std::move(q));
    } catch (const std::runtime_error&) {
      continue;
    }

    HopfQuotient item;
    item.blocks = kept;
    item.coordinate_map = proj;
    item.pulled_back_haar = proj.transpose() * q.haar;
    item.quotient = std::move(q);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace ergolab

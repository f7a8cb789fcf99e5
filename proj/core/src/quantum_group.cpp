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

#include "ergolab/quantum_group.hpp"

#include <algorithm>
#include <cmath>

namespace ergolab {

namespace {

// Delta(e_i) as the n x n coefficient matrix C_i(j,k) = coproduct(i,j,k).
Matrix coproduct_slice(const FiniteQuantumGroup& g, int i) {
  Matrix c(g.dim, g.dim);
  for (int j = 0; j < g.dim; ++j)
    for (int k = 0; k < g.dim; ++k) c(j, k) = g.coproduct(i, j, k);
  return c;
}

// m(.,.,k) as a matrix M_k(i,j) = mult(i,j,k).
Matrix mult_slice(const FiniteQuantumGroup& g, int k) {
  Matrix m(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) m(i, j) = g.mult(i, j, k);
  return m;
}

}  // namespace

int FiniteQuantumGroup::unit_index() const {
  for (int i = 0; i < dim; ++i) {
    Vector basis = Vector::Zero(dim);
    basis(i) = 1.0;
    if ((unit - basis).norm() < 1e-12) return i;
  }
  return -1;
}

Vector FiniteQuantumGroup::multiply(const Vector& x, const Vector& y) const {
  Vector out = Vector::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x(i) == cplx(0.0)) continue;
    for (int j = 0; j < dim; ++j) {
      const cplx w = x(i) * y(j);
      if (w == cplx(0.0)) continue;
      for (int k = 0; k < dim; ++k) out(k) += w * mult(i, j, k);
    }
  }
  return out;
}

Vector FiniteQuantumGroup::star(const Vector& x) const {
  return involution.transpose() * x.conjugate();
}

Vector FiniteQuantumGroup::antipode_of(const Vector& x) const {
  return antipode.transpose() * x;
}

cplx FiniteQuantumGroup::haar_of(const Vector& x) const {
  if (!has_haar()) throw StructuralError("haar state not solved");
  return haar.transpose() * x;
}

Matrix FiniteQuantumGroup::left_regular(int i) const {
  Matrix l(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int r = 0; r < dim; ++r) l(r, j) = mult(i, j, r);
  return l;
}

Matrix FiniteQuantumGroup::left_regular(const Vector& x) const {
  Matrix l = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x(i) == cplx(0.0)) continue;
    for (int j = 0; j < dim; ++j)
      for (int r = 0; r < dim; ++r) l(r, j) += x(i) * mult(i, j, r);
  }
  return l;
}

Matrix FiniteQuantumGroup::gram() const {
  if (!has_haar()) throw StructuralError("haar state not solved");
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    Vector ei = Vector::Zero(dim);
    ei(i) = 1.0;
    const Vector star_i = star(ei);
    for (int j = 0; j < dim; ++j) {
      Vector ej = Vector::Zero(dim);
      ej(j) = 1.0;
      g(i, j) = haar_of(multiply(star_i, ej));
    }
  }
  return g;
}

Matrix FiniteQuantumGroup::pairing() const {
  if (!has_haar()) throw StructuralError("haar state not solved");
  Matrix k(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cplx acc(0.0);
      for (int r = 0; r < dim; ++r) acc += mult(i, j, r) * haar(r);
      k(i, j) = acc;
    }
  return k;
}

void FiniteQuantumGroup::check_shapes() const {
  const bool ok = dim > 0 && unit.size() == dim && counit.size() == dim &&
                  involution.rows() == dim && involution.cols() == dim &&
                  antipode.rows() == dim && antipode.cols() == dim &&
                  mult.dim0() == dim && mult.dim1() == dim &&
                  mult.dim2() == dim && coproduct.dim0() == dim &&
                  coproduct.dim1() == dim && coproduct.dim2() == dim;
  if (!ok)
    throw StructuralError("quantum group '" + name +
                          "': dimension mismatch between structure tensors");
}

bool AxiomReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.pass; });
}

double AxiomReport::max_residual() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.residual);
  return m;
}

const AxiomReport::Entry* AxiomReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string AxiomReport::worst_failure() const {
  const Entry* worst = nullptr;
  for (const auto& e : entries)
    if (!e.pass && (!worst || e.residual > worst->residual)) worst = &e;
  return worst ? worst->name : "";
}

AxiomReport verify_axioms(const FiniteQuantumGroup& g, double tol) {
  g.check_shapes();
  const int n = g.dim;
  AxiomReport report;
  report.tol = tol;
  auto push = [&](const std::string& name, double residual) {
    report.entries.push_back({name, residual, residual < tol});
  };

  std::vector<Matrix> lmat(n), cmat(n), mmat(n);
  for (int i = 0; i < n; ++i) {
    lmat[i] = g.left_regular(i);
    cmat[i] = coproduct_slice(g, i);
    mmat[i] = mult_slice(g, i);
  }

  // associativity <=> lambda(e_i e_j) = lambda(e_i) lambda(e_j)
  double assoc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix lhs = Matrix::Zero(n, n);
      for (int k = 0; k < n; ++k)
        if (g.mult(i, j, k) != cplx(0.0)) lhs += g.mult(i, j, k) * lmat[k];
      assoc = std::max(assoc, (lhs - lmat[i] * lmat[j]).cwiseAbs().maxCoeff());
    }
  push("associativity", assoc);

  {
    Matrix left = Matrix::Zero(n, n), right = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      if (g.unit(i) == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          left(j, k) += g.unit(i) * g.mult(i, j, k);
          right(j, k) += g.unit(i) * g.mult(j, i, k);
        }
    }
    const Matrix id = Matrix::Identity(n, n);
    push("unit_law", std::max((left - id).cwiseAbs().maxCoeff(),
                              (right - id).cwiseAbs().maxCoeff()));
  }

  // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
  double coassoc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          cplx t1(0.0), t2(0.0);
          for (int a = 0; a < n; ++a)
            t1 += g.coproduct(i, a, z) * g.coproduct(a, x, y);
          for (int b = 0; b < n; ++b)
            t2 += g.coproduct(i, x, b) * g.coproduct(b, y, z);
          coassoc = std::max(coassoc, std::abs(t1 - t2));
        }
  }
  push("coassociativity", coassoc);

  {
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      // (eps (x) id) Delta(e_i) = e_i  and  (id (x) eps) Delta(e_i) = e_i
      Vector lhs1 = Vector::Zero(n), lhs2 = Vector::Zero(n);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          lhs1(k) += g.counit(j) * g.coproduct(i, j, k);
          lhs2(j) += g.counit(k) * g.coproduct(i, j, k);
        }
      Vector ei = Vector::Zero(n);
      ei(i) = 1.0;
      res = std::max(res, (lhs1 - ei).cwiseAbs().maxCoeff());
      res = std::max(res, (lhs2 - ei).cwiseAbs().maxCoeff());
    }
    push("counit_law", res);
  }

  // Delta multiplicative: Delta(e_i e_j) = Delta(e_i) Delta(e_j)
  {
    double res = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix lhs = Matrix::Zero(n, n);
        for (int k = 0; k < n; ++k)
          if (g.mult(i, j, k) != cplx(0.0)) lhs += g.mult(i, j, k) * cmat[k];
        Matrix rhs = Matrix::Zero(n, n);
        for (int q = 0; q < n; ++q) {
          const Matrix a = cmat[i] * mmat[q] * cmat[j].transpose();
          // rhs(p,q) = sum_{a,c} mmat[p](a,c) * (cmat_i * mmat_q^T * cmat_j^T)(a,c)
          for (int p = 0; p < n; ++p)
            rhs(p, q) = (mmat[p].array() * a.array()).sum();
        }
        res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    push("coproduct_multiplicative", res);
  }

  // Delta(x^*) = Delta(x)^{* (x) *}
  {
    double res = 0.0;
    for (int i = 0; i < n; ++i) {
      Matrix lhs = Matrix::Zero(n, n);
      for (int k = 0; k < n; ++k)
        if (g.involution(i, k) != cplx(0.0)) lhs += g.involution(i, k) * cmat[k];
      const Matrix rhs =
          g.involution.transpose() * cmat[i].conjugate() * g.involution;
      res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    push("coproduct_star", res);
  }

  {
    Matrix lhs = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if (g.unit(i) != cplx(0.0)) lhs += g.unit(i) * cmat[i];
    const Matrix rhs = g.unit * g.unit.transpose();
    push("coproduct_unital", (lhs - rhs).cwiseAbs().maxCoeff());
  }

  // m (S (x) id) Delta = eps(.) 1 = m (id (x) S) Delta
  {
    double res_l = 0.0, res_r = 0.0;
    for (int i = 0; i < n; ++i) {
      Vector out_l = Vector::Zero(n), out_r = Vector::Zero(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cplx c = g.coproduct(i, a, b);
          if (c == cplx(0.0)) continue;
          for (int k = 0; k < n; ++k) {
            if (g.antipode(a, k) != cplx(0.0))
              for (int r = 0; r < n; ++r)
                out_l(r) += c * g.antipode(a, k) * g.mult(k, b, r);
            if (g.antipode(b, k) != cplx(0.0))
              for (int r = 0; r < n; ++r)
                out_r(r) += c * g.antipode(b, k) * g.mult(a, k, r);
          }
        }
      const Vector target = g.counit(i) * g.unit;
      res_l = std::max(res_l, (out_l - target).cwiseAbs().maxCoeff());
      res_r = std::max(res_r, (out_r - target).cwiseAbs().maxCoeff());
    }
    push("antipode_left", res_l);
    push("antipode_right", res_r);
  }

  push("kac_involutive",
       (g.antipode * g.antipode - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
  push("kac_star_compat", (g.involution * g.antipode -
                           g.antipode.conjugate() * g.involution)
                              .cwiseAbs()
                              .maxCoeff());
  push("involution_involutive",
       (g.involution.conjugate() * g.involution - Matrix::Identity(n, n))
           .cwiseAbs()
           .maxCoeff());
  {
    double res = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vector lhs = Vector::Zero(n), rhs = Vector::Zero(n);
        for (int k = 0; k < n; ++k) {
          if (g.mult(i, j, k) != cplx(0.0))
            lhs += std::conj(g.mult(i, j, k)) * g.involution.row(k).transpose();
        }
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const cplx w = g.involution(j, a) * g.involution(i, b);
            if (w == cplx(0.0)) continue;
            for (int r = 0; r < n; ++r) rhs(r) += w * g.mult(a, b, r);
          }
        res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    push("involution_antimultiplicative", res);
  }

  // Cancellation via the Galois maps a(x)b -> Delta(a)(1(x)b) and
  // a(x)b -> (a(x)1)Delta(b); both must be invertible.
  {
    Matrix gal_r = Matrix::Zero(n * n, n * n), gal_l = Matrix::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < n; ++a) {
          for (int k = 0; k < n; ++k) {
            cplx acc_r(0.0), acc_l(0.0);
            for (int b = 0; b < n; ++b) {
              acc_r += g.coproduct(i, a, b) * g.mult(b, j, k);
              acc_l += g.coproduct(j, b, k) * g.mult(i, b, a);
            }
            gal_r(a * n + k, i * n + j) = acc_r;
            gal_l(a * n + k, i * n + j) = acc_l;
          }
        }
    auto rank_deficit = [&](const Matrix& m, double& cond) {
      Eigen::JacobiSVD<Matrix> svd(m);
      const double smax = svd.singularValues()(0);
      const double smin = svd.singularValues()(svd.singularValues().size() - 1);
      cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
      const double cutoff = 1e-8 * std::max(1.0, smax);
      return smin >= cutoff ? 0.0 : cutoff - smin;
    };
    push("cancellation_right", rank_deficit(gal_r, report.galois_cond_right));
    push("cancellation_left", rank_deficit(gal_l, report.galois_cond_left));
  }

  if (g.has_haar()) {
    double res_r = 0.0, res_l = 0.0;
    for (int i = 0; i < n; ++i) {
      const Vector right = cmat[i] * g.haar - g.haar(i) * g.unit;
      const Vector left = cmat[i].transpose() * g.haar - g.haar(i) * g.unit;
      res_r = std::max(res_r, right.cwiseAbs().maxCoeff());
      res_l = std::max(res_l, left.cwiseAbs().maxCoeff());
    }
    push("haar_right_invariance", res_r);
    push("haar_left_invariance", res_l);
    push("haar_normalized", std::abs(cplx(g.unit.transpose() * g.haar) - cplx(1.0)));

    const Matrix gram = g.gram();
    push("haar_gram_hermitian", (gram - gram.adjoint()).cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Matrix> es((gram + gram.adjoint()) / 2.0);
    report.gram_min_eigenvalue = es.eigenvalues().minCoeff();
    push("haar_gram_psd",
         std::max(0.0, -report.gram_min_eigenvalue) / (1.0 + gram.norm()));

    double tracial = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx d(0.0);
        for (int k = 0; k < n; ++k)
          d += (g.mult(i, j, k) - g.mult(j, i, k)) * g.haar(k);
        tracial = std::max(tracial, std::abs(d));
      }
    push("haar_tracial", tracial);
    push("haar_unimodular",
         (g.antipode * g.haar - g.haar).cwiseAbs().maxCoeff());
  }

  return report;
}

FiniteQuantumGroup solve_haar(FiniteQuantumGroup g, double tol) {
  g.check_shapes();
  const int n = g.dim;

  // Stacked right-invariance equations over (i,j):
  //   sum_k coproduct(i,j,k) h_k - h_i unit_j = 0.
  Matrix a(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) a(i * n + j, k) = g.coproduct(i, j, k);
      a(i * n + j, i) -= g.unit(j);
    }

  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv(0));
  const double s_last = sv(n - 1);
  const double s_prev = n >= 2 ? sv(n - 2) : scale;
  if (s_last > 1e-8 * scale)
    throw NonUniqueHaar("no invariant functional: smallest singular value " +
                        std::to_string(s_last));
  if (s_prev < 1e-8 * scale)
    throw NonUniqueHaar("invariant functional is not unique: singular value gap " +
                        std::to_string(s_prev));

  Vector h = svd.matrixV().col(n - 1);
  const cplx at_unit = g.unit.transpose() * h;
  if (std::abs(at_unit) < 1e-10)
    throw NonUniqueHaar("invariant functional vanishes on the unit");
  h /= at_unit;
  g.haar = h;

  // Post hoc: bi-invariance and positivity.
  double left_res = 0.0;
  for (int i = 0; i < n; ++i) {
    Vector lhs = Vector::Zero(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) lhs(k) += g.coproduct(i, j, k) * h(j);
    left_res = std::max(left_res, (lhs - h(i) * g.unit).cwiseAbs().maxCoeff());
  }
  if (left_res > std::max(tol, 1e-8))
    throw NonUniqueHaar("solved functional is not left invariant, residual " +
                        std::to_string(left_res));

  const Matrix gram = g.gram();
  Eigen::SelfAdjointEigenSolver<Matrix> es((gram + gram.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -tol * (1.0 + gram.norm()))
    throw NotAState("invariant functional has a non-PSD Gram matrix, min eig " +
                    std::to_string(es.eigenvalues().minCoeff()));
  return g;
}

FiniteQuantumGroup change_basis(const FiniteQuantumGroup& g, const Matrix& b,
                                const std::string& new_name) {
  g.check_shapes();
  const int n = g.dim;
  if (b.rows() != n || b.cols() != n)
    throw StructuralError("change_basis: matrix has wrong shape");
  Eigen::PartialPivLU<Matrix> lu(b);
  const Matrix binv = lu.inverse();
  if (!binv.allFinite() || (b * binv - Matrix::Identity(n, n)).norm() > 1e-8)
    throw StructuralError("change_basis: matrix is not invertible");

  FiniteQuantumGroup out;
  out.name = new_name.empty() ? g.name + "#rebased" : new_name;
  out.dim = n;
  out.unit = binv.transpose() * g.unit;
  out.counit = b * g.counit;
  out.antipode = b * g.antipode * binv;
  out.involution = b.conjugate() * g.involution * binv;
  out.mult = Tensor3(n, n, n);
  out.coproduct = Tensor3(n, n, n);
  if (g.has_haar()) out.haar = b * g.haar;

  // m'(a,b, c) = sum_{ijk} B(a,i) B(b,j) m(i,j,k) Binv(k,c)
  for (int al = 0; al < n; ++al)
    for (int be = 0; be < n; ++be) {
      Vector prod = Vector::Zero(n);
      for (int i = 0; i < n; ++i) {
        if (b(al, i) == cplx(0.0)) continue;
        for (int j = 0; j < n; ++j) {
          const cplx w = b(al, i) * b(be, j);
          if (w == cplx(0.0)) continue;
          for (int k = 0; k < n; ++k) prod(k) += w * g.mult(i, j, k);
        }
      }
      const Vector coords = binv.transpose() * prod;
      for (int ga = 0; ga < n; ++ga) out.mult(al, be, ga) = coords(ga);
    }

  // c'(a, b, c) = sum_{ijk} B(a,i) c(i,j,k) Binv(j,b) Binv(k,c)
  for (int al = 0; al < n; ++al) {
    Matrix acc = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      if (b(al, i) == cplx(0.0)) continue;
      acc += b(al, i) * coproduct_slice(g, i);
    }
    const Matrix rebased = binv.transpose() * acc * binv;
    for (int be = 0; be < n; ++be)
      for (int ga = 0; ga < n; ++ga) out.coproduct(al, be, ga) = rebased(be, ga);
  }
  return out;
}

}  // namespace ergolab

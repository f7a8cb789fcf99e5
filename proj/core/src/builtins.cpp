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

#include "ergolab/builtins.hpp"

#include <array>
#include <cmath>

namespace ergolab {

FiniteQuantumGroup build_function_algebra(const GroupTable& table) {
  table.validate();
  const int n = table.order();
  FiniteQuantumGroup g;
  g.name = "c:" + table.name();
  g.dim = n;
  g.mult = Tensor3(n, n, n);
  g.coproduct = Tensor3(n, n, n);
  g.unit = Vector::Ones(n);
  g.counit = Vector::Zero(n);
  g.counit(table.identity()) = 1.0;
  g.involution = Matrix::Identity(n, n);
  g.antipode = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    g.mult(a, a, a) = 1.0;
    g.antipode(a, table.inverse(a)) = 1.0;
    for (int b = 0; b < n; ++b) g.coproduct(table.mul(a, b), a, b) = 1.0;
  }
  return g;
}

FiniteQuantumGroup build_group_algebra(const GroupTable& table) {
  table.validate();
  const int n = table.order();
  FiniteQuantumGroup g;
  g.name = "group-algebra:" + table.name();
  g.dim = n;
  g.mult = Tensor3(n, n, n);
  g.coproduct = Tensor3(n, n, n);
  g.unit = Vector::Zero(n);
  g.unit(table.identity()) = 1.0;
  g.counit = Vector::Ones(n);
  g.involution = Matrix::Zero(n, n);
  g.antipode = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    g.coproduct(a, a, a) = 1.0;
    g.antipode(a, table.inverse(a)) = 1.0;
    g.involution(a, table.inverse(a)) = 1.0;
    for (int b = 0; b < n; ++b) g.mult(a, b, table.mul(a, b)) = 1.0;
  }
  return g;
}

namespace {

// Monomial index for x^a y^b z^c.
constexpr int kp_idx(int a, int b, int c) { return a + 2 * b + 4 * c; }

// Adds w * x^a y^b * (1 + x + y - xy)/2 expressed on the monomial basis
// (z^2 expanded), targeting row `slot` of a coefficient vector.
void add_half_u_times(std::array<cplx, 8>& coeffs, int a, int b, cplx w) {
  coeffs[kp_idx(a, b, 0)] += 0.5 * w;
  coeffs[kp_idx(a ^ 1, b, 0)] += 0.5 * w;
  coeffs[kp_idx(a, b ^ 1, 0)] += 0.5 * w;
  coeffs[kp_idx(a ^ 1, b ^ 1, 0)] -= 0.5 * w;
}

}  // namespace

FiniteQuantumGroup build_kac_paljutkin_monomial() {
  const int n = 8;
  FiniteQuantumGroup g;
  g.name = "kac-paljutkin#monomial";
  g.dim = n;
  g.mult = Tensor3(n, n, n);
  g.coproduct = Tensor3(n, n, n);
  g.unit = Vector::Zero(n);
  g.unit(0) = 1.0;
  g.counit = Vector::Ones(n);
  g.involution = Matrix::Zero(n, n);
  g.antipode = Matrix::Zero(n, n);

  // Multiplication by normal ordering: z x = y z, z y = x z,
  // z^2 = (1 + x + y - xy)/2.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f) {
              const int row = kp_idx(a, b, c);
              const int col = kp_idx(d, e, f);
              if (c == 0) {
                g.mult(row, col, kp_idx(a ^ d, b ^ e, f)) += 1.0;
              } else {
                const int aa = a ^ e, bb = b ^ d;  // z past x^d y^e
                if (f == 0) {
                  g.mult(row, col, kp_idx(aa, bb, 1)) += 1.0;
                } else {
                  std::array<cplx, 8> acc{};
                  add_half_u_times(acc, aa, bb, 1.0);
                  for (int k = 0; k < n; ++k) g.mult(row, col, k) += acc[k];
                }
              }
            }

  // Coproduct: group-likes x, y; Delta(x^a y^b z) =
  //   1/2 [ t (x) t + y t (x) t + t (x) x t - y t (x) x t ],  t = x^a y^b z.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int i0 = kp_idx(a, b, 0);
      g.coproduct(i0, kp_idx(a, b, 0), kp_idx(a, b, 0)) = 1.0;
      const int i1 = kp_idx(a, b, 1);
      g.coproduct(i1, kp_idx(a, b, 1), kp_idx(a, b, 1)) += 0.5;
      g.coproduct(i1, kp_idx(a, b ^ 1, 1), kp_idx(a, b, 1)) += 0.5;
      g.coproduct(i1, kp_idx(a, b, 1), kp_idx(a ^ 1, b, 1)) += 0.5;
      g.coproduct(i1, kp_idx(a, b ^ 1, 1), kp_idx(a ^ 1, b, 1)) -= 0.5;
    }

  // Antipode: fixes x^a y^b, swaps the x/y exponents on monomials with z.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      g.antipode(kp_idx(a, b, 0), kp_idx(a, b, 0)) = 1.0;
      g.antipode(kp_idx(a, b, 1), kp_idx(b, a, 1)) = 1.0;
    }

  // Involution: x, y self-adjoint; (x^a y^b z)^* = z^2 z x^a y^b
  //           = (1+x+y-xy)/2 x^b y^a z.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      g.involution(kp_idx(a, b, 0), kp_idx(a, b, 0)) = 1.0;
      std::array<cplx, 8> acc{};
      add_half_u_times(acc, 0, 0, 1.0);
      // multiply (1+x+y-xy)/2 by x^b y^a z on the right: shift exponents
      std::array<cplx, 8> shifted{};
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          const cplx w = acc[kp_idx(p, q, 0)];
          shifted[kp_idx(p ^ b, q ^ a, 1)] += w;
        }
      for (int k = 0; k < n; ++k) g.involution(kp_idx(a, b, 1), k) = shifted[k];
    }

  return g;
}

FiniteQuantumGroup build_kac_paljutkin() {
  const FiniteQuantumGroup mono = build_kac_paljutkin_monomial();
  const int n = 8;

  // Evaluate the four characters and the 2x2 irrep on the monomials.
  // Characters: (x,y,z) -> (1,1,1), (1,1,-1), (-1,-1,i), (-1,-1,-i).
  // 2x2 irrep: x -> diag(1,-1), y -> diag(-1,1), z -> [[0,1],[1,0]].
  Matrix phi = Matrix::Zero(n, n);
  const cplx I(0.0, 1.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int col = kp_idx(a, b, c);
        const double sxy = ((a + b) % 2 == 0) ? 1.0 : -1.0;
        phi(0, col) = 1.0;
        phi(1, col) = (c == 0) ? 1.0 : -1.0;
        phi(2, col) = sxy * ((c == 0) ? cplx(1.0) : I);
        phi(3, col) = sxy * ((c == 0) ? cplx(1.0) : -I);
        const double d1 = (b == 0) ? 1.0 : -1.0;  // diag entry 1 of x^a y^b
        const double d2 = (a == 0) ? 1.0 : -1.0;
        if (c == 0) {
          phi(4, col) = d1;
          phi(7, col) = d2;
        } else {
          phi(5, col) = d1;
          phi(6, col) = d2;
        }
      }

  const Matrix b = phi.inverse().transpose();
  FiniteQuantumGroup block = change_basis(mono, b, "kac-paljutkin");
  return block;
}

std::vector<BuiltinInfo> list_builtins() {
  std::vector<BuiltinInfo> out;
  for (int k = 2; k <= 8; ++k)
    out.push_back({"c:z" + std::to_string(k), k});
  out.push_back({"c:s3", 6});
  for (int k = 2; k <= 8; ++k)
    out.push_back({"group-algebra:z" + std::to_string(k), k});
  out.push_back({"group-algebra:s3", 6});
  out.push_back({"kac-paljutkin", 8});
  return out;
}

FiniteQuantumGroup make_builtin(const std::string& name) {
  auto parse_table = [](const std::string& spec) -> GroupTable {
    if (spec == "s3") return GroupTable::symmetric3();
    if (spec.size() >= 2 && spec[0] == 'z') {
      const int k = std::stoi(spec.substr(1));
      if (k >= 1 && k <= 64) return GroupTable::cyclic(k);
    }
    throw StructuralError("unknown group spec '" + spec + "'");
  };
  FiniteQuantumGroup g;
  if (name == "kac-paljutkin") {
    g = build_kac_paljutkin();
  } else if (name.rfind("c:", 0) == 0) {
    g = build_function_algebra(parse_table(name.substr(2)));
  } else if (name.rfind("group-algebra:", 0) == 0) {
    g = build_group_algebra(parse_table(name.substr(14)));
  } else {
    throw StructuralError("unknown builtin group '" + name + "'");
  }
  return solve_haar(std::move(g));
}

}  // namespace ergolab

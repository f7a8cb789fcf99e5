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

#ifndef ERGOLAB_BUILTINS_HPP
#define ERGOLAB_BUILTINS_HPP

#include <string>
#include <vector>

#include "ergolab/group_table.hpp"
#include "ergolab/quantum_group.hpp"

namespace ergolab {

/// Commutative function algebra C(G): basis of point masses delta_g,
/// pointwise product, Delta(delta_g) = sum_{ab=g} delta_a (x) delta_b.
/// The unit is the sum of all basis elements (unit_index() == -1).
FiniteQuantumGroup build_function_algebra(const GroupTable& table);

/// Cocommutative group algebra C[G]: basis lambda_g, lambda_g lambda_h =
/// lambda_{gh}, Delta(lambda_g) = lambda_g (x) lambda_g.
FiniteQuantumGroup build_group_algebra(const GroupTable& table);

/// The eight-dimensional quantum group C + C + C + C + M_2 in its
/// matrix-unit basis (e1..e4, a11, a12, a21, a22); neither commutative nor
/// cocommutative. Constructed from the three-generator presentation
///   x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz, z^2 = (1+x+y-xy)/2,
///   Delta(z) = (1(x)1 + y(x)1 + 1(x)x - y(x)x)/2 (z(x)z)
/// and rebased through its four characters and the 2x2 irreducible
/// representation, so every structure constant is derived, not transcribed.
FiniteQuantumGroup build_kac_paljutkin();

/// Same algebra in the monomial basis {x^a y^b z^c}; mainly for tests of
/// basis independence.
FiniteQuantumGroup build_kac_paljutkin_monomial();

struct BuiltinInfo {
  std::string name;
  int dim;
};

/// Stable catalog of builtin group names with dimensions.
std::vector<BuiltinInfo> list_builtins();

/// Builds a builtin by catalog name ("c:z5", "group-algebra:s3",
/// "kac-paljutkin", ...) with the Haar state already solved.
/// Throws StructuralError for unknown names.
FiniteQuantumGroup make_builtin(const std::string& name);

}  // namespace ergolab

#endif  // ERGOLAB_BUILTINS_HPP

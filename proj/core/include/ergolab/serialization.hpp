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

#ifndef ERGOLAB_SERIALIZATION_HPP
#define ERGOLAB_SERIALIZATION_HPP

#include <string>

#include "ergolab/corep_block.hpp"
#include "ergolab/quantum_group.hpp"

namespace ergolab {

/// Sparse JSON schema for structure constants:
/// {"name": str, "dim": int, "unit_index": int,
///  "mult": [[i,j,k,re,im]...], "coproduct": [[i,j,k,re,im]...],
///  "counit": [[i,re,im]...], "involution": [[i,k,re,im]...],
///  "antipode": [[i,k,re,im]...]}
/// Omitted entries are zero. When the unit is not a basis element,
/// unit_index is -1 and an explicit "unit": [[i,re,im]...] array follows.
std::string group_to_json(const FiniteQuantumGroup& g);
FiniteQuantumGroup group_from_json(const std::string& text);

FiniteQuantumGroup load_group_file(const std::string& path);
void save_group_file(const FiniteQuantumGroup& g, const std::string& path);

/// Block input JSON: {"label": str, "dim": int, "F": [[re,im]...]} with F
/// dense row-major.
CorepBlock block_from_json(const std::string& text, bool normalize = false);
CorepBlock load_block_file(const std::string& path, bool normalize = false);

}  // namespace ergolab

#endif  // ERGOLAB_SERIALIZATION_HPP

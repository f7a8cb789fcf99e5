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

#ifndef ERGOLAB_GROUP_TABLE_HPP
#define ERGOLAB_GROUP_TABLE_HPP

#include <string>
#include <vector>

namespace ergolab {

/// Multiplication table of a finite group, elements indexed 0..n-1 with the
/// identity at index 0.
class GroupTable {
 public:
  GroupTable() = default;
  GroupTable(std::string name, std::vector<std::vector<int>> table);

  /// Throws std::invalid_argument naming the failing axiom (closure,
  /// identity, associativity or inverses).
  void validate() const;

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const;
  int identity() const { return 0; }
  const std::string& name() const { return name_; }

  /// Smallest subgroup containing `generators`, as a sorted element list.
  std::vector<int> generated_subgroup(const std::vector<int>& generators) const;

  /// All subgroups (each a sorted element list), deterministic order.
  std::vector<std::vector<int>> all_subgroups() const;

  static GroupTable cyclic(int n);
  static GroupTable symmetric3();

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
};

}  // namespace ergolab

#endif  // ERGOLAB_GROUP_TABLE_HPP

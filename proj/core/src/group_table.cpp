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

#include "ergolab/group_table.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace ergolab {

GroupTable::GroupTable(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  validate();
}

void GroupTable::validate() const {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group table: empty");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n)
      throw std::invalid_argument("group table: not square");
    for (int b = 0; b < n; ++b) {
      const int c = table_[a][b];
      if (c < 0 || c >= n)
        throw std::invalid_argument("group table: closure violated");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a)
      throw std::invalid_argument("group table: index 0 is not an identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table: associativity violated");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) has_inverse = true;
    if (!has_inverse)
      throw std::invalid_argument("group table: inverses violated");
  }
}

int GroupTable::inverse(int a) const {
  for (int b = 0; b < order(); ++b)
    if (table_[a][b] == 0) return b;
  throw std::logic_error("group table: no inverse found");
}

std::vector<int> GroupTable::generated_subgroup(
    const std::vector<int>& generators) const {
  std::set<int> h{0};
  for (int g : generators) h.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<int> next = h;
    for (int a : h)
      for (int b : h) next.insert(mul(a, b));
    if (next.size() != h.size()) {
      h = std::move(next);
      grew = true;
    }
  }
  return {h.begin(), h.end()};
}

std::vector<std::vector<int>> GroupTable::all_subgroups() const {
  const int n = order();
  std::set<std::vector<int>> found;
  // Subgroups of a group of this size are generated by at most two
  // elements only for small orders; closing over all subsets is cheap for
  // n <= ~12 and needs no such assumption.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) gens.push_back(i);
    if (gens.size() > 3) continue;  // |G| <= 12: 3 generators always suffice
    found.insert(generated_subgroup(gens));
  }
  return {found.begin(), found.end()};
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group: order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return GroupTable("z" + std::to_string(n), std::move(t));
}

GroupTable GroupTable::symmetric3() {
  // Permutations of {0,1,2}: e, (01), (02), (12), (012), (021).
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  auto compose = [&](int a, int b) {  // (a o b)(x) = a(b(x))
    std::array<int, 3> c{};
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    for (int i = 0; i < 6; ++i)
      if (perms[i] == c) return i;
    throw std::logic_error("s3: composition not found");
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
  return GroupTable("s3", std::move(t));
}

}  // namespace ergolab

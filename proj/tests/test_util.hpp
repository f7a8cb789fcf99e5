#ifndef ERGOLAB_TESTS_TEST_UTIL_HPP
#define ERGOLAB_TESTS_TEST_UTIL_HPP

#include <doctest.h>

#include <random>

#include "ergolab/builtins.hpp"
#include "ergolab/functionals.hpp"
#include "ergolab/quantum_group.hpp"

namespace ergolab::testutil {

inline Vector basis(int n, int i) {
  Vector v = Vector::Zero(n);
  v(i) = 1.0;
  return v;
}

inline Functional random_functional(int n, std::mt19937_64& rng) {
  return Functional{randn_vector(n, rng)};
}

inline Vector random_element(int n, std::mt19937_64& rng) {
  return randn_vector(n, rng);
}

/// Max-norm distance between two coefficient vectors.
inline double dist(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::vector<FiniteQuantumGroup> all_builtin_groups() {
  std::vector<FiniteQuantumGroup> out;
  for (const auto& info : list_builtins()) out.push_back(make_builtin(info.name));
  return out;
}

}  // namespace ergolab::testutil

#endif

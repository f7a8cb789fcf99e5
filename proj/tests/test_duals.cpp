#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace ergolab;
using namespace ergolab::testutil;

TEST_CASE("counit is the convolution unit") {
  std::mt19937_64 rng(11);
  for (const char* name : {"c:z4", "group-algebra:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    const Functional eps = counit_functional(g);
    for (int trial = 0; trial < 20; ++trial) {
      const Functional phi = random_functional(g.dim, rng);
      CHECK(dist(convolve(g, eps, phi).values, phi.values) < 1e-12);
      CHECK(dist(convolve(g, phi, eps).values, phi.values) < 1e-12);
    }
  }
}

TEST_CASE("point masses convolve like the group") {
  const auto g = make_builtin("c:z3");
  const GroupTable z3 = GroupTable::cyclic(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Functional ab =
          convolve(g, ev_functional(g, a), ev_functional(g, b));
      CHECK(dist(ab.values, ev_functional(g, z3.mul(a, b)).values) < 1e-14);
    }
}

TEST_CASE("haar absorbs convolution") {
  std::mt19937_64 rng(12);
  for (const char* name : {"c:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    const Functional h = haar_functional(g);
    for (int trial = 0; trial < 20; ++trial) {
      const Functional phi = random_functional(g.dim, rng);
      const cplx mass = phi.values.transpose() * g.unit;
      CHECK(dist(convolve(g, h, phi).values, Vector(mass * h.values)) < 1e-10);
      CHECK(dist(convolve(g, phi, h).values, Vector(mass * h.values)) < 1e-10);
    }
  }
}

TEST_CASE("convolution is associative") {
  std::mt19937_64 rng(13);
  for (const auto& g : all_builtin_groups()) {
    CAPTURE(g.name);
    for (int trial = 0; trial < 10; ++trial) {
      const Functional a = random_functional(g.dim, rng);
      const Functional b = random_functional(g.dim, rng);
      const Functional c = random_functional(g.dim, rng);
      const Functional left = convolve(g, convolve(g, a, b), c);
      const Functional right = convolve(g, a, convolve(g, b, c));
      CHECK(dist(left.values, right.values) < 1e-12 * (1.0 + left.values.norm()));
    }
  }
}

TEST_CASE("sharp involution fixes counit and haar") {
  for (const char* name : {"c:z5", "group-algebra:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    CHECK(dist(involution_sharp(g, counit_functional(g)).values,
               g.counit) < 1e-12);
    CHECK(dist(involution_sharp(g, haar_functional(g)).values, g.haar) < 1e-12);
  }
}

TEST_CASE("sharp involution inverts point masses") {
  const auto g = make_builtin("c:s3");
  const GroupTable s3 = GroupTable::symmetric3();
  for (int a = 0; a < 6; ++a) {
    const Functional sharped = involution_sharp(g, ev_functional(g, a));
    CHECK(dist(sharped.values, ev_functional(g, s3.inverse(a)).values) < 1e-14);
  }
}

TEST_CASE("sharp involution is involutive and anti-multiplicative") {
  std::mt19937_64 rng(14);
  for (const char* name : {"c:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    for (int trial = 0; trial < 25; ++trial) {
      const Functional a = random_functional(g.dim, rng);
      const Functional b = random_functional(g.dim, rng);
      CHECK(dist(involution_sharp(g, involution_sharp(g, a)).values, a.values) <
            1e-12);
      const Functional lhs = involution_sharp(g, convolve(g, a, b));
      const Functional rhs =
          convolve(g, involution_sharp(g, b), involution_sharp(g, a));
      CHECK(dist(lhs.values, rhs.values) < 1e-12 * (1.0 + lhs.values.norm()));
    }
  }
}

TEST_CASE("check_state flags: haar is a faithful state") {
  for (const auto& g : all_builtin_groups()) {
    CAPTURE(g.name);
    const StateFlags flags = check_state(g, haar_functional(g));
    CHECK(flags.positive);
    CHECK(flags.state);
    CHECK(flags.faithful);
    CHECK(flags.hermitian);
  }
}

TEST_CASE("check_state catches a non-hermitian perturbation") {
  const auto g = make_builtin("c:z4");
  Functional phi = counit_functional(g);
  phi.values(1) += cplx(0.0, 1e-3);  // breaks hermitianity of P
  const StateFlags flags = check_state(g, phi);
  CHECK_FALSE(flags.positive);
  CHECK_FALSE(flags.hermitian);
  CHECK(flags.witness.size() == g.dim);
}

TEST_CASE("uniform two-point mixture is a non-faithful state") {
  const auto g = make_builtin("c:s3");
  Functional phi{(ev_functional(g, 0).values + ev_functional(g, 1).values) / 2.0};
  const StateFlags flags = check_state(g, phi);
  CHECK(flags.state);
  CHECK_FALSE(flags.faithful);
  // rank of P equals the support size
  const Matrix p = positivity_matrix(g, phi);
  Eigen::JacobiSVD<Matrix> svd(p);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-10) ++rank;
  CHECK(rank == 2);
}

TEST_CASE("tau invariance is automatic on Kac builtins") {
  std::mt19937_64 rng(15);
  for (const char* name : {"kac-paljutkin", "c:s3"}) {
    const auto g = make_builtin(name);
    for (int trial = 0; trial < 5; ++trial)
      CHECK(is_tau_invariant(g, random_functional(g.dim, rng)));
  }
}

TEST_CASE("averaged_state fixes idempotent states") {
  const auto g = make_builtin("kac-paljutkin");
  for (long n : {1L, 2L, 7L}) {
    CHECK(dist(averaged_state(g, counit_functional(g), n).values, g.counit) <
          1e-12);
    CHECK(dist(averaged_state(g, haar_functional(g), n).values, g.haar) < 1e-12);
  }
}

TEST_CASE("averaged_state on the two-point walk") {
  const auto g = make_builtin("c:z2");
  const Functional step = ev_functional(g, 1);
  const Functional avg2 = averaged_state(g, step, 2);
  const Vector expected =
      (ev_functional(g, 0).values + ev_functional(g, 1).values) / 2.0;
  CHECK(dist(avg2.values, expected) < 1e-14);
}

TEST_CASE("averaged_state rejects non-positive input") {
  const auto g = make_builtin("c:z3");
  Functional phi = counit_functional(g);
  phi.values(2) -= 2.0;
  CHECK_THROWS_AS(averaged_state(g, phi, 3), NonPositive);
}

TEST_CASE("convolution of states is a state") {
  std::mt19937_64 rng(16);
  for (const char* name : {"c:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    for (int trial = 0; trial < 100; ++trial) {
      const Functional a = random_state(g, rng());
      const Functional b = random_state(g, rng());
      const StateFlags flags = check_state(g, convolve(g, a, b));
      CHECK(flags.state);
    }
  }
}

TEST_CASE("sharp involution is isometric for the gram-dual norm on hermitian functionals") {
  std::mt19937_64 rng(17);
  for (const char* name : {"c:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    for (int trial = 0; trial < 25; ++trial) {
      Functional phi = random_functional(g.dim, rng);
      // hermitize: phi <- (phi + conj o phi o *) / 2
      const Vector conj_star = (g.involution * phi.values).conjugate();
      phi.values = (phi.values + conj_star) / 2.0;
      REQUIRE(check_state(g, phi).hermitian);
      const double before = dual_norm(g, phi);
      const double after = dual_norm(g, involution_sharp(g, phi));
      CHECK(std::abs(before - after) < 1e-10 * (1.0 + before));
    }
  }
}

TEST_CASE("random states are faithful and reproducible") {
  const auto g = make_builtin("kac-paljutkin");
  const Functional a = random_state(g, 7);
  const Functional b = random_state(g, 7);
  CHECK(dist(a.values, b.values) == 0.0);
  CHECK(check_state(g, a).faithful);
  const Functional c = random_state(g, 8);
  CHECK(dist(a.values, c.values) > 1e-3);
}

TEST_CASE("state mini-language") {
  const auto g = make_builtin("c:z4");
  CHECK(dist(parse_state_spec(g, "haar").values, g.haar) == 0.0);
  CHECK(dist(parse_state_spec(g, "counit").values, g.counit) == 0.0);
  CHECK(dist(parse_state_spec(g, "ev:2").values, ev_functional(g, 2).values) ==
        0.0);
  CHECK(dist(parse_state_spec(g, "random:5").values,
             random_state(g, 5).values) == 0.0);
  const Functional uni = parse_state_spec(g, "uniform");
  CHECK(check_state(g, uni).state);
  CHECK(dist(uni.values, g.haar) < 1e-12);  // regular trace = uniform on C(G)
  const Functional vec =
      parse_state_spec(g, "vector:[1,0;0,0;0,0;0,0]");
  CHECK(dist(vec.values, ev_functional(g, 0).values) == 0.0);

  CHECK_THROWS_AS(parse_state_spec(g, "nonsense"), StructuralError);
  const auto kp = make_builtin("kac-paljutkin");
  CHECK_THROWS_AS(parse_state_spec(kp, "ev:0"), StructuralError);
  CHECK(check_state(kp, parse_state_spec(kp, "uniform")).state);
}

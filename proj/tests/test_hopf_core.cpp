#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "ergolab/serialization.hpp"

using namespace ergolab;
using namespace ergolab::testutil;

TEST_CASE("group tables validate and reject") {
  const GroupTable z5 = GroupTable::cyclic(5);
  CHECK(z5.order() == 5);
  CHECK(z5.mul(3, 4) == 2);
  CHECK(z5.inverse(2) == 3);

  const GroupTable s3 = GroupTable::symmetric3();
  CHECK(s3.order() == 6);
  // (01)(02) = (021) vs (02)(01) = (012): noncommutative
  CHECK(s3.mul(1, 2) != s3.mul(2, 1));

  // Broken associativity: tamper one entry of Z3.
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  bad[1][1] = 1;
  CHECK_THROWS_WITH_AS(GroupTable("bad", bad),
                       doctest::Contains("associativity"),
                       std::invalid_argument);

  std::vector<std::vector<int>> no_id = {{1, 0}, {0, 1}};
  CHECK_THROWS_WITH_AS(GroupTable("noid", no_id), doctest::Contains("identity"),
                       std::invalid_argument);
}

TEST_CASE("subgroups of s3") {
  const GroupTable s3 = GroupTable::symmetric3();
  const auto subs = s3.all_subgroups();
  CHECK(subs.size() == 6);  // trivial, three order-2, A3, S3
  std::vector<std::size_t> sizes;
  for (const auto& s : subs) sizes.push_back(s.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("function algebra C(Z2): classical coproduct") {
  const auto g = build_function_algebra(GroupTable::cyclic(2));
  CHECK(g.dim == 2);
  // Delta(delta_0) = d0 (x) d0 + d1 (x) d1
  CHECK(g.coproduct(0, 0, 0) == cplx(1.0));
  CHECK(g.coproduct(0, 1, 1) == cplx(1.0));
  CHECK(g.coproduct(0, 0, 1) == cplx(0.0));
  CHECK(g.coproduct(1, 0, 1) == cplx(1.0));
  CHECK(g.coproduct(1, 1, 0) == cplx(1.0));
  CHECK(g.unit_index() == -1);  // unit is the sum of the point masses
}

TEST_CASE("function algebra C(S3): exact axioms") {
  const auto g = build_function_algebra(GroupTable::symmetric3());
  CHECK(g.dim == 6);
  const AxiomReport report = verify_axioms(g, 1e-14);
  for (const auto& e : report.entries) {
    CAPTURE(e.name);
    CHECK(e.residual < 1e-14);
  }
  CHECK(report.all_pass());
}

TEST_CASE("function algebra C(Z3): antipode is inversion permutation") {
  const auto g = build_function_algebra(GroupTable::cyclic(3));
  Matrix expected = Matrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  CHECK((g.antipode - expected).norm() == 0.0);
}

TEST_CASE("group algebra basics") {
  const auto z2 = build_group_algebra(GroupTable::cyclic(2));
  CHECK(z2.mult(1, 1, 0) == cplx(1.0));  // lambda_1^2 = lambda_0
  CHECK(z2.unit_index() == 0);

  const auto s3 = build_group_algebra(GroupTable::symmetric3());
  // noncommutative
  double comm = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        comm = std::max(comm, std::abs(s3.mult(i, j, k) - s3.mult(j, i, k)));
  CHECK(comm > 0.5);
  // cocommutative
  double cocomm = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        cocomm = std::max(cocomm,
                          std::abs(s3.coproduct(i, j, k) - s3.coproduct(i, k, j)));
  CHECK(cocomm == 0.0);
  CHECK(verify_axioms(s3, 1e-14).all_pass());
}

TEST_CASE("haar on cyclic function algebras is uniform") {
  for (int n : {2, 3, 5, 8}) {
    const auto g = solve_haar(build_function_algebra(GroupTable::cyclic(n)));
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(g.haar(i) - cplx(1.0 / n)) < 1e-12);
  }
}

TEST_CASE("haar on group algebras is the counit dual") {
  for (const char* name : {"group-algebra:z4", "group-algebra:s3"}) {
    const auto g = make_builtin(name);
    CHECK(std::abs(g.haar(0) - cplx(1.0)) < 1e-12);
    for (int i = 1; i < g.dim; ++i) CHECK(std::abs(g.haar(i)) < 1e-12);
  }
}

TEST_CASE("haar solver rejects broken inputs") {
  // Group-like coproduct on C(Z2) admits no invariant functional.
  auto g = build_function_algebra(GroupTable::cyclic(2));
  g.coproduct = Tensor3(2, 2, 2);
  g.coproduct(0, 0, 0) = 1.0;
  g.coproduct(1, 1, 1) = 1.0;
  CHECK_THROWS_AS(solve_haar(g), NonUniqueHaar);
}

TEST_CASE("kac-paljutkin: monomial presentation passes all axioms") {
  const auto g = build_kac_paljutkin_monomial();
  const AxiomReport report = verify_axioms(g, 1e-12);
  for (const auto& e : report.entries) {
    CAPTURE(e.name);
    CHECK(e.residual < 1e-12);
  }
  const auto solved = solve_haar(g);
  // Haar in the monomial basis is evaluation of the coefficient of 1.
  CHECK(std::abs(solved.haar(0) - cplx(1.0)) < 1e-12);
  for (int i = 1; i < 8; ++i) CHECK(std::abs(solved.haar(i)) < 1e-12);
}

TEST_CASE("kac-paljutkin: block basis is a multi-matrix algebra") {
  const auto g = build_kac_paljutkin();
  CHECK(g.dim == 8);
  const AxiomReport report = verify_axioms(g, 1e-12);
  for (const auto& e : report.entries) {
    CAPTURE(e.name);
    CHECK(e.residual < 1e-12);
  }

  // e_i e_j = delta_ij e_i on the four characters.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 8; ++k) {
        const cplx expected = (i == j && j == k) ? cplx(1.0) : cplx(0.0);
        CHECK(std::abs(g.mult(i, j, k) - expected) < 1e-12);
      }
  // Matrix units: a11 a12 = a12, a12 a21 = a11, a12 a11 = 0.
  CHECK(std::abs(g.mult(4, 5, 5) - cplx(1.0)) < 1e-12);
  CHECK(std::abs(g.mult(5, 6, 4) - cplx(1.0)) < 1e-12);
  for (int k = 0; k < 8; ++k) CHECK(std::abs(g.mult(5, 4, k)) < 1e-12);
  // Involution: a12^* = a21.
  CHECK(std::abs(g.involution(5, 6) - cplx(1.0)) < 1e-12);
  CHECK(std::abs(g.involution(4, 4) - cplx(1.0)) < 1e-12);

  // Neither commutative nor cocommutative.
  double comm = 0.0, cocomm = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        comm = std::max(comm, std::abs(g.mult(i, j, k) - g.mult(j, i, k)));
        cocomm = std::max(cocomm,
                          std::abs(g.coproduct(i, j, k) - g.coproduct(i, k, j)));
      }
  CHECK(comm > 0.1);
  CHECK(cocomm > 0.1);

  // Kac: S^2 = id.
  CHECK((g.antipode * g.antipode - Matrix::Identity(8, 8)).norm() < 1e-12);
}

TEST_CASE("kac-paljutkin: haar weights strictly positive on all blocks") {
  const auto g = make_builtin("kac-paljutkin");
  const AxiomReport report = verify_axioms(g, 1e-10);
  CHECK(report.all_pass());
  CHECK(report.find("haar_right_invariance")->residual < 1e-12);
  CHECK(report.gram_min_eigenvalue > 0.0);
  // h = (1/8,1/8,1/8,1/8) on characters and tr/4 on the M2 block.
  for (int i = 0; i < 4; ++i) CHECK(std::abs(g.haar(i) - cplx(0.125)) < 1e-12);
  CHECK(std::abs(g.haar(4) - cplx(0.25)) < 1e-12);
  CHECK(std::abs(g.haar(7) - cplx(0.25)) < 1e-12);
  CHECK(std::abs(g.haar(5)) < 1e-12);
  CHECK(std::abs(g.haar(6)) < 1e-12);
}

TEST_CASE("kac-paljutkin: galois maps well conditioned") {
  const auto g = build_kac_paljutkin();
  const AxiomReport report = verify_axioms(g, 1e-10);
  CHECK(report.galois_cond_left < 1e3);
  CHECK(report.galois_cond_right < 1e3);
  CHECK(report.find("cancellation_left")->residual == 0.0);
  CHECK(report.find("cancellation_right")->residual == 0.0);
}

TEST_CASE("verify_axioms flags corrupted coproducts") {
  // Zeroed coproduct: counit law and cancellation break (coassociativity
  // is vacuously satisfied by the zero tensor).
  auto g = build_function_algebra(GroupTable::cyclic(2));
  g.coproduct = Tensor3(2, 2, 2);
  const AxiomReport zeroed = verify_axioms(g, 1e-10);
  CHECK_FALSE(zeroed.all_pass());
  CHECK(zeroed.find("counit_law")->residual > 0.5);
  CHECK_FALSE(zeroed.find("cancellation_left")->pass);
  CHECK_FALSE(zeroed.worst_failure().empty());

  // A genuine coassociativity failure needs an off-balance perturbation.
  auto h = build_function_algebra(GroupTable::cyclic(2));
  h.coproduct(1, 0, 1) += 0.125;
  const AxiomReport perturbed = verify_axioms(h, 1e-10);
  CHECK(perturbed.find("coassociativity")->residual > 1e-3);
  CHECK_FALSE(perturbed.find("coassociativity")->pass);
}

TEST_CASE("structural errors precede residuals") {
  auto g = build_function_algebra(GroupTable::cyclic(3));
  g.counit = Vector::Zero(2);  // wrong length
  CHECK_THROWS_AS(verify_axioms(g), StructuralError);
}

TEST_CASE("bialgebra duality pairing of C(G) and C[G]") {
  for (const GroupTable& table :
       {GroupTable::cyclic(4), GroupTable::symmetric3()}) {
    const auto fun = build_function_algebra(table);
    const auto grp = build_group_algebra(table);
    const int n = table.order();
    double residual = 0.0;
    // <Delta delta_g, l_a (x) l_b> = <delta_g, l_a l_b>
    for (int g = 0; g < n; ++g)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const cplx lhs = fun.coproduct(g, a, b);
          const cplx rhs = grp.mult(a, b, g);
          residual = std::max(residual, std::abs(lhs - rhs));
        }
    // <delta_a delta_b, l_c> = <delta_a (x) delta_b, Delta l_c>
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const cplx lhs = fun.mult(a, b, c);
          const cplx rhs = grp.coproduct(c, a, b);
          residual = std::max(residual, std::abs(lhs - rhs));
        }
    CHECK(residual < 1e-12);
  }
}

TEST_CASE("haar is tracial and unimodular on every builtin") {
  std::mt19937_64 rng(77);
  for (const auto& g : all_builtin_groups()) {
    CAPTURE(g.name);
    const AxiomReport report = verify_axioms(g, 1e-10);
    CHECK(report.all_pass());
    CHECK(report.find("haar_unimodular")->residual < 1e-10);
    for (int trial = 0; trial < 100; ++trial) {
      const Vector x = random_element(g.dim, rng);
      const Vector y = random_element(g.dim, rng);
      const cplx xy = g.haar_of(g.multiply(x, y));
      const cplx yx = g.haar_of(g.multiply(y, x));
      CHECK(std::abs(xy - yx) < 1e-10 * (1.0 + std::abs(xy)));
    }
  }
}

TEST_CASE("axioms survive a random change of basis") {
  std::mt19937_64 rng(5);
  const auto g = make_builtin("c:s3");
  const Matrix b =
      Matrix::Identity(6, 6) + 0.3 * randn_matrix(6, 6, rng);
  const auto rebased = change_basis(g, b);
  const AxiomReport report = verify_axioms(rebased, 1e-8);
  CHECK(report.all_pass());
  // Haar values transform covariantly: h'(f_a) = sum_i B(a,i) h(e_i).
  CHECK(dist(rebased.haar, b * g.haar) < 1e-12);
}

TEST_CASE("json round trip preserves structure constants") {
  const auto g = make_builtin("kac-paljutkin");
  const std::string text = group_to_json(g);
  const auto back = group_from_json(text);
  CHECK(back.dim == g.dim);
  CHECK(back.name == g.name);
  double residual = (back.unit - g.unit).cwiseAbs().maxCoeff();
  residual = std::max(residual, (back.counit - g.counit).cwiseAbs().maxCoeff());
  residual =
      std::max(residual, (back.involution - g.involution).cwiseAbs().maxCoeff());
  residual = std::max(residual, (back.antipode - g.antipode).cwiseAbs().maxCoeff());
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        residual = std::max(residual,
                            std::abs(back.mult(i, j, k) - g.mult(i, j, k)));
        residual = std::max(
            residual, std::abs(back.coproduct(i, j, k) - g.coproduct(i, j, k)));
      }
  CHECK(residual == 0.0);
  CHECK(verify_axioms(back, 1e-12).all_pass());

  // Unit-as-basis-vector groups round trip through unit_index.
  const auto z3 = make_builtin("group-algebra:z3");
  const auto z3_back = group_from_json(group_to_json(z3));
  CHECK(z3_back.unit_index() == 0);
}

TEST_CASE("json rejects malformed counit normalization") {
  auto g = build_function_algebra(GroupTable::cyclic(2));
  g.counit *= 2.0;  // eps(1) = 2
  CHECK_THROWS_WITH_AS(group_from_json(group_to_json(g)),
                       doctest::Contains("counit"), StructuralError);
}

TEST_CASE("builtin catalog is stable") {
  const auto a = list_builtins();
  const auto b = list_builtins();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].dim == b[i].dim);
  }
  bool has_kp = false, has_z5 = false;
  for (const auto& info : a) {
    if (info.name == "kac-paljutkin") {
      has_kp = true;
      CHECK(info.dim == 8);
    }
    if (info.name == "c:z5") {
      has_z5 = true;
      CHECK(info.dim == 5);
    }
  }
  CHECK(has_kp);
  CHECK(has_z5);
}

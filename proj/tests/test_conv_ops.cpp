#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "ergolab/certificates.hpp"
#include "ergolab/conv_ops.hpp"
#include "ergolab/wedderburn.hpp"

using namespace ergolab;
using namespace ergolab::testutil;

namespace {

Functional classical_walk(const FiniteQuantumGroup& g,
                          const std::vector<double>& weights) {
  Vector v = Vector::Zero(g.dim);
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) v(i) = weights[i];
  return Functional{v};
}

}  // namespace

TEST_CASE("T_eps is the identity, T_h is rank one") {
  for (const char* name : {"c:s3", "group-algebra:z4", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    CHECK((right_conv_operator(g, counit_functional(g)).matrix -
           Matrix::Identity(g.dim, g.dim))
              .norm() < 1e-12);
    const Matrix th = right_conv_operator(g, haar_functional(g)).matrix;
    const Matrix rank_one = g.unit * g.haar.transpose();
    CHECK((th - rank_one).norm() < 1e-12);
    CHECK((left_conv_operator(g, counit_functional(g)).matrix -
           Matrix::Identity(g.dim, g.dim))
              .norm() < 1e-12);
  }
}

TEST_CASE("classical reduction: T_phi is the circulant walk matrix") {
  const int n = 5;
  const auto g = make_builtin("c:z5");
  std::mt19937_64 rng(3);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& w : p) {
    w = std::uniform_real_distribution<>(0.0, 1.0)(rng);
    total += w;
  }
  for (auto& w : p) w /= total;
  const Matrix t = right_conv_operator(g, classical_walk(g, p)).matrix;
  for (int a = 0; a < n; ++a)
    for (int gidx = 0; gidx < n; ++gidx)
      CHECK(std::abs(t(a, gidx) - p[(gidx - a + n) % n]) < 1e-14);
}

TEST_CASE("operator calculus: homomorphism, anti-homomorphism, commutation") {
  std::mt19937_64 rng(4);
  for (const char* name : {"c:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    for (int trial = 0; trial < 100; ++trial) {
      const Functional a = random_functional(g.dim, rng);
      const Functional b = random_functional(g.dim, rng);
      const Matrix ta = right_conv_operator(g, a).matrix;
      const Matrix tb = right_conv_operator(g, b).matrix;
      const Matrix la = left_conv_operator(g, a).matrix;
      const Matrix lb = left_conv_operator(g, b).matrix;
      const Functional ab = convolve(g, a, b);
      CHECK((right_conv_operator(g, ab).matrix - ta * tb).norm() <
            1e-12 * (1.0 + ta.norm() * tb.norm()));
      CHECK((left_conv_operator(g, ab).matrix - lb * la).norm() <
            1e-12 * (1.0 + la.norm() * lb.norm()));
      CHECK((ta * lb - lb * ta).norm() < 1e-12 * (1.0 + ta.norm() * lb.norm()));
    }
  }
}

TEST_CASE("states give L2 contractions preserving haar") {
  std::mt19937_64 rng(5);
  for (const char* name : {"c:s3", "kac-paljutkin"}) {
    const auto g = make_builtin(name);
    const Matrix gram = g.gram();
    const Matrix gs = hermitian_sqrt(gram);
    const Matrix gsi = hermitian_power(gram, -0.5);
    for (int trial = 0; trial < 20; ++trial) {
      const Functional phi = random_state(g, rng());
      const Matrix t = right_conv_operator(g, phi).matrix;
      CHECK(gram_op_norm(t, gs, gsi) <= 1.0 + 1e-10);
      // h o T_phi = phi(1) h
      CHECK(dist(Vector(t.transpose() * g.haar), g.haar) < 1e-12);
      // unital
      CHECK(dist(Vector(t * g.unit), g.unit) < 1e-12);
    }
  }
}

TEST_CASE("operator norm is dominated by the dual-norm distance") {
  std::mt19937_64 rng(6);
  const auto g = make_builtin("kac-paljutkin");
  const Matrix gram = g.gram();
  const Matrix gs = hermitian_sqrt(gram);
  const Matrix gsi = hermitian_power(gram, -0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const Functional a = random_functional(g.dim, rng);
    const Functional b = random_functional(g.dim, rng);
    const Matrix diff = right_conv_operator(g, a).matrix -
                        right_conv_operator(g, b).matrix;
    const double lhs = gram_op_norm(diff, gs, gsi);
    const double rhs = dual_norm(g, Functional{a.values - b.values});
    CHECK(lhs <= rhs * (1.0 + 1e-8) + 1e-12);
  }
}

TEST_CASE("cesaro means: base cases") {
  const auto g = make_builtin("c:z2");
  const Matrix id = Matrix::Identity(2, 2);
  Matrix flip(2, 2);
  flip << 0, 1, 1, 0;
  CHECK((cesaro_mean(flip, 1) - flip).norm() == 0.0);
  CHECK((cesaro_mean(id, 1000) - id).norm() < 1e-12);
  Matrix uniform(2, 2);
  uniform << 0.5, 0.5, 0.5, 0.5;
  CHECK((cesaro_mean(flip, 2) - uniform).norm() < 1e-14);
}

TEST_CASE("fixed point projection: identities and the ergodic case") {
  const auto g = make_builtin("kac-paljutkin");
  const Matrix th = right_conv_operator(g, haar_functional(g)).matrix;
  const auto fp_h = fixed_point_projection(th);
  CHECK((fp_h.projection - th).norm() < 1e-10);
  CHECK(fp_h.fixed_dim == 1);

  const Matrix id = Matrix::Identity(g.dim, g.dim);
  const auto fp_id = fixed_point_projection(id);
  CHECK((fp_id.projection - id).norm() < 1e-12);
  CHECK(fp_id.fixed_dim == g.dim);

  // Faithful random state: F = unit * haar^T, cross-checked by Cesàro.
  const Functional phi = random_state(g, 21);
  const Matrix t = right_conv_operator(g, phi).matrix;
  const auto fp = fixed_point_projection(t);
  CHECK(fp.fixed_dim == 1);
  const Matrix expected = g.unit * g.haar.transpose();
  CHECK((fp.projection - expected).norm() < 1e-9);
  CHECK((cesaro_mean(t, 10000) - fp.projection).norm() < 1e-2);
  // idempotent and intertwining
  CHECK((fp.projection * fp.projection - fp.projection).norm() < 1e-10);
  CHECK((t * fp.projection - fp.projection).norm() < 1e-10);
  CHECK((fp.projection * t - fp.projection).norm() < 1e-10);
}

TEST_CASE("fixed point projection rejects expansions") {
  Matrix expanding(2, 2);
  expanding << 1.5, 0, 0, 0.5;
  CHECK_THROWS_AS(fixed_point_projection(expanding), NotAKernel);
}

TEST_CASE("ergodicity of classical walks") {
  // Lazy faithful walk on Z5.
  const auto z5 = make_builtin("c:z5");
  const auto lazy = check_ergodicity(
      z5, classical_walk(z5, {0.4, 0.3, 0.1, 0.1, 0.1}));
  CHECK(lazy.ergodic);
  const Matrix uniform = z5.unit * z5.haar.transpose();
  CHECK((lazy.fixed.projection - uniform).norm() < 1e-10);

  // Pure 4-cycle step: ergodic (one-dimensional fixed space) although the
  // iterates themselves oscillate.
  const auto z4 = make_builtin("c:z4");
  const auto cyc = check_ergodicity(z4, ev_functional(z4, 1));
  CHECK(cyc.ergodic);

  // Supported on a proper subgroup of S3: fixed space = cosets.
  const auto s3g = make_builtin("c:s3");
  const GroupTable s3 = GroupTable::symmetric3();
  const int transposition = 1;
  Functional sub{(ev_functional(s3g, 0).values +
                  ev_functional(s3g, transposition).values) /
                 2.0};
  const auto subrep = check_ergodicity(s3g, sub);
  CHECK_FALSE(subrep.ergodic);
  const auto h = s3.generated_subgroup({transposition});
  CHECK(subrep.fixed.fixed_dim == 6 / static_cast<int>(h.size()));
}

TEST_CASE("cesaro limit functional: ergodic and subgroup cases") {
  const auto kp = make_builtin("kac-paljutkin");
  const CesaroLimit faithful = cesaro_limit_functional(kp, random_state(kp, 31));
  CHECK(dist(faithful.rho.values, kp.haar) < 1e-9);
  CHECK(faithful.idempotent_residual < 1e-10);
  CHECK(faithful.operator_residual < 1e-8);

  // ev_g for g in the order-3 subgroup of S3 averages to the subgroup
  // uniform measure (classical Ito-Kawada limit).
  const auto s3g = make_builtin("c:s3");
  const GroupTable s3 = GroupTable::symmetric3();
  int three_cycle = -1;
  for (int a = 1; a < 6; ++a)
    if (s3.generated_subgroup({a}).size() == 3) three_cycle = a;
  REQUIRE(three_cycle >= 0);
  const CesaroLimit cyc =
      cesaro_limit_functional(s3g, ev_functional(s3g, three_cycle));
  Vector expected = Vector::Zero(6);
  for (int a : s3.generated_subgroup({three_cycle})) expected(a) = 1.0 / 3.0;
  CHECK(dist(cyc.rho.values, expected) < 1e-10);
  CHECK(cyc.idempotent_residual < 1e-10);
}

TEST_CASE("iterate orbits") {
  std::mt19937_64 rng(8);
  const auto kp = make_builtin("kac-paljutkin");
  const Matrix th = right_conv_operator(kp, haar_functional(kp)).matrix;
  const Vector x = random_element(kp.dim, rng);
  const auto orbit = iterate_orbit(th, x, 5);
  for (const auto& v : orbit)
    CHECK(dist(v, Vector(kp.haar_of(x) * kp.unit)) < 1e-12);

  // Alternating orbit on C(Z2).
  const auto z2 = make_builtin("c:z2");
  const Matrix flip = right_conv_operator(z2, ev_functional(z2, 1)).matrix;
  Vector signv(2);
  signv << 1.0, -1.0;
  const auto alt = iterate_orbit(flip, signv, 6);
  CHECK(dist(alt[0], Vector(-signv)) < 1e-14);
  CHECK(dist(alt[1], signv) < 1e-14);
  CHECK(dist(alt[5], Vector(-signv)) < 1e-14);

  // Symmetric faithful walk on C(Z5): geometric convergence to h(x) 1.
  const auto z5 = make_builtin("c:z5");
  const Functional sym = classical_walk(z5, {0.4, 0.3, 0.0, 0.0, 0.3});
  const Matrix t = right_conv_operator(z5, sym).matrix;
  const Vector y = random_element(5, rng);
  const auto run = iterate_orbit(t, y, 400);
  const Vector target = z5.haar_of(y) * z5.unit;
  CHECK(dist(run.back(), target) < 1e-8);
}

TEST_CASE("stein even iterates") {
  // Period-two walk: T^2 = id, the even iterates are constant.
  const auto z2 = make_builtin("c:z2");
  std::mt19937_64 rng(9);
  const Vector x = random_element(2, rng);
  const auto stein = stein_even_iterates(z2, ev_functional(z2, 1), x, 8);
  CHECK(dist(stein.limit, x) < 1e-12);
  for (const auto& v : stein.iterates) CHECK(dist(v, x) < 1e-12);

  // Symmetric walk on C(Z4): limit is the projection onto the parity
  // classes, a two-dimensional fixed space of T^2.
  const auto z4 = make_builtin("c:z4");
  const Functional hop = classical_walk(z4, {0.0, 0.5, 0.0, 0.5});
  const Matrix t = right_conv_operator(z4, hop).matrix;
  CHECK(fixed_point_projection(t * t).fixed_dim == 2);
  const Vector y = random_element(4, rng);
  const auto stein4 = stein_even_iterates(z4, hop, y, 64);
  CHECK(dist(stein4.iterates.back(), stein4.limit) < 1e-12);

  // Asymmetric states are rejected.
  const auto z3 = make_builtin("c:z3");
  CHECK_THROWS_AS(stein_even_iterates(z3, ev_functional(z3, 1), x, 4),
                  NotSymmetric);
}

TEST_CASE("stein rate matches the subdominant eigenvalue on kac-paljutkin") {
  const auto kp = make_builtin("kac-paljutkin");
  // Symmetrized faithful state.
  const Functional raw = random_state(kp, 41);
  const Functional sym{(raw.values + involution_sharp(kp, raw).values) / 2.0};
  REQUIRE(check_state(kp, sym).faithful);
  std::mt19937_64 rng(10);
  const Vector x = random_element(kp.dim, rng);
  const auto stein = stein_even_iterates(kp, sym, x, 50);
  CHECK(dist(stein.limit, Vector(kp.haar_of(x) * kp.unit)) < 1e-8);

  // Observed decay ratio vs. |lambda_2(T^2)| within 10%.
  std::vector<double> residuals;
  for (const auto& v : stein.iterates)
    residuals.push_back(dist(v, stein.limit));
  double observed = 0.0;
  int used = 0;
  for (std::size_t k = 0; k + 1 < residuals.size(); ++k)
    if (residuals[k] > 1e-9 && residuals[k + 1] > 1e-11) {
      observed += residuals[k + 1] / residuals[k];
      ++used;
    }
  REQUIRE(used > 3);
  observed /= used;
  CHECK(std::abs(observed - stein.rate) < 0.1 * stein.rate);
}

TEST_CASE("block structure of the builtins") {
  const auto kp = make_builtin("kac-paljutkin");
  const BlockStructure blocks = detect_blocks(kp);
  REQUIRE(blocks.central_idempotents.size() == 5);
  std::vector<int> dims = blocks.block_matrix_dims;
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(blocks.counit_block >= 0);
  CHECK(blocks.basis_aligned);
  Vector sum = Vector::Zero(8);
  for (const auto& z : blocks.central_idempotents) sum += z;
  CHECK(dist(sum, kp.unit) < 1e-8);

  const auto cs3 = make_builtin("c:s3");
  CHECK(detect_blocks(cs3).central_idempotents.size() == 6);
  const auto gs3 = make_builtin("group-algebra:s3");
  auto gdims = detect_blocks(gs3).block_matrix_dims;
  std::sort(gdims.begin(), gdims.end());
  CHECK(gdims == std::vector<int>{1, 1, 2});
}

TEST_CASE("hopf quotients of kac-paljutkin") {
  const auto kp = make_builtin("kac-paljutkin");
  const auto quotients = enumerate_hopf_quotients(kp);
  // At least: trivial group, the whole group, and the abelianization.
  CHECK(quotients.size() >= 3);
  bool found_trivial = false, found_full = false;
  for (const auto& q : quotients) {
    CAPTURE(q.blocks.size());
    // Every pulled-back Haar is an idempotent state on KP.
    const Functional rho{q.pulled_back_haar};
    CHECK(check_state(kp, rho).state);
    CHECK(dist(convolve(kp, rho, rho).values, rho.values) < 1e-8);
    if (q.quotient.dim == 1) {
      found_trivial = true;
      CHECK(dist(rho.values, kp.counit) < 1e-8);
    }
    if (q.quotient.dim == 8) {
      found_full = true;
      CHECK(dist(rho.values, kp.haar) < 1e-8);
    }
  }
  CHECK(found_trivial);
  CHECK(found_full);
}

TEST_CASE("idempotent scan finds an atypical idempotent state") {
  const auto kp = make_builtin("kac-paljutkin");
  const IdempotentScan scan = scan_idempotents(kp, 60, 2026);
  CHECK(scan.items.size() >= 2);
  int atypical = 0;
  for (const auto& item : scan.items) {
    CHECK(item.idempotent_residual < 1e-8);
    if (!item.matches_subgroup_haar) ++atypical;
  }
  CHECK(atypical >= 1);
}

TEST_CASE("au certificates") {
  const auto kp = make_builtin("kac-paljutkin");
  std::mt19937_64 rng(11);
  const Vector x = random_element(kp.dim, rng);

  // Cesàro means of a generic faithful state: norm convergence, e = 1.
  {
    const Functional phi = random_state(kp, 51);
    const Matrix t = right_conv_operator(kp, phi).matrix;
    const Matrix f = fixed_point_projection(t).projection;
    std::vector<Vector> seq;
    Matrix acc = Matrix::Zero(kp.dim, kp.dim);
    Matrix power = Matrix::Identity(kp.dim, kp.dim);
    for (long n = 1; n <= 20000; ++n) {
      power = t * power;
      acc += power;
      if (n % 1000 == 0) seq.push_back((acc / double(n)) * x);
    }
    const Certificate cert = au_certificate(kp, seq, f * x, 0.1, 1e-3);
    CHECK(cert.trivial_projection);
    CHECK(cert.h_complement == 0.0);
    CHECK(cert.tails.back() < 1e-3);
    CHECK(std::is_sorted(cert.tails.rbegin(), cert.tails.rend()));
  }

  // A near-invariant state reaches the tight tail threshold at n = 1e4.
  {
    const Functional phi = mix_with_haar(kp, random_state(kp, 52), 0.996);
    const Matrix t = right_conv_operator(kp, phi).matrix;
    const Matrix f = fixed_point_projection(t).projection;
    std::vector<Vector> seq;
    Matrix acc = Matrix::Zero(kp.dim, kp.dim);
    Matrix power = Matrix::Identity(kp.dim, kp.dim);
    for (long n = 1; n <= 10000; ++n) {
      power = t * power;
      acc += power;
      if (n % 500 == 0) seq.push_back((acc / double(n)) * x);
    }
    const Certificate cert = au_certificate(kp, seq, f * x, 0.1, 1e-6);
    CHECK(cert.trivial_projection);
    CHECK(cert.tails.back() < 1e-6);
  }

  // Constant sequence: zero tails.
  {
    std::vector<Vector> seq(10, x);
    const Certificate cert = au_certificate(kp, seq, x, 0.01, 1e-12);
    CHECK(cert.trivial_projection);
    for (double t : cert.tails) CHECK(t == 0.0);
  }
}

TEST_CASE("au certificate fails on the alternating sequence") {
  const auto z2 = make_builtin("c:z2");
  Vector signv(2);
  signv << 1.0, -1.0;
  std::vector<Vector> seq;
  for (int m = 0; m < 64; ++m) seq.push_back(m % 2 == 0 ? signv : Vector(-signv));
  CHECK_THROWS_AS(au_certificate(z2, seq, Vector(Vector::Zero(2)), 0.49, 1e-6),
                  CertificateFailed);
}

TEST_CASE("au certificate finds a corner projection when one exists") {
  // On C(Z2), a sequence converging on one point mass but alternating on
  // the other is certified by e = delta_0 once epsilon > 1/2.
  const auto z2 = make_builtin("c:z2");
  std::vector<Vector> seq;
  for (int m = 1; m <= 64; ++m) {
    Vector v(2);
    v << std::pow(0.5, m), (m % 2 ? 1.0 : -1.0);
    seq.push_back(v);
  }
  const Certificate cert =
      au_certificate(z2, seq, Vector(Vector::Zero(2)), 0.6, 1e-6);
  CHECK_FALSE(cert.trivial_projection);
  CHECK(cert.h_complement == doctest::Approx(0.5));
  CHECK(cert.projection_rank == 1);
  CHECK(cert.tails.back() < 1e-6);
  // And it still fails when epsilon forbids the corner.
  CHECK_THROWS_AS(au_certificate(z2, seq, Vector(Vector::Zero(2)), 0.4, 1e-6),
                  CertificateFailed);
}

TEST_CASE("cesaro mean decay is 1/n for faithful states") {
  const auto kp = make_builtin("kac-paljutkin");
  const Functional phi = mix_with_haar(kp, random_state(kp, 61), 0.25);
  const Matrix t = right_conv_operator(kp, phi).matrix;
  const Matrix f = fixed_point_projection(t).projection;
  std::vector<double> ns = {10, 100, 1000, 10000};
  std::vector<double> residuals;
  for (double n : ns)
    residuals.push_back((cesaro_mean(t, static_cast<long>(n)) - f).norm());
  for (std::size_t i = 1; i < residuals.size(); ++i)
    CHECK(residuals[i] < residuals[i - 1]);
  const double slope = loglog_slope(ns, residuals);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.2));
}

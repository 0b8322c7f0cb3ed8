#include "jordan/algebra.hpp"

#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace jordan;
using polyalg::rat;
using testsupport::random_in_cone;
using testsupport::random_vector;

namespace {

// Oracle for the rank-2 product, straight from the bilinear formula
// (x,u)(y,v) = (xy + <u,v>, xv + yu).
Eigen::VectorXd lorentz_oracle(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int w = static_cast<int>(x.size()) - 1;
  Eigen::VectorXd z(x.size());
  z(0) = x(0) * y(0) + x.tail(w).dot(y.tail(w));
  z.tail(w) = x(0) * y.tail(w) + y(0) * x.tail(w);
  return z;
}

// Oracle for the symmetric-matrix product: unpack, multiply, symmetrize.
Eigen::VectorXd sym_oracle(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int k) {
  Eigen::MatrixXd xm = sym_unpack(x, k);
  Eigen::MatrixXd ym = sym_unpack(y, k);
  return sym_pack(0.5 * (xm * ym + ym * xm));
}

Eigen::VectorXd unit(int n, int j) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(j) = 1.0;
  return e;
}

double ipow(double b, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

const std::vector<Algebra>& test_algebras() {
  static const std::vector<Algebra> algs = {
      Algebra::rank1_product(3), Algebra::lorentz(3), Algebra::lorentz(5),
      Algebra::sym_matrices(2), Algebra::sym_matrices(3),
      Algebra::direct_sum({Algebra::lorentz(3), Algebra::rank1_product(2),
                           Algebra::sym_matrices(2)})};
  return algs;
}

}  // namespace

TEST_CASE("descriptor bookkeeping") {
  Algebra lo = Algebra::lorentz(4);
  CHECK(lo.dim() == 4);
  CHECK(lo.rank() == 2);
  CHECK(lo.factors()[0].peirce_dim() == 2);
  CHECK(lo.m() == rat(2));

  Algebra r1 = Algebra::rank1_product(3);
  CHECK(r1.dim() == 3);
  CHECK(r1.rank() == 3);
  CHECK(r1.factors()[0].peirce_dim() == 0);
  CHECK(r1.m() == rat(1));

  Algebra sy = Algebra::sym_matrices(3);
  CHECK(sy.dim() == 6);
  CHECK(sy.rank() == 3);
  CHECK(sy.factors()[0].peirce_dim() == 1);
  CHECK(sy.m() == rat(2));

  Algebra ds = Algebra::direct_sum({Algebra::lorentz(3), Algebra::rank1_product(2)});
  CHECK(ds.dim() == 5);
  CHECK(ds.rank() == 4);
  CHECK(ds.m() == rat(5, 4));
  CHECK(ds.factors().size() == 2);
  CHECK(ds.factor_offset(1) == 3);
  CHECK(ds.kind() == Kind::DirectSum);

  CHECK(Algebra::lorentz(3).simple());
  CHECK_FALSE(Algebra::lorentz(2).simple());
  CHECK(Algebra::rank1_product(1).simple());
  CHECK_FALSE(Algebra::rank1_product(3).simple());
  CHECK(Algebra::sym_matrices(2).simple());
  CHECK_FALSE(ds.simple());
}

TEST_CASE("identity element") {
  Eigen::VectorXd e4 = identity(Algebra::lorentz(4));
  CHECK(e4 == Eigen::Vector4d(1, 0, 0, 0));
  CHECK(identity(Algebra::rank1_product(3)) == Eigen::Vector3d(1, 1, 1));
  CHECK(sym_unpack(identity(Algebra::sym_matrices(3)), 3) ==
        Eigen::MatrixXd::Identity(3, 3));

  for (const Algebra& alg : test_algebras()) {
    Eigen::VectorXd e = identity(alg);
    CHECK(trace(alg, e) == doctest::Approx(alg.rank()).epsilon(1e-14));
    CHECK(det(alg, e) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(in_cone(alg, e));
  }
}

TEST_CASE("rank-1 products are componentwise") {
  Algebra alg = Algebra::rank1_product(3);
  Eigen::Vector3d x(2, 3, 4), y(5, 7, 11);
  CHECK(product(alg, x, y) == Eigen::Vector3d(10, 21, 44));
  CHECK(det(alg, x) == 24.0);
  CHECK(trace(alg, x) == 9.0);
}

TEST_CASE("Lorentz product matches the bilinear formula") {
  std::mt19937 rng(101);
  Algebra alg = Algebra::lorentz(4);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd x = random_vector(rng, 4), y = random_vector(rng, 4);
    CHECK((product(alg, x, y) - lorentz_oracle(x, y)).norm() <= 1e-14);
    CHECK((product(alg, identity(alg), x) - x).norm() == 0.0);
  }

  // Frozen value from the oracle: (2,(1,0)) (3,(0,1)) has scalar part
  // 2*3 + <(1,0),(0,1)> = 6 and vector part 2*(0,1) + 3*(1,0) = (3,2).
  Algebra l3 = Algebra::lorentz(3);
  Eigen::Vector3d a(2, 1, 0), b(3, 0, 1);
  CHECK(lorentz_oracle(a, b) == Eigen::Vector3d(6, 3, 2));
  CHECK(product(l3, a, b) == Eigen::Vector3d(6, 3, 2));

  CHECK(det(Algebra::lorentz(4), Eigen::Vector4d(2, 1, 0, 0)) == 3.0);
  CHECK(trace(Algebra::lorentz(4), Eigen::Vector4d(2, 1, 0, 0)) == 4.0);
}

TEST_CASE("symmetric-matrix product matches the matrix oracle") {
  std::mt19937 rng(102);
  for (int k : {2, 3, 4}) {
    Algebra alg = Algebra::sym_matrices(k);
    for (int t = 0; t < 30; ++t) {
      Eigen::VectorXd x = random_vector(rng, alg.dim());
      Eigen::VectorXd y = random_vector(rng, alg.dim());
      CHECK((product(alg, x, y) - sym_oracle(x, y, k)).norm() <= 1e-13);

      Eigen::MatrixXd xm = sym_unpack(x, k);
      CHECK(trace(alg, x) == doctest::Approx(xm.trace()).epsilon(1e-12));
      CHECK(det(alg, x) == doctest::Approx(xm.determinant()).epsilon(1e-10));

      // Packed coordinates make the trace form the plain dot product.
      Eigen::MatrixXd ym = sym_unpack(y, k);
      CHECK(inner(alg, x, y) == doctest::Approx((xm * ym).trace()).epsilon(1e-12));
      CHECK(inner(alg, x, y) == x.dot(y));
    }
  }

  Algebra s2 = Algebra::sym_matrices(2);
  Eigen::VectorXd d12 = sym_pack(Eigen::Vector2d(1, 2).asDiagonal().toDenseMatrix());
  CHECK(sym_unpack(product(s2, d12, d12), 2) ==
        Eigen::Vector2d(1, 4).asDiagonal().toDenseMatrix());
}

TEST_CASE("trace form: tr(x y) and associativity") {
  std::mt19937 rng(103);
  for (const Algebra& alg : test_algebras()) {
    for (int t = 0; t < 20; ++t) {
      Eigen::VectorXd x = random_vector(rng, alg.dim());
      Eigen::VectorXd y = random_vector(rng, alg.dim());
      Eigen::VectorXd z = random_vector(rng, alg.dim());
      CHECK(inner(alg, x, y) ==
            doctest::Approx(trace(alg, product(alg, x, y))).epsilon(1e-12));
      double lhs = inner(alg, product(alg, x, y), z);
      double rhs = inner(alg, y, product(alg, x, z));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
  }
}

TEST_CASE("quadratic representation closed forms") {
  std::mt19937 rng(104);

  // Symmetric matrices: P(x) y = x y x.
  Algebra s3 = Algebra::sym_matrices(3);
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd x = random_vector(rng, s3.dim()), y = random_vector(rng, s3.dim());
    Eigen::MatrixXd xm = sym_unpack(x, 3), ym = sym_unpack(y, 3);
    Eigen::VectorXd lhs = quad_rep(s3, x) * y;
    Eigen::VectorXd rhs = sym_pack(xm * ym * xm);
    CHECK((lhs - rhs).norm() <= 1e-12);
  }

  // Lorentz: P((x,u)) = (x^2 - |u|^2) I + 2 x T + 2 T^2 with T = L((0,u)).
  Algebra l4 = Algebra::lorentz(4);
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd x = random_vector(rng, 4);
    Eigen::VectorXd u0 = x;
    u0(0) = 0.0;
    Eigen::MatrixXd tt = lmap(l4, u0);
    Eigen::MatrixXd closed = (x(0) * x(0) - u0.squaredNorm()) * Eigen::MatrixXd::Identity(4, 4) +
                             2.0 * x(0) * tt + 2.0 * tt * tt;
    CHECK((quad_rep(l4, x) - closed).norm() <= 1e-12);
  }

  for (const Algebra& alg : test_algebras()) {
    Eigen::VectorXd e = identity(alg);
    CHECK((quad_rep(alg, e) - Eigen::MatrixXd::Identity(alg.dim(), alg.dim())).norm() <=
          1e-13);
    Eigen::VectorXd x = random_in_cone(alg, rng);
    CHECK((quad_rep(alg, x) * e - product(alg, x, x)).norm() <= 1e-12);
    CHECK((quad_rep(alg, x) * inverse(alg, x) - x).norm() <= 1e-11);
  }
}

TEST_CASE("polarized quadratic map and box operator") {
  std::mt19937 rng(105);
  for (const Algebra& alg : test_algebras()) {
    const int n = alg.dim();
    for (int t = 0; t < 10; ++t) {
      Eigen::VectorXd x = random_vector(rng, n), y = random_vector(rng, n);
      Eigen::VectorXd z = random_vector(rng, n);

      Eigen::MatrixXd pol = quad_rep_polarized(alg, x, y);
      Eigen::MatrixXd diff = 0.5 * (quad_rep(alg, x + y) - quad_rep(alg, x) -
                                    quad_rep(alg, y));
      CHECK((pol - diff).norm() <= 1e-12);
      CHECK((quad_rep_polarized(alg, x, x) - quad_rep(alg, x)).norm() <= 1e-12);

      // (x box y) z = (xy)z + x(yz) - y(xz).
      auto pr = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return product(alg, a, b);
      };
      Eigen::VectorXd oracle = pr(pr(x, y), z) + pr(x, pr(y, z)) - pr(y, pr(x, z));
      CHECK((box(alg, x, y) * z - oracle).norm() <= 1e-12);
    }
  }
}

TEST_CASE("determinant identities for simple algebras") {
  std::mt19937 rng(106);
  for (const Algebra& alg : {Algebra::lorentz(3), Algebra::lorentz(5),
                             Algebra::sym_matrices(2), Algebra::sym_matrices(3)}) {
    REQUIRE(alg.simple());
    const int two_m = 2 * alg.dim() / alg.rank();
    REQUIRE(rat(two_m) == rat(2) * alg.m());
    for (int t = 0; t < 100; ++t) {
      Eigen::VectorXd x = random_vector(rng, alg.dim());
      Eigen::VectorXd y = random_vector(rng, alg.dim());

      double lhs = quad_rep(alg, x).determinant();
      double rhs = ipow(det(alg, x), two_m);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));

      double lhs2 = det(alg, quad_rep(alg, y) * x);
      double rhs2 = det(alg, y) * det(alg, y) * det(alg, x);
      CHECK(std::abs(lhs2 - rhs2) <= 1e-10 * std::max(1.0, std::abs(rhs2)));
    }
  }
}

TEST_CASE("direct sums: det multiplies, trace adds, P block-diagonal") {
  std::mt19937 rng(107);
  Algebra a1 = Algebra::lorentz(3), a2 = Algebra::rank1_product(2), a3 = Algebra::sym_matrices(2);
  Algebra ds = Algebra::direct_sum({a1, a2, a3});
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd x = random_vector(rng, ds.dim());
    Eigen::VectorXd x1 = x.segment(0, 3), x2 = x.segment(3, 2), x3 = x.segment(5, 3);

    CHECK(det(ds, x) ==
          doctest::Approx(det(a1, x1) * det(a2, x2) * det(a3, x3)).epsilon(1e-12));
    CHECK(trace(ds, x) ==
          doctest::Approx(trace(a1, x1) + trace(a2, x2) + trace(a3, x3)).epsilon(1e-12));

    Eigen::MatrixXd p = quad_rep(ds, x);
    CHECK(p.block(0, 3, 3, 5).norm() == 0.0);
    CHECK(p.block(3, 0, 5, 3).norm() == 0.0);
    CHECK(p.block(3, 5, 2, 3).norm() == 0.0);
    CHECK(p.block(5, 3, 3, 2).norm() == 0.0);
    CHECK((p.block(0, 0, 3, 3) - quad_rep(a1, x1)).norm() == 0.0);
    CHECK((p.block(3, 3, 2, 2) - quad_rep(a2, x2)).norm() == 0.0);
    CHECK((p.block(5, 5, 3, 3) - quad_rep(a3, x3)).norm() == 0.0);
  }
}

TEST_CASE("spectral decomposition at rank 2") {
  Algebra l3 = Algebra::lorentz(3);
  SpectralRank2 s = spectral_rank2(l3, Eigen::Vector3d(2, 1, 0));
  CHECK(s.lambda1 == 3.0);
  CHECK(s.lambda2 == 1.0);
  CHECK(s.c1 == Eigen::Vector3d(0.5, 0.5, 0));
  CHECK(s.c2 == Eigen::Vector3d(0.5, -0.5, 0));

  std::mt19937 rng(108);
  Algebra l5 = Algebra::lorentz(5);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd x = random_vector(rng, 5);
    SpectralRank2 sp = spectral_rank2(l5, x);
    CHECK(sp.lambda1 >= sp.lambda2);
    CHECK((sp.lambda1 * sp.c1 + sp.lambda2 * sp.c2 - x).norm() <= 1e-12);
    CHECK((product(l5, sp.c1, sp.c1) - sp.c1).norm() <= 1e-12);
    CHECK((product(l5, sp.c2, sp.c2) - sp.c2).norm() <= 1e-12);
    CHECK(product(l5, sp.c1, sp.c2).norm() <= 1e-12);
    CHECK((sp.c1 + sp.c2 - identity(l5)).norm() <= 1e-12);
    CHECK(det(l5, x) == doctest::Approx(sp.lambda1 * sp.lambda2).epsilon(1e-11));
    CHECK(trace(l5, x) == doctest::Approx(sp.lambda1 + sp.lambda2).epsilon(1e-11));
  }

  // Degenerate direction u = 0: any frame works; ours is the fixed one.
  SpectralRank2 sd = spectral_rank2(l5, 2.0 * identity(l5));
  CHECK(sd.lambda1 == 2.0);
  CHECK(sd.lambda2 == 2.0);
  CHECK((product(l5, sd.c1, sd.c1) - sd.c1).norm() == 0.0);
  CHECK(product(l5, sd.c1, sd.c2).norm() == 0.0);
}

TEST_CASE("square roots in the cone") {
  Algebra l3 = Algebra::lorentz(3);
  CHECK(jordan::sqrt(l3, Eigen::Vector3d(5, 4, 0)) == Eigen::Vector3d(2, 1, 0));

  std::mt19937 rng(109);
  for (const Algebra& alg : test_algebras()) {
    CHECK((jordan::sqrt(alg, identity(alg)) - identity(alg)).norm() == 0.0);
    for (int t = 0; t < 20; ++t) {
      Eigen::VectorXd x = random_in_cone(alg, rng);
      Eigen::VectorXd s = jordan::sqrt(alg, x);
      CHECK(in_cone(alg, s));
      CHECK((product(alg, s, s) - x).norm() <= 1e-12);
    }
  }
  CHECK_THROWS_AS(jordan::sqrt(l3, Eigen::Vector3d(1, 2, 0)), std::domain_error);
}

TEST_CASE("inverse elements") {
  // Rank-2 inverse: (2,1,0)^{-1} = (2 x_1 e - x)/det = (2/3, -1/3, 0),
  // bit-exact in doubles since det = 3 is computed without rounding.
  Algebra l3 = Algebra::lorentz(3);
  Eigen::VectorXd xi = inverse(l3, Eigen::Vector3d(2, 1, 0));
  CHECK(xi(0) == 2.0 / 3.0);
  CHECK(xi(1) == -1.0 / 3.0);
  CHECK(xi(2) == 0.0);

  std::mt19937 rng(110);
  for (const Algebra& alg : test_algebras()) {
    CHECK((inverse(alg, identity(alg)) - identity(alg)).norm() == 0.0);
    for (int t = 0; t < 20; ++t) {
      Eigen::VectorXd y = random_in_cone(alg, rng);
      CHECK((product(alg, y, inverse(alg, y)) - identity(alg)).norm() <= 1e-11);
    }
  }

  CHECK_THROWS_AS(inverse(l3, Eigen::Vector3d(1, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(inverse(Algebra::rank1_product(2), Eigen::Vector2d(1, 0)),
                  std::domain_error);
}

TEST_CASE("cone membership is strict") {
  Algebra l3 = Algebra::lorentz(3);
  CHECK(in_cone(l3, Eigen::Vector3d(2, 1, 0)));
  CHECK_FALSE(in_cone(l3, Eigen::Vector3d(1, 2, 0)));
  CHECK_FALSE(in_cone(l3, Eigen::Vector3d(1, 1, 0)));
  CHECK_FALSE(in_cone(l3, Eigen::Vector3d(-2, 1, 0)));

  Algebra s2 = Algebra::sym_matrices(2);
  Eigen::MatrixXd indef(2, 2);
  indef << 1, 2, 2, 1;
  CHECK_FALSE(in_cone(s2, sym_pack(indef)));
  CHECK(in_cone(s2, identity(s2)));

  Algebra r2 = Algebra::rank1_product(2);
  CHECK_FALSE(in_cone(r2, Eigen::Vector2d(1, 0)));
  CHECK(in_cone(r2, Eigen::Vector2d(1, 3)));
}

TEST_CASE("polar decomposition of cone-preserving maps") {
  std::mt19937 rng(111);

  Algebra l4 = Algebra::lorentz(4);
  {
    // g = P(y) recovers (y, Id); g = c Id recovers (sqrt(c) e, Id).
    Eigen::VectorXd y = random_in_cone(l4, rng);
    PolarDecomposition pd = polar_decompose(l4, quad_rep(l4, y));
    CHECK((pd.x - y).norm() <= 1e-10);
    CHECK((pd.k - Eigen::MatrixXd::Identity(4, 4)).norm() <= 1e-10);

    PolarDecomposition pc = polar_decompose(l4, 2.5 * Eigen::MatrixXd::Identity(4, 4));
    CHECK((pc.x - std::sqrt(2.5) * identity(l4)).norm() <= 1e-12);
    CHECK((pc.k - Eigen::MatrixXd::Identity(4, 4)).norm() <= 1e-12);
  }

  for (int t = 0; t < 10; ++t) {
    // Cone rotations: orthogonal on the cross-section coordinates.
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(
                            Eigen::MatrixXd::Random(3, 3))
                            .householderQ();
    Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(4, 4);
    rot.block(1, 1, 3, 3) = q;
    Eigen::VectorXd y = random_in_cone(l4, rng);
    Eigen::MatrixXd g = quad_rep(l4, y) * rot;

    PolarDecomposition pd = polar_decompose(l4, g);
    CHECK((pd.x - y).norm() <= 1e-10);
    CHECK((pd.k - rot).norm() <= 1e-9);
    CHECK((quad_rep(l4, pd.x) * pd.k - g).norm() <= 1e-9);
    CHECK((pd.k.transpose() * pd.k - Eigen::MatrixXd::Identity(4, 4)).norm() <= 1e-9);
    CHECK((pd.k * identity(l4) - identity(l4)).norm() <= 1e-9);
  }

  // Symmetric matrices: the cone rotations are the conjugations u -> q u q^t.
  Algebra s3 = Algebra::sym_matrices(3);
  for (int t = 0; t < 10; ++t) {
    Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(Eigen::MatrixXd::Random(3, 3)).householderQ();
    Eigen::MatrixXd conj(s3.dim(), s3.dim());
    for (int j = 0; j < s3.dim(); ++j) {
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(s3.dim());
      ej(j) = 1.0;
      conj.col(j) = sym_pack(q * sym_unpack(ej, 3) * q.transpose());
    }
    Eigen::VectorXd y = random_in_cone(s3, rng);
    Eigen::MatrixXd g = quad_rep(s3, y) * conj;

    PolarDecomposition pd = polar_decompose(s3, g);
    CHECK((pd.x - y).norm() <= 1e-9);
    CHECK((quad_rep(s3, pd.x) * pd.k - g).norm() <= 1e-9);
    CHECK((pd.k.transpose() * pd.k - Eigen::MatrixXd::Identity(s3.dim(), s3.dim())).norm() <=
          1e-9);
    CHECK((pd.k * identity(s3) - identity(s3)).norm() <= 1e-9);
  }

  CHECK_THROWS_AS(polar_decompose(l4, -Eigen::MatrixXd::Identity(4, 4)), std::domain_error);
}

TEST_CASE("exact structure constants on a Lorentz factor") {
  // Canonical-basis coefficients of P(e_i, e_j) are small integers, so
  // double arithmetic reproduces them without rounding.
  Algebra l4 = Algebra::lorentz(4);
  const int n = 4;
  auto eps = [](int i, int k) { return (i == 0 || k == 0 || i == k) ? 1.0 : -1.0; };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXd p = quad_rep_polarized(l4, unit(n, i), unit(n, j));
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd got = p * unit(n, k);
        Eigen::VectorXd want = Eigen::VectorXd::Zero(n);
        if (i == j) {
          want = eps(i, k) * unit(n, k);
        } else {
          if (k == i) want += unit(n, j);
          if (k == j) want += unit(n, i);
        }
        for (int c = 0; c < n; ++c) CHECK(got(c) == want(c));
      }
    }

  // A determinant identity with integer data holds exactly:
  // det(P(x) y) = det(x)^2 det(y).
  Eigen::Vector4d x(2, 1, 0, 0), y(1, 0, 2, 0);
  Eigen::VectorXd px_y = quad_rep(l4, x) * y;
  CHECK(det(l4, px_y) == det(l4, x) * det(l4, x) * det(l4, y));
}

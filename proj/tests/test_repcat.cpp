#include <doctest.h>

#include "q6j/repcat.hpp"
#include "q6j/rng.hpp"

using namespace q6j;

namespace {

double rel(const Mat& diff, const Mat& ref) { return diff.norm() / (1.0 + ref.norm()); }

}  // namespace

TEST_CASE("generator actions") {
  RootContext ctx(4);
  Color a(cplx(0.37, 0.0));
  auto g = generators(ctx, a);
  CHECK(std::abs(g.K.matrix(0, 0) - ctx.xi_pow(a.value)) < 1e-14);
  CHECK(g.E.matrix.col(0).norm() == 0.0);  // E e_0 = 0
  CHECK_THROWS_AS(generators(ctx, Color(cplx(1.5, 0.0))), Error);
}

TEST_CASE("defining relations") {
  Rng rng(5);
  for (int n = 2; n <= 6; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 50; ++i) {
      Color a(rng.regular_color());
      auto g = generators(ctx, a);
      const Mat &E = g.E.matrix, &F = g.F.matrix, &K = g.K.matrix;
      Mat Kinv = K.inverse();
      Mat comm = E * F - F * E;
      Mat rhs = (K * K - Kinv * Kinv) / (ctx.xi() - 1.0 / ctx.xi());
      CHECK(rel(comm - rhs, rhs) < 1e-10);
      CHECK(rel(K * E - ctx.xi() * E * K, E) < 1e-10);
      CHECK(rel(K * F - (1.0 / ctx.xi()) * F * K, F) < 1e-10);
    }
  }
}

TEST_CASE("coproduct matrices") {
  RootContext ctx(3);
  Color a(cplx(0.31, 0.1)), b(cplx(0.87, -0.05));
  auto ga = generators(ctx, a), gb = generators(ctx, b);

  Mat dK = coproduct_action(ctx, Gen::K, a, b).matrix;
  CHECK((dK - kron(ga.K.matrix, gb.K.matrix)).norm() < 1e-14);

  Mat dE = coproduct_action(ctx, Gen::E, a, b).matrix;
  Eigen::VectorXcd e00 = Eigen::VectorXcd::Zero(9);
  e00(0) = 1.0;
  CHECK((dE * e00).norm() < 1e-14);

  Mat dF = coproduct_action(ctx, Gen::F, a, b).matrix;
  Eigen::VectorXcd got = dF * e00;
  Eigen::VectorXcd want = Eigen::VectorXcd::Zero(9);
  want(1 * 3 + 0) = ctx.qint(2.0 * a.value) * ctx.xi_pow(b.value);
  want(0 * 3 + 1) = ctx.xi_pow(-a.value) * ctx.qint(2.0 * b.value);
  CHECK((got - want).norm() < 1e-13);
}

TEST_CASE("duality pairing") {
  RootContext ctx(3);
  Color a(cplx(0.4, 0.0));
  RepOperator cp = cap(ctx, a);
  // anti-diagonal support
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (j != 2 - i) CHECK(std::abs(cp.matrix(0, i * 3 + j)) == 0.0);
  CHECK(std::abs(cp.matrix(0, 0 * 3 + 2) - ctx.xi_pow(-0.4 * 2.0)) < 1e-14);

  // invariance: cap kills Delta(E), Delta(F); fixes Delta(K)
  Color abar = a.complement(ctx);
  for (Gen g : {Gen::E, Gen::F}) {
    Mat dx = coproduct_action(ctx, g, a, abar).matrix;
    CHECK((cp.matrix * dx).norm() < 1e-10);
  }
  Mat dk = coproduct_action(ctx, Gen::K, a, abar).matrix;
  CHECK((cp.matrix * dk - cp.matrix).norm() < 1e-10);
}

TEST_CASE("invariant vector and zig-zag") {
  RootContext ctx(2);
  Color a(cplx(0.3, 0.0));
  RepOperator cu = cup(ctx, a);
  CHECK(std::abs(cu.matrix(0 * 2 + 1, 0) - ctx.xi_pow(-0.3)) < 1e-14);
  CHECK(std::abs(cu.matrix(1 * 2 + 0, 0) - ctx.xi_pow(0.7)) < 1e-14);

  for (int n = 2; n <= 5; ++n) {
    RootContext c(n);
    Rng rng(n);
    Color x(rng.regular_color());
    Color xbar = x.complement(c);

    Mat dE = coproduct_action(c, Gen::E, x, xbar).matrix;
    Mat dK = coproduct_action(c, Gen::K, x, xbar).matrix;
    RepOperator cux = cup(c, x);
    CHECK((dE * cux.matrix).norm() < 1e-10);
    CHECK((dK * cux.matrix - cux.matrix).norm() < 1e-10);

    // (cap_x (x) id) (id (x) cup_xbar) = id on V^x
    RepOperator idx = RepOperator::identity(c, {x});
    RepOperator lhs = cap(c, x).tensor(idx).compose(idx.tensor(cup(c, xbar)));
    CHECK((lhs.matrix - idx.matrix).norm() < 1e-10);
  }
}

TEST_CASE("braiding coefficients") {
  RootContext ctx(4);
  Color a(cplx(0.42, 0.07)), b(cplx(1.18, -0.03));
  RepOperator R = rmatrix(ctx, a, b);
  int n = 4;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      cplx m0 = ctx.xi_pow(2.0 * (a.value - double(u)) * (b.value - double(v)));
      CHECK(std::abs(R.matrix(v * n + u, u * n + v) - m0) < 1e-12 * (1 + std::abs(m0)));
    }
  CHECK(std::abs(R.matrix(0, 0) - ctx.xi_pow(2.0 * a.value * b.value)) < 1e-12);
}

TEST_CASE("braiding intertwines the coproduct") {
  Rng rng(23);
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 10; ++i) {
      Color a(rng.regular_color()), b(rng.regular_color());
      Mat R = rmatrix(ctx, a, b).matrix;
      for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        Mat dab = coproduct_action(ctx, g, a, b).matrix;
        Mat dba = coproduct_action(ctx, g, b, a).matrix;
        CHECK(rel(R * dab - dba * R, R) < 1e-9);
      }
    }
  }
}

TEST_CASE("Yang-Baxter") {
  Rng rng(31);
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 5; ++i) {
      Color a(rng.regular_color()), b(rng.regular_color()), c(rng.regular_color());
      RepOperator Rab = rmatrix(ctx, a, b), Rac = rmatrix(ctx, a, c), Rbc = rmatrix(ctx, b, c);
      RepOperator ia = RepOperator::identity(ctx, {a});
      RepOperator ib = RepOperator::identity(ctx, {b});
      RepOperator ic = RepOperator::identity(ctx, {c});
      Mat lhs = Rbc.tensor(ia).compose(ib.tensor(Rac)).compose(Rab.tensor(ic)).matrix;
      Mat rhs = ic.tensor(Rab).compose(Rac.tensor(ib)).compose(ia.tensor(Rbc)).matrix;
      CHECK(rel(lhs - rhs, rhs) < 1e-8);
    }
  }
}

TEST_CASE("inverse braiding") {
  RootContext ctx(5);
  Rng rng(41);
  Color a(rng.regular_color()), b(rng.regular_color());
  RepOperator R = rmatrix(ctx, a, b);
  RepOperator Rinv = rmatrix_inverse(ctx, b, a);  // V^b (x) V^a -> V^a (x) V^b
  Mat prod = Rinv.compose(R).matrix;
  CHECK((prod - Mat::Identity(25, 25)).norm() < 1e-9);
}

TEST_CASE("positive curl scales by the ribbon twist") {
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    Rng rng(100 + n);
    Color a(rng.regular_color());
    Color abar = a.complement(ctx);
    RepOperator ida = RepOperator::identity(ctx, {a});
    RepOperator idbar = RepOperator::identity(ctx, {abar});
    RepOperator curl = ida.tensor(cap(ctx, a))
                           .compose(rmatrix(ctx, a, a).tensor(idbar))
                           .compose(ida.tensor(cup(ctx, a)));
    cplx expect = ctx.xi_pow(2.0 * twist_exponent(ctx, a));
    CHECK((curl.matrix - expect * ida.matrix).norm() < 1e-9 * std::abs(expect));
  }
}

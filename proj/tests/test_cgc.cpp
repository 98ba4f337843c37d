#include <doctest.h>

#include <numbers>

#include "q6j/cgc.hpp"
#include "q6j/rng.hpp"

using namespace q6j;

namespace {

// Independent direct evaluation of the coupling coefficient: plain complex
// arithmetic, no shared helpers beyond the root of unity itself.
cplx cgqc_bruteforce(int n, cplx a, cplx b, cplx c, int u, int v, int t) {
  auto xp = [&](cplx e) { return std::exp(cplx(0, std::numbers::pi / n) * e); };
  auto br = [&](cplx x) { return xp(x) - xp(-x); };
  auto fact = [&](long k) {
    cplx p = 1.0;
    for (long j = 1; j <= k; ++j) p *= br(double(j));
    return p;
  };
  auto bin = [&](cplx top, long k) {  // {top,top-k}/{k}!
    cplx p = 1.0;
    for (long j = 0; j < k; ++j) p *= br(top - double(j));
    return p / fact(k);
  };
  long m = std::lround((a + b - c).real());
  if (u + v - t != m) return 0.0;
  cplx pref = std::exp(cplx(0, std::numbers::pi / 2) * (c - a - b));
  pref *= ((v - t) % 2 == 0) ? 1.0 : -1.0;
  pref *= xp((double(v) * (2.0 * b - double(v) + 1.0) - double(u) * (2.0 * a - double(u) + 1.0)) / 2.0);
  pref *= bin(2.0 * c, n - 1 - m) / bin(2.0 * c, t);
  cplx s = 0.0;
  for (int z = 0; z <= t; ++z) {
    int w = t - z;
    if (u - z < 0 || u - z > m) continue;
    cplx term = (z % 2 == 0) ? 1.0 : -1.0;
    term *= xp(double(2 * z - t) * (2.0 * c - double(t) + 1.0) / 2.0);
    term *= bin(double(m), m - (u - z));
    term *= bin(2.0 * a - double(u) + double(z), z);
    term *= bin(2.0 * b - double(v) + double(w), w);
    s += term;
  }
  return pref * s;
}

struct Triple {
  Color a, b, c;
};

Triple random_triple(const RootContext& ctx, Rng& rng) {
  Color a(rng.regular_color()), b(rng.regular_color());
  long k = rng.uniform_int(0, ctx.n() - 1);
  Color c(a.value + b.value - double(k));
  return {a, b, c};
}

}  // namespace

TEST_CASE("weight conservation") {
  RootContext ctx(4);
  Rng rng(2);
  auto tr = random_triple(ctx, rng);
  long m = std::lround((tr.a.value + tr.b.value - tr.c.value).real());
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      for (int t = 0; t < 4; ++t)
        if (u + v - t != m) CHECK(cgqc(ctx, {tr.a, tr.b, tr.c, u, v, t}) == cplx(0, 0));
}

TEST_CASE("single-term reduction at t=0") {
  RootContext ctx(5);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto tr = random_triple(ctx, rng);
    long m = std::lround((tr.a.value + tr.b.value - tr.c.value).real());
    if (m >= 5) continue;
    cplx got = cgqc(ctx, {tr.a, tr.b, tr.c, 0, int(m), 0});
    cplx want = cgqc_bruteforce(5, tr.a.value, tr.b.value, tr.c.value, 0, int(m), 0);
    CHECK(std::abs(got - want) < 1e-12 * (1 + std::abs(want)));
  }
}

TEST_CASE("matches brute-force evaluation") {
  Rng rng(17);
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 20; ++i) {
      auto tr = random_triple(ctx, rng);
      long m = std::lround((tr.a.value + tr.b.value - tr.c.value).real());
      for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u) {
          int v = int(m) + t - u;
          if (v < 0 || v >= n) continue;
          cplx got = cgqc(ctx, {tr.a, tr.b, tr.c, u, v, t});
          cplx want = cgqc_bruteforce(n, tr.a.value, tr.b.value, tr.c.value, u, v, t);
          CHECK(std::abs(got - want) < 1e-10 * (1 + std::abs(want)));
        }
    }
  }
}

TEST_CASE("inclusion is a module map") {
  Rng rng(29);
  for (int n = 2; n <= 4; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 8; ++i) {
      auto tr = random_triple(ctx, rng);
      RepOperator Y = inclusion(ctx, tr.a, tr.b, tr.c);
      auto gc = generators(ctx, tr.c);
      for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        Mat dx = coproduct_action(ctx, g, tr.a, tr.b).matrix;
        const Mat& xc = (g == Gen::E ? gc.E : g == Gen::F ? gc.F : gc.K).matrix;
        Mat resid = dx * Y.matrix - Y.matrix * xc;
        CHECK(resid.norm() < 1e-9 * (1 + Y.matrix.norm()));
      }
    }
  }
}

TEST_CASE("highest weight vector is killed by Delta(E)") {
  RootContext ctx(4);
  Rng rng(31);
  auto tr = random_triple(ctx, rng);
  RepOperator Y = inclusion(ctx, tr.a, tr.b, tr.c);
  Mat dE = coproduct_action(ctx, Gen::E, tr.a, tr.b).matrix;
  CHECK((dE * Y.matrix.col(0)).norm() < 1e-9 * (1 + Y.matrix.col(0).norm()));
}

TEST_CASE("lowering recursion between columns") {
  RootContext ctx(4);
  Rng rng(37);
  for (int i = 0; i < 6; ++i) {
    auto tr = random_triple(ctx, rng);
    RepOperator Y = inclusion(ctx, tr.a, tr.b, tr.c);
    Mat dF = coproduct_action(ctx, Gen::F, tr.a, tr.b).matrix;
    for (int t = 0; t + 1 < ctx.n(); ++t) {
      Eigen::VectorXcd lhs = dF * Y.matrix.col(t);
      Eigen::VectorXcd rhs = ctx.qint(2.0 * tr.c.value - double(t)) * Y.matrix.col(t + 1);
      CHECK((lhs - rhs).norm() < 1e-9 * (1 + rhs.norm()));
    }
  }
}

TEST_CASE("leg-bending identity") {
  Rng rng(41);
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 100; ++i) {
      auto tr = random_triple(ctx, rng);
      cplx a = tr.a.value, b = tr.b.value, c = tr.c.value;
      int u = int(rng.uniform_int(0, n - 1)), v = int(rng.uniform_int(0, n - 1));
      long m = std::lround((a + b - c).real());
      int t = u + v - int(m);
      if (t < 0 || t >= n) continue;
      cplx lhs = cgqc(ctx, {Color(double(n - 1) - a), Color(c), Color(b), n - 1 - u, t, v}) *
                 ctx.xi_pow(-a * double(n - 1)) * ctx.xi_pow(double((n - 1) * u));
      cplx rhs = cgqc(ctx, {Color(c), Color(double(n - 1) - b), Color(a), t, n - 1 - v, u}) *
                 ctx.xi_pow(-(double(n - 1) - b) * double(n - 1)) *
                 ctx.xi_pow(double((n - 1) * (n - 1 - v)));
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("projection entries via single bend") {
  Rng rng(43);
  RootContext ctx(3);
  int n = 3;
  for (int i = 0; i < 20; ++i) {
    auto tr = random_triple(ctx, rng);
    cplx a = tr.a.value, b = tr.b.value, c = tr.c.value;
    RepOperator P = projection(ctx, tr.a, tr.b, tr.c);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int t = 0; t < n; ++t) {
          cplx bent = cgqc(ctx, {Color(double(n - 1) - a), Color(c), Color(b), n - 1 - u, t, v}) *
                      ctx.xi_pow(-a * double(n - 1)) * ctx.xi_pow(double((n - 1) * u));
          CHECK(std::abs(P.matrix(t, u * n + v) - bent) < 1e-9 * (1 + std::abs(bent)));
        }
  }
}

TEST_CASE("composite of projection and inclusion is scalar") {
  Rng rng(47);
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 10; ++i) {
      auto tr = random_triple(ctx, rng);
      RepOperator comp = projection(ctx, tr.a, tr.b, tr.c).compose(inclusion(ctx, tr.a, tr.b, tr.c));
      cplx lambda = comp.matrix(0, 0);
      CHECK((comp.matrix - lambda * Mat::Identity(n, n)).norm() < 1e-9 * (1 + std::abs(lambda)));
    }
  }
}

TEST_CASE("bubble scalar matches closed form") {
  Rng rng(53);
  for (int n = 2; n <= 5; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 50; ++i) {
      Color b(rng.regular_color()), c(rng.regular_color());
      long k = rng.uniform_int(0, n - 1);
      Color a(b.value + c.value - double(k));
      if (!a.regular()) continue;
      cplx got = theta_value(ctx, a, b, c);  // throws on mismatch
      CHECK(std::abs(got - ctx.qbinom(2.0 * a.value + double(n), 2.0 * a.value + 1.0)) < 1e-13);
    }
  }
  RootContext ctx2(2);
  cplx expect = ctx2.brace(2.6) / ctx2.brace(1.0);
  CHECK(std::abs(ctx2.qbinom(2.6, 1.6) - expect) < 1e-13);
}

TEST_CASE("resolution of the identity") {
  Rng rng(59);
  for (int n = 2; n <= 3; ++n) {
    RootContext ctx(n);
    for (int i = 0; i < 5; ++i) {
      Color a(rng.regular_color()), b(rng.regular_color());
      if (is_half_integer(a.value + b.value, 1e-6)) continue;
      CHECK(identity_decomposition_residual(ctx, a, b) < 1e-9);
    }
  }
  RootContext ctx4(4);
  CHECK(identity_decomposition_residual(ctx4, Color(0.27), Color(1.61)) < 1e-9);
  // a half-integer summand color is reported, not skipped
  CHECK_THROWS_AS(identity_decomposition_residual(ctx4, Color(0.25), Color(0.25)), Error);
}

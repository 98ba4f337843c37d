#include <doctest.h>

#include <cmath>
#include <numbers>

#include "q6j/qarith.hpp"
#include "q6j/rng.hpp"

using namespace q6j;
using std::numbers::pi;

namespace {

// Quadrature oracle for int_0^x log(2 sin t) dt: composite Simpson away from
// the origin plus the analytic leading part log(2t) near zero.
double log2sin_integral(double x) {
  double eps = 1e-7;
  double head = eps * (std::log(2.0 * eps) - 1.0);
  auto f = [](double t) { return std::log(2.0 * std::sin(t)); };
  int m = 200000;
  double h = (x - eps) / (2 * m), s = f(eps) + f(x);
  for (int i = 1; i < 2 * m; ++i) s += f(eps + i * h) * (i % 2 ? 4.0 : 2.0);
  return head + s * h / 3.0;
}

}  // namespace

TEST_CASE("root powers") {
  RootContext ctx(5);
  CHECK(std::abs(ctx.xi_pow(0.0) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(ctx.xi_pow(5.0) - cplx(-1, 0)) < 1e-14);
  CHECK(std::abs(ctx.xi_pow(2.5) - cplx(0, 1)) < 1e-14);
  CHECK(std::abs(std::pow(ctx.xi(), 10) - cplx(1, 0)) < 1e-13);
}

TEST_CASE("brace basics and reflection") {
  RootContext ctx(5);
  CHECK(std::abs(ctx.brace(5.0)) < 1e-14);
  CHECK(std::abs(ctx.brace(1.0) - cplx(0.0, 2.0 * std::sin(pi / 5))) < 1e-14);

  RootContext ctx7(7);
  CHECK(std::abs(ctx7.brace(2.3) - ctx7.brace(7.0 - 2.3)) < 1e-12);

  Rng rng(11);
  for (int n = 2; n <= 8; ++n) {
    RootContext c(n);
    for (int i = 0; i < 50; ++i) {
      cplx a(rng.uniform(-3, 3), rng.uniform(-1, 1));
      CHECK(std::abs(c.brace(a) - c.brace(double(n) - a)) < 1e-12);
    }
  }
}

TEST_CASE("quantum integers") {
  RootContext ctx(5);
  CHECK(std::abs(ctx.qint(1.0) - cplx(1, 0)) < 1e-14);
  CHECK(std::abs(ctx.qint(0.0)) < 1e-14);
  RootContext ctx4(4);
  CHECK(std::abs(ctx4.qint(2.0) - cplx(std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("factorials") {
  RootContext ctx(5);
  CHECK(std::abs(ctx.qfact(0) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(ctx.qfact(4) - cplx(5, 0)) < 1e-12);
  RootContext ctx4(4);
  CHECK(std::abs(ctx4.qfact(3) - cplx(0, -4)) < 1e-12);

  // {a}! {n-1-a}! = i^{n-1} n for 0 <= a <= n-1
  for (int n = 2; n <= 8; ++n) {
    RootContext c(n);
    cplx expect = std::pow(cplx(0, 1), n - 1) * double(n);
    for (int a = 0; a <= n - 1; ++a) {
      cplx got = c.qfact(a) * c.qfact(n - 1 - a);
      CHECK(std::abs(got - expect) < 1e-10 * std::abs(expect));
    }
  }
}

TEST_CASE("falling products") {
  RootContext ctx(5);
  CHECK(std::abs(ctx.qpoch(1.7, 0) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(ctx.qpoch(4.0, 4) - ctx.qfact(4)) < 1e-12);
  RootContext ctx6(6);
  CHECK(std::abs(ctx6.qpoch(2.7, 2) - ctx6.brace(2.7) * ctx6.brace(1.7)) < 1e-13);
}

TEST_CASE("binomials") {
  RootContext ctx(5);
  CHECK(std::abs(ctx.qbinom(3.3, 3.3) - cplx(1, 0)) < 1e-15);
  CHECK_THROWS_AS(ctx.qbinom(3.3, 3.0), Error);
  CHECK_THROWS_AS(ctx.qbinom(3.3, 3.3 - 5.0), Error);

  Rng rng(7);
  for (int n = 2; n <= 8; ++n) {
    RootContext c(n);
    for (int i = 0; i < 200; ++i) {
      cplx b(rng.uniform(-2, 2), rng.uniform(-1, 1));
      long k = rng.uniform_int(0, n - 1);
      cplx a = b + double(k);
      cplx lhs = c.qbinom(a, b);
      // mirror identity
      cplx rhs = c.qbinom(double(n - 1) - b, double(n - 1) - a);
      CHECK(std::abs(lhs - rhs) < 1e-10 * (1 + std::abs(lhs)));
      // shift-by-n identity with alternating sign
      cplx shifted = c.qbinom(a - double(n), b - double(n));
      cplx sign = (k % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(lhs - sign * shifted) < 1e-10 * (1 + std::abs(lhs)));
    }
  }
}

TEST_CASE("binomial convolution identity") {
  RootContext ctx(5);
  CHECK(cg_sum_identity_residual(ctx, {2.1, 0}, {1.3, 0}, 0, +1) < 1e-12);
  CHECK(cg_sum_identity_residual(ctx, {2.1, 0}, {1.3, 0}, 2, +1) < 1e-9);
  RootContext ctx7(7);
  CHECK(cg_sum_identity_residual(ctx7, {3.4, 0}, {0.6, 0}, 3, -1) < 1e-9);

  Rng rng(3);
  for (int n = 3; n <= 8; ++n) {
    RootContext c(n);
    for (int i = 0; i < 100; ++i) {
      cplx a(rng.uniform(-2, 4), rng.uniform(-0.5, 0.5));
      cplx b(rng.uniform(-2, 4), rng.uniform(-0.5, 0.5));
      long cc = rng.uniform_int(0, n - 1);
      int sign = rng.next_u64() & 1 ? 1 : -1;
      CHECK(cg_sum_identity_residual(c, a, b, cc, sign) < 1e-9);
    }
  }
}

TEST_CASE("log sine sums") {
  RootContext ctx(5);
  CHECK(ctx.log_sin_sum(0) == 0.0);
  CHECK(std::abs(ctx.log_sin_sum(4) - std::log(5.0)) < 1e-12);
  CHECK_THROWS_AS(ctx.log_sin_sum(5), Error);
  CHECK_THROWS_AS(ctx.log_sin_sum(7), Error);

  RootContext big(1000);
  double riemann = big.log_sin_sum(666);
  double integral = (1000.0 / pi) * log2sin_integral(0.666 * pi);
  CHECK(std::abs(riemann - integral) * pi / 1000.0 < 0.02);
}

TEST_CASE("log-space representation round trip") {
  Rng rng(19);
  RootContext ctx(9);
  for (int i = 0; i < 50; ++i) {
    cplx z(rng.uniform(-4, 4), rng.uniform(-4, 4));
    LogComplex lz = LogComplex::from_complex(z);
    CHECK(std::abs(lz.to_complex() - z) < 1e-12 * std::abs(z));
  }
  // product of brace factors: direct vs log-space
  for (int trial = 0; trial < 20; ++trial) {
    cplx direct = 1.0;
    LogComplex logp{0.0, 0.0};
    for (int j = 0; j < 10; ++j) {
      cplx f = ctx.brace(cplx(rng.uniform(0.2, 8.0), rng.uniform(-0.4, 0.4)));
      direct *= f;
      logp *= LogComplex::from_complex(f);
    }
    CHECK(std::abs(logp.to_complex() - direct) < 1e-10 * std::abs(direct));
  }
}

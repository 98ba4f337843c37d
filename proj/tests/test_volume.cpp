#include <doctest.h>

#include <cmath>
#include <numbers>

#include "q6j/rng.hpp"
#include "q6j/volume.hpp"

using namespace q6j;
using std::numbers::pi;

namespace {

// Composite-Simpson quadrature of -log|2 sin t| with the integrable
// singularity at 0 handled analytically.
double lob_quadrature(double x) {
  double sign = 1.0;
  if (x < 0) {
    x = -x;
    sign = -1.0;
  }
  double eps = 1e-3;
  if (x <= eps)
    return sign * (x * (1.0 - std::log(2.0 * x)) + x * x * x / 18.0);
  // head: -log(2 sin t) = -log(2t) + t^2/6 + t^4/180 + O(t^6), integrated
  double head = eps * (1.0 - std::log(2.0 * eps)) + std::pow(eps, 3) / 18.0 +
                std::pow(eps, 5) / 900.0;
  auto f = [](double t) { return -std::log(std::abs(2.0 * std::sin(t))); };
  int m = 400000;
  double h = (x - eps) / (2 * m), s = f(eps) + f(x);
  for (int i = 1; i < 2 * m; ++i) s += f(eps + i * h) * (i % 2 ? 4.0 : 2.0);
  return sign * (head + s * h / 3.0);
}

DihedralAngles all_equal(double th) { return {th, th, th, th, th, th}; }

Rng angle_rng(77);

DihedralAngles random_truncated(Rng& rng) {
  while (true) {
    DihedralAngles t{rng.uniform(0.15, 1.0), rng.uniform(0.15, 1.0),
                     rng.uniform(0.15, 1.0), rng.uniform(0.15, 1.0),
                     rng.uniform(0.15, 1.0), rng.uniform(0.15, 1.0)};
    if (!t.truncated_valid()) continue;
    if (gram_matrix(t).determinant() >= -1e-6) continue;
    return t;
  }
}

}  // namespace

TEST_CASE("Lobachevsky basics") {
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(pi - 0.7) + lobachevsky(0.7)) < 1e-10);
  CHECK(std::abs(lobachevsky(0.7 + pi) - lobachevsky(0.7)) < 1e-10);
  CHECK(std::abs(lobachevsky(-0.4) + lobachevsky(0.4)) < 1e-14);
  for (double x : {0.2, 0.7, pi / 3, pi / 2, 2.9}) {
    CHECK(std::abs(lobachevsky(x) - lob_quadrature(x)) < 1e-9);
  }
  CHECK(std::abs(lobachevsky(pi / 3) - 0.3383138688) < 1e-9);
}

TEST_CASE("ideal volume") {
  double reg = ideal_volume(pi / 3, pi / 3, pi / 3);
  CHECK(std::abs(reg - 3 * lob_quadrature(pi / 3)) < 1e-9);
  CHECK(std::abs(reg - 1.0149416064) < 1e-9);
  double iso = ideal_volume(pi / 2, pi / 4, pi / 4);
  CHECK(std::abs(iso - (lob_quadrature(pi / 2) + 2 * lob_quadrature(pi / 4))) < 1e-9);
  for (double ep : {1e-2, 1e-4, 1e-6})
    CHECK(std::abs(ideal_volume(pi - 2 * ep, ep, ep)) < 20 * ep);
  CHECK_THROWS_AS(ideal_volume(1.0, 1.0, 1.0), Error);
}

TEST_CASE("finite-n ideal ratio") {
  RootContext ctx(3000);
  double ratio = ideal_asymptotic_ratio(ctx, 1000, 1000, 999);
  CHECK(std::abs(ratio - 1.0149416) < 6e-3);
  for (int n : {9, 15, 28}) {
    RootContext c(n);
    long a = (n - 1) / 3, b = (n - 1 - a) / 2, cc = n - 1 - a - b;
    LogComplex t = tet_integer(c, a, b, cc, a, b, cc);
    double viaprod = ideal_asymptotic_ratio(c, a, b, cc);
    CHECK(std::abs(t.phase - ((n % 2 == 0) ? pi : 0.0)) < 1e-12);
    CHECK(std::abs(pi / n * t.log_magnitude - viaprod) < 1e-9);
  }
  RootContext c15(15);
  LogComplex unbarred = tet_integer(c15, 5, 5, 4, 5, 5, 4);
  LogComplex barred = tet_integer(c15, 9, 9, 10, 9, 9, 10);
  CHECK(std::abs(unbarred.log_magnitude - barred.log_magnitude) < 1e-9);
  CHECK(std::abs(ideal_asymptotic_ratio(c15, 5, 5, 4) -
                 pi / 15 * barred.log_magnitude) < 1e-9);
}

TEST_CASE("Gram matrix") {
  DihedralAngles right = all_equal(pi / 2);
  CHECK((gram_matrix(right) - Eigen::Matrix4d::Identity()).norm() < 1e-15);
  DihedralAngles t5 = all_equal(pi / 5);
  CHECK(gram_matrix(t5).determinant() < 0);
  CHECK((gram_matrix(t5) - gram_matrix(t5).transpose()).norm() == 0.0);
}

TEST_CASE("stationary roots") {
  for (int i = 0; i < 100; ++i) {
    DihedralAngles t = random_truncated(angle_rng);
    CHECK(discriminant_residual(t) < 1e-9);
    ZetaPair z = zeta_roots(t);
    double h = 1e-5;
    double d1 = (g_function(t, z.zeta1 + h) - g_function(t, z.zeta1 - h)) / (2 * h);
    double d2 = (g_function(t, -z.zeta2 + h) - g_function(t, -z.zeta2 - h)) / (2 * h);
    CHECK(std::abs(d1) < 1e-5);
    CHECK(std::abs(d2) < 1e-5);
    auto abs_identity = [&](double zeta) {
      double num = std::abs(std::cos((t.a - t.c + t.f + zeta) / 2)) *
                   std::abs(std::cos((t.a + t.c - t.f - zeta) / 2)) *
                   std::abs(std::cos((t.c - t.d - t.e - zeta) / 2)) *
                   std::abs(std::cos((t.c + t.d - t.e - zeta) / 2));
      double den = std::abs(std::sin((zeta - 2 * t.c) / 2)) *
                   std::abs(std::sin((-t.b + t.c - t.e - t.f - zeta) / 2)) *
                   std::abs(std::sin((-t.b - t.c + t.e + t.f + zeta) / 2)) *
                   std::abs(std::sin(zeta / 2));
      return num / den;
    };
    CHECK(std::abs(abs_identity(z.zeta1) - 1.0) < 1e-8);
    CHECK(std::abs(abs_identity(-z.zeta2) - 1.0) < 1e-8);
  }
}

TEST_CASE("g function continuity") {
  DihedralAngles t = all_equal(pi / 5);
  ZetaPair z = zeta_roots(t);
  CHECK(std::abs(g_function(t, z.zeta1 + 1e-9) - g_function(t, z.zeta1)) < 1e-6);
}

TEST_CASE("volume positivity and monotonicity") {
  DihedralAngles t5 = all_equal(pi / 5);
  double v5 = truncated_volume(t5);
  CHECK(v5 > 0);
  double v6 = truncated_volume(all_equal(pi / 6));
  double v7 = truncated_volume(all_equal(pi / 7));
  CHECK(v6 > v5);
  CHECK(v7 > v6);
}

TEST_CASE("ideal boundary routing") {
  double a = pi / 3, b = pi / 4, e = pi - a - b;
  DihedralAngles ideal{a, b, b, a, e, e};
  CHECK(ideal.ideal_boundary());
  CHECK(std::abs(truncated_volume(ideal) - ideal_volume(a, b, e)) < 1e-12);
  // the gap closes at the continuity rate eps*log(1/eps)
  double prev = 1e9;
  for (double ep : {1e-3, 1e-4, 1e-5}) {
    DihedralAngles near_ideal{a - ep, b - ep, b - ep, a - ep, e - ep, e - ep};
    REQUIRE(near_ideal.truncated_valid());
    double diff = std::abs(truncated_volume(near_ideal) - ideal_volume(a, b, e));
    CHECK(diff < prev);
    CHECK(diff < 4.0 * ep * std::log(1.0 / ep));
    prev = diff;
  }
}

TEST_CASE("edge lengths") {
  DihedralAngles t5 = all_equal(pi / 5);
  for (TetEdge ed : {TetEdge::a, TetEdge::b, TetEdge::c, TetEdge::d, TetEdge::e, TetEdge::f})
    CHECK(edge_length(t5, ed) > 0);
  for (int i = 0; i < 20; ++i) {
    DihedralAngles t = random_truncated(angle_rng);
    Eigen::Matrix4d G = gram_matrix(t);
    double det = G.determinant();
    auto cof = [&](int r, int c) {
      Eigen::Matrix3d m;
      int rr = 0;
      for (int x = 0; x < 4; ++x) {
        if (x == r) continue;
        int cc = 0;
        for (int y = 0; y < 4; ++y) {
          if (y == c) continue;
          m(rr, cc++) = G(x, y);
        }
        ++rr;
      }
      return (((r + c) % 2) ? -1.0 : 1.0) * m.determinant();
    };
    double c34 = cof(2, 3), c33 = cof(2, 2), c44 = cof(3, 3);
    double plus = (2 * c34 * c34 - c33 * c44 + 2 * c34 * std::sqrt(-det) * std::sin(t.a)) / (c33 * c44);
    double minus = (2 * c34 * c34 - c33 * c44 - 2 * c34 * std::sqrt(-det) * std::sin(t.a)) / (c33 * c44);
    CHECK(std::abs(plus * minus - 1.0) < 1e-9 * std::abs(plus * minus));
  }
  // transposing two faces permutes the edge slots: under the (1 2) face
  // swap the b/e and f/c slots trade places while a and d stay put
  DihedralAngles t{0.3, 0.5, 0.4, 0.35, 0.45, 0.25};
  REQUIRE(t.truncated_valid());
  DihedralAngles s{t.a, t.e, t.f, t.d, t.b, t.c};
  CHECK(std::abs(edge_length(t, TetEdge::a) - edge_length(s, TetEdge::a)) < 1e-10);
  CHECK(std::abs(edge_length(t, TetEdge::e) - edge_length(s, TetEdge::b)) < 1e-10);
  CHECK(std::abs(edge_length(t, TetEdge::c) - edge_length(s, TetEdge::f)) < 1e-10);
  CHECK(std::abs(edge_length(t, TetEdge::d) - edge_length(s, TetEdge::d)) < 1e-10);
}

TEST_CASE("Schlaefli differential") {
  for (int i = 0; i < 20; ++i) {
    DihedralAngles t = random_truncated(angle_rng);
    double h = 1e-5;
    auto vol_shift = [&](TetEdge ed, double dh) {
      DihedralAngles s = t;
      switch (ed) {
        case TetEdge::a: s.a += dh; break;
        case TetEdge::b: s.b += dh; break;
        case TetEdge::c: s.c += dh; break;
        case TetEdge::d: s.d += dh; break;
        case TetEdge::e: s.e += dh; break;
        case TetEdge::f: s.f += dh; break;
      }
      return truncated_volume(s);
    };
    for (TetEdge ed : {TetEdge::a, TetEdge::c, TetEdge::f}) {
      double dv = (vol_shift(ed, h) - vol_shift(ed, -h)) / (2 * h);
      CHECK(std::abs(dv + 0.5 * edge_length(t, ed)) < 1e-4);
    }
  }
}

TEST_CASE("finite-n truncated ratio converges") {
  DihedralAngles t5 = all_equal(pi / 5);
  double target = truncated_volume(t5);
  auto ratio_at = [&](int n) {
    RootContext ctx(n);
    long lab = long((pi - pi / 5) * n / (2 * pi));
    AdmissibleSixJ L{lab, lab, lab, lab, lab, lab};
    return asymptotic_ratio(ctx, L);
  };
  auto r500 = ratio_at(500);
  auto r1000 = ratio_at(1000);
  auto r2000 = ratio_at(2000);
  double g500 = std::abs(r500.ratio - target);
  double g1000 = std::abs(r1000.ratio - target);
  double g2000 = std::abs(r2000.ratio - target);
  CHECK(g1000 < g500);
  CHECK(g2000 < g1000);
  CHECK(g1000 / g500 > 0.3);
  CHECK(g1000 / g500 < 0.8);
  CHECK(g2000 / g1000 > 0.3);
  CHECK(g2000 / g1000 < 0.8);
  for (auto* r : {&r500, &r1000, &r2000}) {
    CHECK(r->peak_gap_1 >= 0.0);
    CHECK(r->peak_gap_2 >= 0.0);
  }
  CHECK(r1000.peak_gap_1 <= std::log(1000.0));
  CHECK(r1000.peak_gap_2 <= std::log(1000.0));
  RootContext ctx(1000);
  long lab = long((pi - pi / 5) * 1000 / (2 * pi));
  AdmissibleSixJ L1{lab, lab, lab, lab, lab, lab};
  AdmissibleSixJ L2{lab + 1, lab, lab, lab, lab, lab};
  CHECK(std::abs(asymptotic_ratio(ctx, L1).ratio - asymptotic_ratio(ctx, L2).ratio) < 2e-2);
}

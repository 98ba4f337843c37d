#include "q6j/volume.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace q6j {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2k) for k = 1..40, enough for the accelerated series to reach
// machine precision on |theta| <= pi.
const std::array<double, 41>& even_zetas() {
  static const std::array<double, 41> table = [] {
    std::array<double, 41> z{};
    z[1] = kPi * kPi / 6.0;
    for (int k = 2; k <= 40; ++k) {
      double s = 0.0;
      for (int m = 1;; ++m) {
        double t = std::pow(double(m), -2.0 * k);
        s += t;
        if (t < 1e-18 * s) break;
      }
      z[k] = s;
    }
    return z;
  }();
  return table;
}

// Cl2(theta) = -int_0^theta log|2 sin(t/2)| dt on [-pi, pi], via the
// log-accelerated series theta(1 - log|theta|) + sum_k zeta(2k)/(k(2k+1))
// (theta/2pi)^{2k} theta. Same function as the sine Fourier series, but the
// tail decays like 4^{-k} instead of 1/k.
double clausen2(double theta) {
  if (theta == 0.0) return 0.0;
  double s = theta * (1.0 - std::log(std::abs(theta)));
  const auto& z = even_zetas();
  double ratio2 = (theta / (2.0 * kPi)) * (theta / (2.0 * kPi));
  double pw = 1.0;
  for (int k = 1; k <= 40; ++k) {
    pw *= ratio2;
    double term = z[k] / (double(k) * (2.0 * k + 1.0)) * pw * theta;
    s += term;
    if (std::abs(term) < 1e-17 * std::abs(s)) break;
  }
  return s;
}

}  // namespace

double lobachevsky(double x) {
  // Lob(x) = Cl2(2x)/2; reduce 2x into [-pi, pi] by 2pi-periodicity.
  double theta = std::remainder(2.0 * x, 2.0 * kPi);
  return 0.5 * clausen2(theta);
}

double ideal_volume(double alpha, double beta, double gamma) {
  if (std::abs(alpha + beta + gamma - kPi) > 1e-9 || alpha <= 0 || beta <= 0 ||
      gamma <= 0)
    throw Error(ErrorCode::AngleSumViolation,
                "ideal angles must be positive with sum pi");
  return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

double ideal_asymptotic_ratio(const RootContext& ctx, long a, long b, long c) {
  const int n = ctx.n();
  if (a + b + c != n - 1 || a < 1 || b < 1 || c < 1 || 2 * a > n - 1 ||
      2 * b > n - 1 || 2 * c > n - 1)
    throw Error(ErrorCode::InadmissibleTriple,
                "need a+b+c = n-1 with positive labels and 2x <= n-1");
  double lg = -2.0 * std::log(double(n)) + ctx.log_sin_sum(2 * a) +
              ctx.log_sin_sum(2 * b) + ctx.log_sin_sum(2 * c);
  return kPi / double(n) * lg;
}

bool DihedralAngles::truncated_valid() const {
  for (const auto& tr : vertex_triples())
    if (tr[0] + tr[1] + tr[2] >= kPi) return false;
  return a > 0 && b > 0 && c > 0 && d > 0 && e > 0 && f > 0;
}

bool DihedralAngles::ideal_boundary(double tol) const {
  for (const auto& tr : vertex_triples())
    if (std::abs(tr[0] + tr[1] + tr[2] - kPi) > tol) return false;
  return true;
}

Eigen::Matrix4d gram_matrix(const DihedralAngles& t) {
  Eigen::Matrix4d G;
  G << 1, -std::cos(t.a), -std::cos(t.b), -std::cos(t.f),
      -std::cos(t.a), 1, -std::cos(t.e), -std::cos(t.c),
      -std::cos(t.b), -std::cos(t.e), 1, -std::cos(t.d),
      -std::cos(t.f), -std::cos(t.c), -std::cos(t.d), 1;
  return G;
}

namespace {

struct Quadratic {
  cplx C0, C1, C2, unit;  // unit = a b c^2 d e f
};

Quadratic angle_quadratic(const DihedralAngles& t) {
  cplx a = std::polar(1.0, t.a), b = std::polar(1.0, t.b), c = std::polar(1.0, t.c);
  cplx d = std::polar(1.0, t.d), e = std::polar(1.0, t.e), f = std::polar(1.0, t.f);
  cplx c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  Quadratic q;
  q.C0 = a * b * c2 * d + a * b * c4 * d + a * b * c3 * e + a * b * c3 * d * d * e +
         b * c3 * d * f + a * a * b * c3 * d * f + a * c3 * d * e * f +
         a * b * b * c3 * d * e * f;
  q.C1 = -a * b * c2 * d + a * b * c2 * d * e * e + b * c2 * e * f +
         a * a * b * c2 * e * f - a * c * d * e * f - a * b * b * c * d * e * f -
         a * c3 * d * e * f - a * b * b * c3 * d * e * f + b * c2 * d * d * e * f +
         a * a * b * c2 * d * d * e * f + a * b * c2 * d * f * f -
         a * b * c2 * d * e * e * f * f;
  q.C2 = a * c * d * e * f + a * b * b * c * d * e * f + b * c * d * e * e * f +
         a * a * b * c * d * e * e * f + a * b * c * e * f * f +
         a * b * c * d * d * e * f * f + a * b * d * e * e * f * f +
         a * b * c2 * d * e * e * f * f;
  q.unit = a * b * c2 * d * e * f;
  return q;
}

double require_negative_gram(const DihedralAngles& t) {
  double det = gram_matrix(t).determinant();
  if (det >= 0)
    throw Error(ErrorCode::NonHyperbolicGram,
                "Gram determinant is non-negative: det = " + std::to_string(det));
  return det;
}

// principal argument shifted by multiples of 2pi into (lo, hi); nullopt if
// no shift lands.
std::optional<double> try_arg_into(cplx z, double lo, double hi) {
  double base = std::arg(z);
  for (int k = -2; k <= 2; ++k) {
    double cand = base + 2.0 * kPi * k;
    if (cand > lo && cand < hi) return cand;
  }
  return std::nullopt;
}

}  // namespace

double discriminant_residual(const DihedralAngles& t) {
  // det G = (C1^2 - 4 C0 C2) / (16 (abc^2def)^2): the quadratic's honest
  // discriminant; checked here against the cosine Gram determinant.
  Quadratic q = angle_quadratic(t);
  double det = gram_matrix(t).determinant();
  cplx lhs = q.C1 * q.C1 - 4.0 * q.C0 * q.C2;
  cplx rhs = 16.0 * q.unit * q.unit * det;
  double scale = std::abs(lhs) + std::abs(rhs) + 1.0;
  return std::abs(lhs - rhs) / scale;
}

ZetaPair zeta_roots(const DihedralAngles& t) {
  if (!t.truncated_valid())
    throw Error(ErrorCode::AngleSumViolation, "vertex angle sums must stay below pi");
  double det = require_negative_gram(t);
  Quadratic q = angle_quadratic(t);
  cplx sqrt_det(0.0, std::sqrt(-det));
  cplx z1 = (-q.C1 - 4.0 * q.unit * sqrt_det) / (2.0 * q.C2);
  cplx z2 = (-q.C1 + 4.0 * q.unit * sqrt_det) / (2.0 * q.C2);
  if (std::abs(std::abs(z1) - 1.0) > 1e-9 || std::abs(std::abs(z2) - 1.0) > 1e-9)
    throw Error(ErrorCode::RootOffUnitCircle, "stationary roots left the unit circle");

  double lo1 = std::max(2.0 * t.c, t.b + t.c - t.e - t.f);
  double hi1 = std::min(kPi + t.c - t.d - t.e, kPi - t.a + t.c - t.f);
  double lo2 = std::max(0.0, t.b - t.c + t.e + t.f);
  double hi2 = std::min(kPi - t.a - t.c + t.f, kPi - t.c - t.d + t.e);
  // The brackets decide which root is which stationary phase; try both
  // pairings rather than trusting the radical's orientation.
  for (auto [p, q] : {std::pair{z1, z2}, std::pair{z2, z1}}) {
    auto c1 = try_arg_into(p, lo1, hi1);
    auto c2 = try_arg_into(q, -hi2, -lo2);
    if (c1 && c2) return {*c1, -*c2};
  }
  throw Error(ErrorCode::IntervalViolation,
              "no root assignment lands in the stationary brackets");
}

double g_function(const DihedralAngles& t, double zeta) {
  auto L = [](double x) { return lobachevsky(x); };
  return L((kPi - t.a - t.f + t.c - zeta) / 2) + L((-2.0 * t.c + zeta) / 2) -
         L((kPi - t.a - t.c + t.f + zeta) / 2) + L(zeta / 2) -
         L((-t.b + t.c - t.e - t.f - zeta) / 2) + L((kPi - t.d - t.e + t.c - zeta) / 2) -
         L((kPi - t.d - t.c + t.e + zeta) / 2) + L((-t.b - t.c + t.e + t.f + zeta) / 2);
}

double truncated_volume(const DihedralAngles& t) {
  if (t.ideal_boundary())
    return ideal_volume(t.a, t.b, t.e);  // forces a=d, b=c, e=f
  ZetaPair z = zeta_roots(t);
  return 0.5 * (g_function(t, z.zeta1) - g_function(t, -z.zeta2));
}

double edge_length(const DihedralAngles& t, TetEdge edge) {
  double det = gram_matrix(t).determinant();
  if (det >= 0)
    throw Error(ErrorCode::NonHyperbolicGram, "edge lengths need det G < 0");
  Eigen::Matrix4d G = gram_matrix(t);
  auto cof = [&](int i, int j) {
    Eigen::Matrix3d m;
    int rr = 0;
    for (int r = 0; r < 4; ++r) {
      if (r == i) continue;
      int cc = 0;
      for (int cidx = 0; cidx < 4; ++cidx) {
        if (cidx == j) continue;
        m(rr, cc++) = G(r, cidx);
      }
      ++rr;
    }
    double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
    return sign * m.determinant();
  };
  // edge -> (angle, complementary face pair), 0-indexed
  int k, l;
  double theta;
  switch (edge) {
    case TetEdge::a: k = 2; l = 3; theta = t.a; break;
    case TetEdge::b: k = 1; l = 3; theta = t.b; break;
    case TetEdge::f: k = 1; l = 2; theta = t.f; break;
    case TetEdge::e: k = 0; l = 3; theta = t.e; break;
    case TetEdge::c: k = 0; l = 2; theta = t.c; break;
    case TetEdge::d: k = 0; l = 1; theta = t.d; break;
    default: throw Error(ErrorCode::BadInput, "unknown edge");
  }
  double ckl = cof(k, l), ckk = cof(k, k), cll = cof(l, l);
  double num = 2.0 * ckl * ckl - ckk * cll + 2.0 * ckl * std::sqrt(-det) * std::sin(theta);
  return 0.5 * std::log(num / (ckk * cll));
}

AsymptoticResult asymptotic_ratio(const RootContext& ctx, const AdmissibleSixJ& L,
                                  bool parallel) {
  LogComplex t1 = tet_admissible(ctx, L, true, parallel);
  LogComplex t2 = tet_admissible(ctx, L.bar(ctx), true, parallel);

  // log(sum / max summand), which the peak-dominance sandwich keeps in
  // [0, log(#terms)] <= [0, log n]
  auto peak_gap = [&](const AdmissibleSixJ& labels) {
    ZRange r = summation_range(ctx, labels);
    std::vector<double> logs;
    for (long z = r.m; z <= r.M; ++z) logs.push_back(log_summand(ctx, labels, z));
    double mx = *std::max_element(logs.begin(), logs.end());
    double s = 0;
    for (double x : logs) s += std::exp(x - mx);
    return std::log(s);
  };

  AsymptoticResult out;
  out.ratio = kPi / (2.0 * ctx.n()) * (t1.log_magnitude + t2.log_magnitude);
  out.peak_gap_1 = peak_gap(L);
  out.peak_gap_2 = peak_gap(L.bar(ctx));
  return out;
}

}  // namespace q6j

#include "q6j/cgc.hpp"

#include <numbers>

namespace q6j {

namespace {

long coupling_gap(const RootContext& ctx, Color a, Color b, Color c) {
  cplx diff = a.value + b.value - c.value;
  if (!is_near_integer(diff))
    throw Error(ErrorCode::InadmissibleTriple, "a+b-c is not an integer");
  long m = std::lround(diff.real());
  if (m < 0 || m > ctx.n() - 1)
    throw Error(ErrorCode::InadmissibleTriple,
                "a+b-c = " + std::to_string(m) + " outside [0, n-1]");
  return m;
}

}  // namespace

cplx cgqc(const RootContext& ctx, const CgcIndex& idx) {
  require_regular(idx.a, "coupling color a");
  require_regular(idx.b, "coupling color b");
  require_regular(idx.c, "coupling color c");
  long m = coupling_gap(ctx, idx.a, idx.b, idx.c);
  const int n = ctx.n();
  const long u = idx.u, v = idx.v, t = idx.t;
  if (u < 0 || u >= n || v < 0 || v >= n || t < 0 || t >= n)
    throw Error(ErrorCode::BadInput, "weight index outside [0, n-1]");
  if (u + v - t != m) return 0.0;

  const cplx a = idx.a.value, b = idx.b.value, c = idx.c.value;
  cplx pref = std::exp(cplx(0.0, std::numbers::pi / 2.0) * (c - a - b));
  pref *= ((v - t) % 2 == 0) ? 1.0 : -1.0;
  pref *= ctx.xi_pow(0.5 * (double(v) * (2.0 * b - double(v) + 1.0) -
                            double(u) * (2.0 * a - double(u) + 1.0)));
  pref /= ctx.qbinom(2.0 * c, 2.0 * c - double(t));
  pref *= ctx.qbinom(2.0 * c, a + b + c - double(n - 1));

  KahanSum sum;
  long zlo = std::max(0L, u - m), zhi = std::min(t, u);
  for (long z = zlo; z <= zhi; ++z) {
    long w = t - z;
    cplx term = (z % 2 == 0) ? 1.0 : -1.0;
    term *= ctx.xi_pow(0.5 * double(2 * z - t) * (2.0 * c - double(t) + 1.0));
    term *= ctx.qbinom(double(m), double(u - z));
    term *= ctx.qbinom(2.0 * a - double(u) + double(z), 2.0 * a - double(u));
    term *= ctx.qbinom(2.0 * b - double(v) + double(w), 2.0 * b - double(v));
    sum.add(term);
  }
  return pref * sum.value();
}

RepOperator inclusion(const RootContext& ctx, Color a, Color b, Color c) {
  long m = coupling_gap(ctx, a, b, c);
  const int n = ctx.n();
  Mat mat = Mat::Zero(n * n, n);
  for (int t = 0; t < n; ++t) {
    for (int u = 0; u < n; ++u) {
      long v = m + t - u;
      if (v < 0 || v >= n) continue;
      mat(u * n + v, t) = cgqc(ctx, {a, b, c, u, int(v), t});
    }
  }
  return {{c}, {a, b}, mat};
}

RepOperator projection(const RootContext& ctx, Color a, Color b, Color c) {
  long m = coupling_gap(ctx, a, b, c);
  const int n = ctx.n();
  Color ab = a.complement(ctx), bb = b.complement(ctx), cb = c.complement(ctx);
  Mat mat = Mat::Zero(n, n * n);
  for (int t = 0; t < n; ++t) {
    for (int u = 0; u < n; ++u) {
      long v = m + t - u;
      if (v < 0 || v >= n) continue;
      mat(t, u * n + v) =
          cgqc(ctx, {bb, ab, cb, n - 1 - int(v), n - 1 - u, n - 1 - t});
    }
  }
  return {{a, b}, {c}, mat};
}

cplx theta_value(const RootContext& ctx, Color a, Color b, Color c) {
  require_regular(a, "bubble color a");
  cplx closed = ctx.qbinom(2.0 * a.value + double(ctx.n()), 2.0 * a.value + 1.0);
  RepOperator comp = projection(ctx, b, c, a).compose(inclusion(ctx, b, c, a));
  double resid = (comp.matrix - closed * Mat::Identity(ctx.n(), ctx.n())).norm();
  if (resid > 1e-8 * (1.0 + std::abs(closed)))
    throw Error(ErrorCode::NonScalarOperator,
                "bubble composite disagrees with its closed form");
  return closed;
}

double identity_decomposition_residual(const RootContext& ctx, Color a, Color b) {
  const int n = ctx.n();
  Mat acc = Mat::Zero(n * n, n * n);
  for (int k = 0; k < n; ++k) {
    Color c(a.value + b.value - double(k));
    if (is_half_integer(c.value, 1e-6))
      throw Error(ErrorCode::HalfIntegerColor,
                  "summand color a+b-" + std::to_string(k) + " is a half-integer");
    cplx theta = ctx.qbinom(2.0 * c.value + double(n), 2.0 * c.value + 1.0);
    acc += inclusion(ctx, a, b, c).matrix * projection(ctx, a, b, c).matrix / theta;
  }
  return (acc - Mat::Identity(n * n, n * n)).norm();
}

}  // namespace q6j

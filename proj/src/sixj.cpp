#include "q6j/sixj.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "q6j/parallel.hpp"

namespace q6j {

namespace {

constexpr double kPi = std::numbers::pi;

long checked_combo(const RootContext& ctx, cplx v, const char* what) {
  if (!is_near_integer(v))
    throw Error(ErrorCode::IntegralityViolation,
                std::string(what) + " is not an integer");
  long k = std::lround(v.real());
  if (k < 0 || k > ctx.n() - 1)
    throw Error(ErrorCode::IntegralityViolation,
                std::string(what) + " = " + std::to_string(k) + " outside [0, n-1]");
  return k;
}

// qbin(2e, A_abe+1-n) / qbin(2e, B_ecd) with the shared falling factors
// cancelled, which keeps the value finite on the integer label locus.
cplx cancelled_bubble_ratio(const RootContext& ctx, cplx e, const BSet& B) {
  const int n = ctx.n();
  cplx ratio = ctx.qfact(B.dec) / ctx.qfact(n - 1 - B.abe);
  long lo = B.dec, hi = n - 2 - B.abe;
  if (hi >= lo) {
    for (long j = lo; j <= hi; ++j) ratio *= ctx.brace(2.0 * e - double(j));
  } else {
    for (long j = hi + 1; j <= lo - 1; ++j) {
      cplx d = ctx.brace(2.0 * e - double(j));
      if (std::abs(d) < 1e-300)
        throw Error(ErrorCode::IntegralityViolation,
                    "vanishing brace in a normalization denominator");
      ratio /= d;
    }
  }
  return ratio;
}

// Signed natural-log value; sign 0 encodes an exact zero.
struct SignedLog {
  double lg = 0.0;
  int sign = 1;
};

SignedLog brace_sl(const RootContext& ctx, long j) {
  long period = 2L * ctx.n();
  long jm = ((j % period) + period) % period;
  if (jm == 0 || jm == ctx.n()) return {0.0, 0};
  return {ctx.log_abs_sin_term(jm), jm > ctx.n() ? -1 : 1};
}

// {x,y}/{x-y}! for integers with 0 <= x-y <= n-1; the i factors of the
// x-y braces above and below cancel, leaving only sine signs.
SignedLog qbin_sl(const RootContext& ctx, long x, long y) {
  long k = x - y;
  if (k < 0 || k > ctx.n() - 1)
    throw Error(ErrorCode::IntegralityViolation, "binomial difference outside [0, n-1]");
  SignedLog out{-ctx.log_fact_mag(k), 1};
  for (long j = y + 1; j <= x; ++j) {
    SignedLog b = brace_sl(ctx, j);
    if (b.sign == 0) return {0.0, 0};
    out.lg += b.lg;
    out.sign *= b.sign;
  }
  return out;
}

// log of the positive prefactor of the single-sign form; the (-1)^{n-1}
// sign is carried separately by the caller.
double log_admissible_prefactor(const RootContext& ctx, const AdmissibleSixJ& L) {
  const int n = ctx.n();
  long Babe = L.a + L.b - L.e, Bafc = L.a + L.f - L.c;
  long Bbdf = L.b + L.d - L.f, Bdec = L.d + L.e - L.c;
  double lg = ctx.log_fact_mag(Bdec) + ctx.log_fact_mag(Babe) -
              ctx.log_fact_mag(Bbdf) - ctx.log_fact_mag(Bafc);
  lg += ctx.log_fact_mag(Bdec) - ctx.log_fact_mag(n - 1 - Babe);
  long lo = Bdec, hi = n - 2 - Babe;
  if (hi >= lo)
    for (long j = lo; j <= hi; ++j) lg += ctx.log_abs_sin_term(2 * L.e - j);
  else
    for (long j = hi + 1; j <= lo - 1; ++j) lg -= ctx.log_abs_sin_term(2 * L.e - j);
  return lg;
}

}  // namespace

BSet b_combinations(const RootContext& ctx, const SixJLabels& L) {
  BSet B;
  B.abe = checked_combo(ctx, L.a.value + L.b.value - L.e.value, "a+b-e");
  B.afc = checked_combo(ctx, L.a.value + L.f.value - L.c.value, "a+f-c");
  B.bdf = checked_combo(ctx, L.b.value + L.d.value - L.f.value, "b+d-f");
  B.dec = checked_combo(ctx, L.d.value + L.e.value - L.c.value, "d+e-c");
  return B;
}

cplx tet(const RootContext& ctx, const SixJLabels& L) {
  BSet B = b_combinations(ctx, L);
  const cplx a = L.a.value, b = L.b.value, e = L.e.value;
  const cplx d = L.d.value, c = L.c.value, f = L.f.value;

  cplx pref = ((ctx.n() - 1 + B.afc) % 2 == 0) ? 1.0 : -1.0;
  pref *= ctx.qfact(B.dec) * ctx.qfact(B.abe) / (ctx.qfact(B.bdf) * ctx.qfact(B.afc));
  pref *= cancelled_bubble_ratio(ctx, e, B);

  const cplx A_afc = a + f + c;
  const cplx B_acf = a + c - f;
  const cplx B_bfd = b + f - d;
  const cplx B_dce = d + c - e;
  const cplx B_dfb = d + f - b;

  KahanSum sum;
  for (long z = std::max(0L, B.dec - B.bdf); z <= std::min(B.dec, B.afc); ++z) {
    cplx term = (z % 2 == 0) ? 1.0 : -1.0;
    term *= ctx.qbinom(A_afc + 1.0, 2.0 * c + double(z) + 1.0);
    term *= ctx.qbinom(B_acf + double(z), B_acf);
    term *= ctx.qbinom(B_bfd + double(B.dec - z), B_bfd);
    term *= ctx.qbinom(B_dce + double(z), B_dfb);
    sum.add(term);
  }
  return pref * sum.value();
}

cplx sixj(const RootContext& ctx, const SixJLabels& L) {
  cplx bubble = ctx.qbinom(2.0 * L.f.value + double(ctx.n()), 2.0 * L.f.value + 1.0);
  if (std::abs(bubble) < 1e-12)
    throw Error(ErrorCode::IntegralityViolation,
                "bubble normalization vanishes at this f; only the tet form is finite");
  return tet(ctx, L) / bubble;
}

bool admissible_triple(int n, long i, long j, long k) {
  auto strict = [](long lo, long x, long hi) { return lo < x && x < hi; };
  return strict(0, i, n - 1) && strict(0, j, n - 1) && strict(0, k, n - 1) &&
         strict(n - 1, i + j + k, 2 * (n - 1)) && strict(0, i + j - k, n - 1) &&
         strict(0, j + k - i, n - 1) && strict(0, k + i - j, n - 1);
}

void validate_admissible(const RootContext& ctx, const AdmissibleSixJ& L) {
  const int n = ctx.n();
  if (!admissible_triple(n, L.a, L.b, L.e) || !admissible_triple(n, L.a, L.c, L.f) ||
      !admissible_triple(n, L.b, L.d, L.f) || !admissible_triple(n, L.c, L.d, L.e))
    throw Error(ErrorCode::InadmissibleTriple, "a vertex triple fails the strict bounds");
}

namespace {

// The single-sign form also evaluates on the closure of the admissible
// region (e.g. equal-label sets with i+j+k = n-1); this is the widest
// domain on which every binomial in it stays in range.
bool weakly_admissible_triple(int n, long i, long j, long k) {
  auto in = [](long lo, long x, long hi) { return lo <= x && x <= hi; };
  return in(0, i, n - 1) && in(0, j, n - 1) && in(0, k, n - 1) &&
         in(n - 1, i + j + k, 2 * (n - 1)) && in(0, i + j - k, n - 1) &&
         in(0, j + k - i, n - 1) && in(0, k + i - j, n - 1);
}

void validate_weak(const RootContext& ctx, const AdmissibleSixJ& L) {
  const int n = ctx.n();
  if (!weakly_admissible_triple(n, L.a, L.b, L.e) ||
      !weakly_admissible_triple(n, L.a, L.c, L.f) ||
      !weakly_admissible_triple(n, L.b, L.d, L.f) ||
      !weakly_admissible_triple(n, L.c, L.d, L.e))
    throw Error(ErrorCode::InadmissibleTriple, "a vertex triple fails the closed bounds");
}

}  // namespace

ZRange summation_range(const RootContext& ctx, const AdmissibleSixJ& L) {
  const int n = ctx.n();
  long m = std::max({0L, long(n - 1) - 2 * L.c, L.b - L.c + L.e + L.f - n + 1,
                     -L.b - L.c + L.e + L.f});
  long M = std::min({L.d + L.e - L.c, L.a + L.f - L.c, n - 1 - (L.a + L.c - L.f),
                     n - 1 - (L.d + L.c - L.e)});
  return {m, M};
}

double log_summand(const RootContext& ctx, const AdmissibleSixJ& L, long z) {
  const int n = ctx.n();
  const long A_afc = L.a + L.f + L.c;
  return ctx.log_qbinom_int(A_afc + 1 - n, 2 * L.c + z + 1 - n) +
         ctx.log_qbinom_int(L.a + L.c - L.f + z, L.a + L.c - L.f) +
         ctx.log_qbinom_int(L.b + L.f - L.d + L.d + L.e - L.c - z, L.b + L.f - L.d) +
         ctx.log_qbinom_int(L.d + L.c - L.e + z, L.d + L.f - L.b);
}

std::vector<cplx> summands_complex(const RootContext& ctx, const AdmissibleSixJ& L) {
  ZRange r = summation_range(ctx, L);
  const long n = ctx.n();
  const long A_afc = L.a + L.f + L.c;
  std::vector<cplx> out;
  for (long z = r.m; z <= r.M; ++z) {
    cplx term = ctx.qbinom(double(A_afc + 1 - n), double(2 * L.c + z + 1 - n));
    term *= ctx.qbinom(double(L.a + L.c - L.f + z), double(L.a + L.c - L.f));
    term *= ctx.qbinom(double(L.b + L.f - L.d + L.d + L.e - L.c - z),
                       double(L.b + L.f - L.d));
    term *= ctx.qbinom(double(L.d + L.c - L.e + z), double(L.d + L.f - L.b));
    out.push_back(term);
  }
  return out;
}

LogComplex tet_admissible(const RootContext& ctx, const AdmissibleSixJ& L,
                          bool logspace, bool parallel) {
  validate_weak(ctx, L);
  ZRange r = summation_range(ctx, L);
  std::vector<double> logs(static_cast<size_t>(r.M - r.m + 1));
  for_each_index(logs.size(), parallel,
                 [&](size_t i) { logs[i] = log_summand(ctx, L, r.m + long(i)); });

  double log_sum;
  if (logspace) {
    log_sum = parallel ? log_sum_exp_parallel(logs) : log_sum_exp(logs);
  } else {
    std::vector<double> vals(logs.size());
    for (size_t i = 0; i < logs.size(); ++i) vals[i] = std::exp(logs[i]);
    std::sort(vals.begin(), vals.end());
    double s = 0.0;
    for (double v : vals) s += v;
    log_sum = std::log(s);
  }
  double phase = (ctx.n() % 2 == 0) ? kPi : 0.0;  // (-1)^{n-1}
  return {log_admissible_prefactor(ctx, L) + log_sum, phase};
}

double summand_ratio(const RootContext& ctx, const AdmissibleSixJ& L, long z) {
  const int n = ctx.n();
  auto s = [&](long k) { return std::sin(kPi * double(k) / n); };
  long Bafc = L.a + L.f - L.c, Bacf = L.a + L.c - L.f;
  long Bdec = L.d + L.e - L.c, Bdce = L.d + L.c - L.e;
  long Bbfd = L.b + L.f - L.d, Bdfb = L.d + L.f - L.b;
  double num = s(Bafc - z + 1) * s(Bacf + z) * s(Bdec - z + 1) * s(Bdce + z);
  double den = s(2 * L.c + z + 1 - n) * s(z) * s(Bbfd + Bdec - z + 1) * s(Bdce - Bdfb + z);
  return num / den;
}

long find_z0(const RootContext& ctx, const AdmissibleSixJ& L) {
  validate_weak(ctx, L);
  ZRange r = summation_range(ctx, L);
  if (r.m >= r.M) throw Error(ErrorCode::EmptyRange, "summation range has no interior");
  long z0 = r.m + 1;
  while (z0 + 1 <= r.M && summand_ratio(ctx, L, z0 + 1) > 1.0 + 1e-12) ++z0;
  return z0;
}

LogComplex tet_integer(const RootContext& ctx, long a, long b, long e, long d,
                       long c, long f) {
  const int n = ctx.n();
  SixJLabels L{Color(double(a)), Color(double(b)), Color(double(e)),
               Color(double(d)), Color(double(c)), Color(double(f))};
  BSet B = b_combinations(ctx, L);

  double pref_lg = ctx.log_fact_mag(B.dec) + ctx.log_fact_mag(B.abe) -
                   ctx.log_fact_mag(B.bdf) - ctx.log_fact_mag(B.afc);
  int pref_sign = ((n - 1 + B.afc) % 2 == 0) ? 1 : -1;
  pref_lg += ctx.log_fact_mag(B.dec) - ctx.log_fact_mag(n - 1 - B.abe);
  long lo = B.dec, hi = n - 2 - B.abe;
  if (hi >= lo) {
    for (long j = lo; j <= hi; ++j) {
      SignedLog s = brace_sl(ctx, 2 * e - j);
      if (s.sign == 0) return {-std::numeric_limits<double>::infinity(), 0.0};
      pref_lg += s.lg;
      pref_sign *= s.sign;
    }
  } else {
    for (long j = hi + 1; j <= lo - 1; ++j) {
      SignedLog s = brace_sl(ctx, 2 * e - j);
      if (s.sign == 0)
        throw Error(ErrorCode::IntegralityViolation,
                    "vanishing brace in a normalization denominator");
      pref_lg -= s.lg;
      pref_sign *= s.sign;
    }
  }

  long A_afc = a + f + c, Bacf = a + c - f, Bbfd = b + f - d;
  long Bdce = d + c - e, Bdfb = d + f - b;
  std::vector<double> lgs;
  std::vector<int> signs;
  for (long z = std::max(0L, B.dec - B.bdf); z <= std::min(B.dec, B.afc); ++z) {
    SignedLog t{0.0, (z % 2 == 0) ? 1 : -1};
    for (SignedLog part : {qbin_sl(ctx, A_afc + 1, 2 * c + z + 1),
                           qbin_sl(ctx, Bacf + z, Bacf),
                           qbin_sl(ctx, Bbfd + B.dec - z, Bbfd),
                           qbin_sl(ctx, Bdce + z, Bdfb)}) {
      t.lg += part.lg;
      t.sign *= part.sign;
    }
    if (t.sign == 0) continue;
    lgs.push_back(t.lg);
    signs.push_back(t.sign);
  }
  if (lgs.empty()) return {-std::numeric_limits<double>::infinity(), 0.0};
  double m = *std::max_element(lgs.begin(), lgs.end());
  double s = 0.0;
  for (size_t i = 0; i < lgs.size(); ++i) s += signs[i] * std::exp(lgs[i] - m);
  if (s == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
  double phase = (pref_sign * (s > 0 ? 1 : -1)) > 0 ? 0.0 : kPi;
  return {pref_lg + m + std::log(std::abs(s)), phase};
}

double orthogonality_residual(const RootContext& ctx, Color a, Color b, Color c,
                              Color d, Color e, Color g) {
  const int n = ctx.n();
  cplx base_afc = a.value + b.value + d.value - c.value;  // a+f-c at k = 0
  if (!is_near_integer(base_afc))
    throw Error(ErrorCode::IntegralityViolation, "a+b+d-c must be an integer");
  long s = std::lround(base_afc.real());
  KahanSum sum;
  for (long k = std::max(0L, s - (n - 1)); k <= std::min(long(n - 1), s); ++k) {
    Color f(b.value + d.value - double(k));
    cplx th_f = ctx.qbinom(2.0 * f.value + double(n), 2.0 * f.value + 1.0);
    cplx th_g = ctx.qbinom(2.0 * g.value + double(n), 2.0 * g.value + 1.0);
    cplx t1 = tet(ctx, {a, b, e, d, c, f});
    cplx t2 = tet(ctx, {d, b, f, a, c, g});
    sum.add(t1 * t2 / (th_f * th_g));
  }
  cplx delta = (std::abs(e.value - g.value) < 1e-9) ? 1.0 : 0.0;
  return std::abs(sum.value() - delta);
}

double pentagon_residual(const RootContext& ctx, const PentagonLabels& L) {
  const int n = ctx.n();
  cplx base = L.g.value - L.a.value;  // anchor of the h lattice
  cplx t1 = L.b.value + L.c.value - base;
  cplx t2 = (L.i.value - L.d.value) - base;
  if (!is_near_integer(t1) || !is_near_integer(t2))
    throw Error(ErrorCode::IntegralityViolation, "labels do not close the h lattice");
  long u1 = std::lround(t1.real()), u2 = std::lround(t2.real());
  long klo = std::max({0L, u1 - (n - 1), u2});
  long khi = std::min({long(n - 1), u1, u2 + n - 1});
  KahanSum lhs;
  for (long k = klo; k <= khi; ++k) {
    Color h(base + double(k));
    cplx theta_h = ctx.qbinom(2.0 * h.value + double(n), 2.0 * h.value + 1.0);
    cplx p = tet(ctx, {L.a, L.b, L.f, L.c, L.g, h});
    p *= tet(ctx, {L.a, h, L.g, L.d, L.e, L.i});
    p *= tet(ctx, {L.b, L.c, h, L.d, L.i, L.j});
    lhs.add(p / theta_h);
  }
  cplx rhs = tet(ctx, {L.f, L.c, L.g, L.d, L.e, L.j}) *
             tet(ctx, {L.a, L.b, L.f, L.j, L.e, L.i});
  return std::abs(lhs.value() - rhs) / (1.0 + std::abs(rhs));
}

SixJLabels symmetry_transform(const RootContext& ctx, const SixJLabels& L, int k) {
  auto bar = [&](Color x) { return x.complement(ctx); };
  switch (k) {
    case 0: return {L.b, bar(L.e), bar(L.a), L.c, L.f, L.d};
    case 1: return {L.f, bar(L.b), L.d, L.e, L.c, L.a};
    case 2: return {bar(L.d), bar(L.b), bar(L.f), bar(L.a), bar(L.c), bar(L.e)};
    case 3: return {L.c, bar(L.f), L.a, L.b, L.e, bar(L.d)};
    case 4: return {L.d, L.e, L.c, bar(L.a), L.f, L.b};
    case 5: return {L.e, L.d, L.c, bar(L.f), L.a, bar(L.b)};
  }
  throw Error(ErrorCode::BadInput, "symmetry index outside 0..5");
}

std::array<double, 6> symmetry_residuals(const RootContext& ctx, const SixJLabels& L) {
  cplx ref = tet(ctx, L);
  std::array<double, 6> out{};
  for (int k = 0; k < 6; ++k) {
    cplx v = tet(ctx, symmetry_transform(ctx, L, k));
    out[k] = std::abs(v - ref) / (1.0 + std::abs(ref));
  }
  return out;
}

}  // namespace q6j

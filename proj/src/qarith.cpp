#include "q6j/qarith.hpp"

#include <numbers>

namespace q6j {

namespace {
constexpr double kPi = std::numbers::pi;
}

long round_to_integer(cplx z, const char* what) {
  if (!is_near_integer(z)) {
    throw Error(ErrorCode::NonIntegerDifference,
                std::string(what) + " = (" + std::to_string(z.real()) + "," +
                    std::to_string(z.imag()) + ") is not an integer");
  }
  return std::lround(z.real());
}

RootContext::RootContext(int n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::BadInput, "n must be >= 2");
  xi_ = std::exp(cplx(0.0, kPi / n));
  prefix_.assign(2 * static_cast<size_t>(n), 0.0);
  for (long j = 1; j < 2L * n; ++j) {
    double term = (j == n) ? 0.0 : std::log(std::abs(2.0 * std::sin(j * kPi / n)));
    prefix_[j] = prefix_[j - 1] + term;
  }
}

cplx RootContext::xi_pow(cplx a) const {
  return std::exp(cplx(0.0, kPi / n_) * a);
}

cplx RootContext::brace(cplx a) const { return xi_pow(a) - xi_pow(-a); }

cplx RootContext::qint(cplx a) const { return brace(a) / brace(1.0); }

cplx RootContext::qfact(long k) const {
  if (k < 0) throw Error(ErrorCode::BadInput, "factorial of negative index");
  cplx p = 1.0;
  for (long j = 1; j <= k; ++j) p *= brace(cplx(static_cast<double>(j), 0.0));
  return p;
}

cplx RootContext::qpoch(cplx a, long k) const {
  if (k < 0) throw Error(ErrorCode::BadInput, "Pochhammer of negative length");
  cplx p = 1.0;
  for (long j = 0; j < k; ++j) p *= brace(a - cplx(static_cast<double>(j), 0.0));
  return p;
}

cplx RootContext::qbinom(cplx a, cplx b) const {
  long k = round_to_integer(a - b, "binomial difference");
  if (k < 0 || k > n_ - 1) {
    throw Error(ErrorCode::NonIntegerDifference,
                "binomial difference " + std::to_string(k) + " outside [0, n-1]");
  }
  return qpoch(a, k) / qfact(k);
}

double RootContext::log_sin_sum(long k) const {
  if (k < 0 || k > 2L * n_) throw Error(ErrorCode::BadInput, "k outside [0, 2n]");
  if (k >= n_) {
    throw Error(ErrorCode::ZeroFactor,
                "sin(j*pi/n) vanishes at j = n <= " + std::to_string(k));
  }
  return prefix_[k];
}

double RootContext::log_abs_sin_term(long j) const {
  if (j <= 0 || j >= 2L * n_ || j == n_)
    throw Error(ErrorCode::ZeroFactor, "log|2 sin| undefined at j = " + std::to_string(j));
  return prefix_[j] - prefix_[j - 1];
}

double RootContext::log_qbinom_int(long x, long y) const {
  if (y < 0 || x > n_ - 1 || x - y < 0 || x - y > n_ - 1)
    throw Error(ErrorCode::BadInput, "integer binomial outside its positive range");
  return prefix_[x] - prefix_[y] - prefix_[x - y];
}

double RootContext::log_fact_mag(long k) const {
  if (k < 0 || k >= n_) throw Error(ErrorCode::ZeroFactor, "log factorial needs 0 <= k < n");
  return prefix_[k];
}

double cg_sum_identity_residual(const RootContext& ctx, cplx a, cplx b, long c,
                                int sign) {
  if (c < 0 || c > ctx.n() - 1)
    throw Error(ErrorCode::BadInput, "c must lie in [0, n-1]");
  double sgn = sign >= 0 ? 1.0 : -1.0;
  KahanSum lhs;
  for (long s = 0; s <= c; ++s) {
    cplx term = ctx.xi_pow(sgn * (a + b - cplx(double(c), 0) + 2.0) * double(s));
    term *= ctx.qbinom(a - double(s), a - double(c));
    term *= ctx.qbinom(b + double(s), b);
    lhs.add(term);
  }
  cplx rhs = ctx.xi_pow(sgn * (b + 1.0) * double(c)) *
             ctx.qbinom(a + b + 1.0, a + b - double(c) + 1.0);
  return std::abs(lhs.value() - rhs) / (1.0 + std::abs(rhs));
}

}  // namespace q6j

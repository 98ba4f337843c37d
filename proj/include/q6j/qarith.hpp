#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "q6j/error.hpp"

namespace q6j {

using cplx = std::complex<double>;

constexpr double kIntegerTol = 1e-9;

// exp(log_magnitude + i*phase); overflow-safe carrier for long brace products.
struct LogComplex {
  double log_magnitude = 0.0;
  double phase = 0.0;

  static LogComplex from_complex(cplx z) {
    return {std::log(std::abs(z)), std::arg(z)};
  }
  cplx to_complex() const {
    return std::exp(log_magnitude) * cplx(std::cos(phase), std::sin(phase));
  }
  LogComplex& operator*=(const LogComplex& o) {
    log_magnitude += o.log_magnitude;
    phase += o.phase;
    return *this;
  }
  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
  LogComplex inverse() const { return {-log_magnitude, -phase}; }
};

// Compensated (Kahan) accumulator for complex terms.
class KahanSum {
 public:
  void add(cplx x) {
    cplx y = x - comp_;
    cplx t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  cplx value() const { return sum_; }

 private:
  cplx sum_{0.0, 0.0};
  cplx comp_{0.0, 0.0};
};

inline bool is_near_integer(double x, double tol = kIntegerTol) {
  return std::abs(x - std::round(x)) < tol;
}

inline bool is_near_integer(cplx z, double tol = kIntegerTol) {
  return std::abs(z.imag()) < tol && is_near_integer(z.real(), tol);
}

// Requires the value to be near-integer; rounds it.
long round_to_integer(cplx z, const char* what);

inline bool is_half_integer(cplx z, double tol = kIntegerTol) {
  return std::abs(z.imag()) < tol &&
         std::abs(2.0 * z.real() - std::round(2.0 * z.real())) < 2 * tol;
}

// The integer n >= 2 together with the primitive 2n-th root of unity
// xi = exp(i*pi/n) and a table of partial sums of log(2 sin(j*pi/n)).
class RootContext {
 public:
  explicit RootContext(int n);

  int n() const { return n_; }
  cplx xi() const { return xi_; }

  // exp(i*pi*a/n) for complex exponent a.
  cplx xi_pow(cplx a) const;

  // {a} = xi^a - xi^{-a} = 2i sin(a*pi/n).
  cplx brace(cplx a) const;

  // [a] = {a}/{1}.
  cplx qint(cplx a) const;

  // {k}! = prod_{j=1..k} {j}; {0}! = 1. Zero for k >= n.
  cplx qfact(long k) const;

  // {a, a-k} = prod_{j=0..k-1} {a-j}.
  cplx qpoch(cplx a, long k) const;

  // {a,b}/{a-b}!; requires a-b integer in [0, n-1].
  cplx qbinom(cplx a, cplx b) const;

  // sum_{j=1..k} log(2 sin(j*pi/n)); ZeroFactor if the range hits a
  // multiple of n.
  double log_sin_sum(long k) const;

  // log |2 sin(j*pi/n)| and the sign of sin, defined for 0 < j < 2n, j != n.
  double log_abs_sin_term(long j) const;
  int sin_sign(long j) const { return (j % (2L * n_)) > n_ ? -1 : 1; }

  // Signed log form of {x,y}/{x-y}! for integer 0 <= y <= x <= n-1:
  // positive real, returned as its natural log.
  double log_qbinom_int(long x, long y) const;

  // log {k}! magnitude (k < n), i.e. sum of log(2 sin) terms; the i^k
  // phase is tracked by callers.
  double log_fact_mag(long k) const;

 private:
  int n_;
  cplx xi_;
  // prefix_[k] = sum_{j=1..k} log|2 sin(j*pi/n)| for 0 <= k <= 2n-1
  // (the j = n term is skipped and flagged by callers).
  std::vector<double> prefix_;
};

// Both sides of the binomial convolution identity
//   sum_{s=0..c} xi^{±(a+b-c+2)s} qbin(a-s, a-c) qbin(b+s, b)
//     = xi^{±(b+1)c} qbin(a+b+1, a+b-c+1),
// returned as |LHS-RHS| / (1 + |RHS|).
double cg_sum_identity_residual(const RootContext& ctx, cplx a, cplx b, long c,
                                int sign);

}  // namespace q6j

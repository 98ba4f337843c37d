#include <doctest.h>

#include "q6j/instances.hpp"
#include "q6j/parallel.hpp"
#include "q6j/verify.hpp"

using namespace q6j;

TEST_CASE("parallel log-sum-exp matches the serial reference") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> v(3000);
    for (double& x : v) x = rng.uniform(-700, 700);
    double s = log_sum_exp(v);
    double p = log_sum_exp_parallel(v);
    CHECK(std::abs(s - p) < 1e-12 * (1 + std::abs(s)));
  }
}

TEST_CASE("parallel symbol evaluation matches the serial reference") {
  Rng rng(11);
  RootContext ctx(3000);
  for (int trial = 0; trial < 10; ++trial) {
    AdmissibleSixJ L = random_admissible_labels(ctx, rng);
    LogComplex s = tet_admissible(ctx, L, true, false);
    LogComplex p = tet_admissible(ctx, L, true, true);
    CHECK(std::abs(s.log_magnitude - p.log_magnitude) < 1e-12 * (1 + std::abs(s.log_magnitude)));
    CHECK(s.phase == p.phase);
  }
}

TEST_CASE("suite reports are deterministic and scheduling-independent") {
  VerifyConfig serial{3, 42, 0.0, false};
  VerifyConfig parallel{3, 42, 0.0, true};
  auto a = verify_suite("sixj", serial);
  auto b = verify_suite("sixj", parallel);
  auto c = verify_suite("sixj", parallel);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].residual == b[i].residual);  // bit-identical
    CHECK(b[i].residual == c[i].residual);
  }
}

#include <chrono>
#include <cstdio>
#include <vector>

#include "q6j/instances.hpp"
#include "q6j/parallel.hpp"
#include "q6j/verify.hpp"
#include "q6j/volume.hpp"

using namespace q6j;

namespace {

double now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_it(F&& f, int reps) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) {
    double t0 = now();
    f();
    best = std::min(best, now() - t0);
  }
  return best;
}

}  // namespace

int main() {
  std::printf("single-sign symbol evaluation, batch of 512 admissible label sets\n");
  std::printf("%8s %12s %12s %12s %9s\n", "n", "serial[s]", "inner-omp[s]", "batch-omp[s]", "speedup");
  for (int n : {2000, 8000, 32000}) {
    RootContext ctx(n);
    Rng rng(7);
    std::vector<AdmissibleSixJ> batch;
    for (int i = 0; i < 512; ++i) batch.push_back(random_admissible_labels(ctx, rng));
    std::vector<double> acc(batch.size());
    // one evaluation per label set; the batch is where the parallelism pays
    auto run_inner = [&](bool parallel) {
      for (size_t i = 0; i < batch.size(); ++i)
        acc[i] = tet_admissible(ctx, batch[i], true, parallel).log_magnitude;
    };
    auto run_batch = [&] {
      for_each_index(batch.size(), true, [&](size_t i) {
        acc[i] = tet_admissible(ctx, batch[i], true, false).log_magnitude;
      });
    };
    double ts = time_it([&] { run_inner(false); }, 3);
    double ti = time_it([&] { run_inner(true); }, 3);
    double tb = time_it(run_batch, 3);
    std::printf("%8d %12.4f %12.4f %12.4f %8.2fx\n", n, ts, ti, tb, ts / tb);
  }

  std::printf("\nidentity suite, all modules\n");
  std::printf("%8s %12s %12s %9s\n", "n", "serial[s]", "openmp[s]", "speedup");
  for (int n : {3, 5}) {
    auto run = [&](bool parallel) {
      auto res = verify_suite("all", {n, 1, 0.0, parallel});
      if (!all_passed(res)) std::printf("  (suite failure!)\n");
    };
    double ts = time_it([&] { run(false); }, 2);
    double tp = time_it([&] { run(true); }, 2);
    std::printf("%8d %12.3f %12.3f %8.2fx\n", n, ts, tp, ts / tp);
  }
  return 0;
}

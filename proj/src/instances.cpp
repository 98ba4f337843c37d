#include "q6j/instances.hpp"

#include <Eigen/QR>

#include "q6j/cgc.hpp"

namespace q6j {

namespace {

cplx potential(Rng& rng) { return {rng.uniform(0.0, 1.0), rng.uniform(-0.3, 0.3)}; }

bool all_regular(std::initializer_list<Color> cs) {
  for (const Color& c : cs)
    if (!c.regular()) return false;
  return true;
}

}  // namespace

SixJLabels random_sixj_labels(const RootContext& ctx, Rng& rng) {
  const int n = ctx.n();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    long r1 = rng.uniform_int(0, n - 1), r2 = rng.uniform_int(0, n - 1),
         r3 = rng.uniform_int(0, n - 1);
    long r4 = r2 + r3 - r1;
    if (r4 < 0 || r4 > n - 1) continue;
    cplx v1 = potential(rng), v2 = potential(rng), v3 = potential(rng), v4 = potential(rng);
    SixJLabels L{Color(v1 - v2),               // a
                 Color(v2 - v3),               // b
                 Color(v1 - v3 - double(r1)),  // e
                 Color(v3 - v4 + double(r3)),  // d
                 Color(v1 - v4 - double(r2)),  // c
                 Color(v2 - v4)};              // f
    if (!all_regular({L.a, L.b, L.e, L.d, L.c, L.f})) continue;
    return L;
  }
  throw Error(ErrorCode::BadInput, "failed to sample a valid label set");
}

OrthogonalityInstance random_orthogonality_instance(const RootContext& ctx, Rng& rng,
                                                    bool equal) {
  const int n = ctx.n();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Color a(potential(rng)), b(potential(rng)), d(potential(rng));
    long r1 = rng.uniform_int(0, n - 1), r4 = rng.uniform_int(0, n - 1);
    long r1g = equal ? r1 : rng.uniform_int(0, n - 1);
    if (!equal && r1g == r1) continue;
    long dgc = r1 + r4 - r1g;
    if (dgc < 0 || dgc > n - 1) continue;
    Color e(a.value + b.value - double(r1));
    Color c(d.value + e.value - double(r4));
    Color g(a.value + b.value - double(r1g));
    if (!all_regular({a, b, c, d, e, g})) continue;
    return {a, b, c, d, e, g};
  }
  throw Error(ErrorCode::BadInput, "failed to sample an orthogonality instance");
}

PentagonLabels random_pentagon_instance(const RootContext& ctx, Rng& rng) {
  const int n = ctx.n();
  for (int attempt = 0; attempt < 20000; ++attempt) {
    long k[5][5];
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) k[i][j] = rng.uniform_int(0, n - 1);
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i + 1; j < 5 && ok; ++j)
        for (int l = j + 1; l < 5 && ok; ++l) {
          long combo = k[i][j] + k[j][l] - k[i][l];
          ok = combo >= 0 && combo <= n - 1;
        }
    if (!ok) continue;
    cplx v[5];
    for (auto& x : v) x = potential(rng);
    auto edge = [&](int i, int j) { return Color(v[i] - v[j] + double(k[i][j])); };
    // edges on vertices 1..5 (0-indexed): a=12, b=23, f=13, c=34, g=14,
    // d=45, e=15, i=25, j=35; the summed label h lives on 24.
    PentagonLabels L{edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 4), edge(0, 4),
                     edge(0, 2), edge(0, 3), edge(1, 4), edge(2, 4)};
    if (!all_regular({L.a, L.b, L.c, L.d, L.e, L.f, L.g, L.i, L.j})) continue;
    if (!Color(v[1] - v[3] + double(k[1][3])).regular()) continue;  // h anchor
    return L;
  }
  throw Error(ErrorCode::BadInput, "failed to sample a pentagon instance");
}

AdmissibleSixJ random_admissible_labels(const RootContext& ctx, Rng& rng) {
  const int n = ctx.n();
  // n = 4 admits no strictly admissible triple: labels must lie in {1, 2}
  // and every such triple breaks one of the strict bounds.
  if (n < 3 || n == 4)
    throw Error(ErrorCode::BadInput, "no admissible labels exist at this n");
  for (int attempt = 0; attempt < 200000; ++attempt) {
    AdmissibleSixJ L{rng.uniform_int(1, n - 2), rng.uniform_int(1, n - 2),
                     rng.uniform_int(1, n - 2), rng.uniform_int(1, n - 2),
                     rng.uniform_int(1, n - 2), rng.uniform_int(1, n - 2)};
    if (admissible_triple(n, L.a, L.b, L.e) && admissible_triple(n, L.a, L.c, L.f) &&
        admissible_triple(n, L.b, L.d, L.f) && admissible_triple(n, L.c, L.d, L.e))
      return L;
  }
  throw Error(ErrorCode::BadInput, "failed to sample admissible labels");
}

double sixj_definition_residual(const RootContext& ctx, Color a, Color b, Color e,
                                Color d, Color c) {
  const int n = ctx.n();
  // left bracketing: V^c -> V^e (x) V^d -> (V^a (x) V^b) (x) V^d
  RepOperator idd = RepOperator::identity(ctx, {d});
  Mat lhs = inclusion(ctx, a, b, e).tensor(idd).compose(inclusion(ctx, e, d, c)).matrix;
  Eigen::Map<Eigen::VectorXcd> rhs_vec(lhs.data(), lhs.size());

  cplx base_afc = a.value + b.value + d.value - c.value;
  long s = std::lround(base_afc.real());
  std::vector<Color> fs;
  for (long kk = std::max(0L, s - (n - 1)); kk <= std::min(long(n - 1), s); ++kk) {
    Color f(b.value + d.value - double(kk));
    if (f.regular()) fs.push_back(f);
  }
  if (fs.empty()) throw Error(ErrorCode::InadmissibleTriple, "no intermediate labels");

  RepOperator ida = RepOperator::identity(ctx, {a});
  Mat basis(lhs.size(), fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    Mat m = ida.tensor(inclusion(ctx, b, d, fs[i])).compose(inclusion(ctx, a, fs[i], c)).matrix;
    basis.col(i) = Eigen::Map<Eigen::VectorXcd>(m.data(), m.size());
  }
  Eigen::VectorXcd coef = basis.colPivHouseholderQr().solve(rhs_vec);
  double resid = (basis * coef - rhs_vec).norm() / (1.0 + rhs_vec.norm());
  for (size_t i = 0; i < fs.size(); ++i) {
    cplx formula = sixj(ctx, {a, b, e, d, c, fs[i]});
    resid = std::max(resid, std::abs(coef(i) - formula) / (1.0 + std::abs(formula)));
  }
  return resid;
}

}  // namespace q6j

#include "q6j/verify.hpp"

#include <algorithm>
#include <functional>

#include "q6j/cgc.hpp"
#include "q6j/diagrams.hpp"
#include "q6j/graphinv.hpp"
#include "q6j/instances.hpp"
#include "q6j/parallel.hpp"
#include "q6j/rng.hpp"
#include "q6j/sixj.hpp"

namespace q6j {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= uint64_t(uint8_t(c));
    h *= 1099511628211ULL;
  }
  return h;
}

struct Check {
  std::string id;
  double tolerance;
  std::function<double(const RootContext&, Rng&)> run;  // returns residual
};

double rel(double diff, double scale) { return diff / (1.0 + scale); }

double relc(cplx got, cplx want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

// ---- qarith ----------------------------------------------------------

void add_qarith(std::vector<Check>& cs) {
  cs.push_back({"qarith.brace_reflection", 1e-12, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      cplx a(rng.uniform(-3, 3), rng.uniform(-1, 1));
      worst = std::max(worst, std::abs(ctx.brace(a) - ctx.brace(double(ctx.n()) - a)));
    }
    return worst;
  }});
  cs.push_back({"qarith.fact_complement", 1e-10, [](const RootContext& ctx, Rng&) {
    cplx expect = std::pow(cplx(0, 1), ctx.n() - 1) * double(ctx.n());
    double worst = 0;
    for (int a = 0; a <= ctx.n() - 1; ++a)
      worst = std::max(worst, std::abs(ctx.qfact(a) * ctx.qfact(ctx.n() - 1 - a) - expect) /
                                  std::abs(expect));
    return worst;
  }});
  cs.push_back({"qarith.binom_mirror", 1e-10, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      cplx b(rng.uniform(-2, 2), rng.uniform(-1, 1));
      long k = rng.uniform_int(0, ctx.n() - 1);
      cplx a = b + double(k);
      cplx lhs = ctx.qbinom(a, b);
      worst = std::max(worst, relc(ctx.qbinom(double(ctx.n() - 1) - b, double(ctx.n() - 1) - a), lhs));
    }
    return worst;
  }});
  cs.push_back({"qarith.binom_shift", 1e-10, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      cplx b(rng.uniform(-2, 2), rng.uniform(-1, 1));
      long k = rng.uniform_int(0, ctx.n() - 1);
      cplx a = b + double(k);
      cplx sign = (k % 2 == 0) ? 1.0 : -1.0;
      worst = std::max(worst, relc(sign * ctx.qbinom(a - double(ctx.n()), b - double(ctx.n())),
                                   ctx.qbinom(a, b)));
    }
    return worst;
  }});
  cs.push_back({"qarith.binom_convolution", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      cplx a(rng.uniform(-2, 4), rng.uniform(-0.5, 0.5));
      cplx b(rng.uniform(-2, 4), rng.uniform(-0.5, 0.5));
      long c = rng.uniform_int(0, ctx.n() - 1);
      int sign = rng.next_u64() & 1 ? 1 : -1;
      worst = std::max(worst, cg_sum_identity_residual(ctx, a, b, c, sign));
    }
    return worst;
  }});
  cs.push_back({"qarith.logspace_product", 1e-10, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
      cplx direct = 1.0;
      LogComplex lp{0, 0};
      for (int j = 0; j < 12; ++j) {
        cplx f = ctx.brace(cplx(rng.uniform(0.2, ctx.n() - 0.2), rng.uniform(-0.4, 0.4)));
        direct *= f;
        lp *= LogComplex::from_complex(f);
      }
      worst = std::max(worst, std::abs(lp.to_complex() - direct) / std::abs(direct));
    }
    return worst;
  }});
}

// ---- repcat ----------------------------------------------------------

void add_repcat(std::vector<Check>& cs) {
  cs.push_back({"repcat.defining_relations", 1e-10, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      Color a(rng.regular_color());
      auto g = generators(ctx, a);
      Mat Kinv = g.K.matrix.inverse();
      Mat comm = g.E.matrix * g.F.matrix - g.F.matrix * g.E.matrix;
      Mat rhs = (g.K.matrix * g.K.matrix - Kinv * Kinv) / (ctx.xi() - 1.0 / ctx.xi());
      worst = std::max(worst, rel((comm - rhs).norm(), rhs.norm()));
      worst = std::max(worst, rel((g.K.matrix * g.E.matrix - ctx.xi() * g.E.matrix * g.K.matrix).norm(),
                                  g.E.matrix.norm()));
      worst = std::max(worst, rel((g.K.matrix * g.F.matrix - g.F.matrix * g.K.matrix / ctx.xi()).norm(),
                                  g.F.matrix.norm()));
    }
    return worst;
  }});
  cs.push_back({"repcat.rmatrix_intertwines", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      Color a(rng.regular_color()), b(rng.regular_color());
      Mat R = rmatrix(ctx, a, b).matrix;
      for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        Mat dab = coproduct_action(ctx, g, a, b).matrix;
        Mat dba = coproduct_action(ctx, g, b, a).matrix;
        worst = std::max(worst, rel((R * dab - dba * R).norm(), R.norm()));
      }
    }
    return worst;
  }});
  cs.push_back({"repcat.yang_baxter", 1e-8, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    int reps = ctx.n() <= 5 ? 20 : 8;
    for (int i = 0; i < reps; ++i) {
      Color a(rng.regular_color()), b(rng.regular_color()), c(rng.regular_color());
      RepOperator Rab = rmatrix(ctx, a, b), Rac = rmatrix(ctx, a, c), Rbc = rmatrix(ctx, b, c);
      RepOperator ia = RepOperator::identity(ctx, {a});
      RepOperator ib = RepOperator::identity(ctx, {b});
      RepOperator ic = RepOperator::identity(ctx, {c});
      Mat lhs = Rbc.tensor(ia).compose(ib.tensor(Rac)).compose(Rab.tensor(ic)).matrix;
      Mat rhs = ic.tensor(Rab).compose(Rac.tensor(ib)).compose(ia.tensor(Rbc)).matrix;
      worst = std::max(worst, rel((lhs - rhs).norm(), rhs.norm()));
    }
    return worst;
  }});
  cs.push_back({"repcat.duality", 1e-10, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      Color x(rng.regular_color());
      Color xb = x.complement(ctx);
      RepOperator cp = cap(ctx, x), cu = cup(ctx, xb);
      for (Gen g : {Gen::E, Gen::F})
        worst = std::max(worst, (cp.matrix * coproduct_action(ctx, g, x, xb).matrix).norm());
      worst = std::max(worst,
                       (cp.matrix * coproduct_action(ctx, Gen::K, x, xb).matrix - cp.matrix).norm());
      RepOperator idx = RepOperator::identity(ctx, {x});
      Mat zig = cp.tensor(idx).compose(idx.tensor(cu)).matrix;
      worst = std::max(worst, (zig - idx.matrix).norm());
    }
    return worst;
  }});
  cs.push_back({"repcat.rmatrix_invertible", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      Color a(rng.regular_color()), b(rng.regular_color());
      RepOperator R = rmatrix(ctx, a, b);
      RepOperator Rinv = rmatrix_inverse(ctx, b, a);
      Mat prod = Rinv.compose(R).matrix;
      worst = std::max(worst, (prod - Mat::Identity(prod.rows(), prod.cols())).norm());
    }
    return worst;
  }});
}

// ---- cgc -------------------------------------------------------------

Color rng_color(Rng& rng) { return Color(rng.regular_color()); }

struct CTriple {
  Color a, b, c;
};

CTriple rng_triple(const RootContext& ctx, Rng& rng) {
  while (true) {
    Color a = rng_color(rng), b = rng_color(rng);
    Color c(a.value + b.value - double(rng.uniform_int(0, ctx.n() - 1)));
    if (c.regular()) return {a, b, c};
  }
}

void add_cgc(std::vector<Check>& cs) {
  cs.push_back({"cgc.weight_conservation", 0.0, [](const RootContext& ctx, Rng& rng) {
    CTriple t = rng_triple(ctx, rng);
    long m = std::lround((t.a.value + t.b.value - t.c.value).real());
    double worst = 0;
    for (int u = 0; u < ctx.n(); ++u)
      for (int v = 0; v < ctx.n(); ++v)
        for (int w = 0; w < ctx.n(); ++w)
          if (u + v - w != m)
            worst = std::max(worst, std::abs(cgqc(ctx, {t.a, t.b, t.c, u, v, w})));
    return worst;
  }});
  cs.push_back({"cgc.module_map", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 8; ++i) {
      CTriple t = rng_triple(ctx, rng);
      RepOperator Y = inclusion(ctx, t.a, t.b, t.c);
      auto gc = generators(ctx, t.c);
      for (Gen g : {Gen::E, Gen::F, Gen::K}) {
        const Mat& xc = (g == Gen::E ? gc.E : g == Gen::F ? gc.F : gc.K).matrix;
        Mat resid = coproduct_action(ctx, g, t.a, t.b).matrix * Y.matrix - Y.matrix * xc;
        worst = std::max(worst, rel(resid.norm(), Y.matrix.norm()));
      }
    }
    return worst;
  }});
  cs.push_back({"cgc.bend_identity", 1e-9, [](const RootContext& ctx, Rng& rng) {
    const int n = ctx.n();
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      CTriple t = rng_triple(ctx, rng);
      long m = std::lround((t.a.value + t.b.value - t.c.value).real());
      int u = int(rng.uniform_int(0, n - 1)), v = int(rng.uniform_int(0, n - 1));
      int w = u + v - int(m);
      if (w < 0 || w >= n) continue;
      cplx lhs = cgqc(ctx, {Color(double(n - 1) - t.a.value), t.c, t.b, n - 1 - u, w, v}) *
                 ctx.xi_pow(-t.a.value * double(n - 1)) * ctx.xi_pow(double((n - 1) * u));
      cplx rhs = cgqc(ctx, {t.c, Color(double(n - 1) - t.b.value), t.a, w, n - 1 - v, u}) *
                 ctx.xi_pow(-(double(n - 1) - t.b.value) * double(n - 1)) *
                 ctx.xi_pow(double((n - 1) * (n - 1 - v)));
      worst = std::max(worst, relc(lhs, rhs));
    }
    return worst;
  }});
  cs.push_back({"cgc.theta_closed_form", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      CTriple t = rng_triple(ctx, rng);  // t.a + t.b - t.c is in range
      RepOperator comp =
          projection(ctx, t.a, t.b, t.c).compose(inclusion(ctx, t.a, t.b, t.c));
      cplx closed = ctx.qbinom(2.0 * t.c.value + double(ctx.n()), 2.0 * t.c.value + 1.0);
      worst = std::max(worst, rel((comp.matrix - closed * Mat::Identity(ctx.n(), ctx.n())).norm(),
                                  std::abs(closed)));
    }
    return worst;
  }});
  cs.push_back({"cgc.identity_decomposition", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      Color a = rng_color(rng), b = rng_color(rng);
      if (is_half_integer(a.value + b.value, 1e-6)) continue;
      worst = std::max(worst, identity_decomposition_residual(ctx, a, b));
    }
    return worst;
  }});
}

// ---- sixj ------------------------------------------------------------

void add_sixj(std::vector<Check>& cs) {
  cs.push_back({"sixj.definition_vs_formula", 1e-8, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    int reps = ctx.n() <= 4 ? 20 : 6;
    for (int i = 0; i < reps; ++i) {
      SixJLabels L = random_sixj_labels(ctx, rng);
      worst = std::max(worst, sixj_definition_residual(ctx, L.a, L.b, L.e, L.d, L.c));
    }
    return worst;
  }});
  cs.push_back({"sixj.orthogonality_diagonal", 1e-8, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 8; ++i) {
      auto in = random_orthogonality_instance(ctx, rng, true);
      worst = std::max(worst, orthogonality_residual(ctx, in.a, in.b, in.c, in.d, in.e, in.g));
    }
    return worst;
  }});
  cs.push_back({"sixj.orthogonality_offdiagonal", 1e-8, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 8; ++i) {
      auto in = random_orthogonality_instance(ctx, rng, false);
      worst = std::max(worst, orthogonality_residual(ctx, in.a, in.b, in.c, in.d, in.e, in.g));
    }
    return worst;
  }});
  cs.push_back({"sixj.pentagon", 1e-8, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 6; ++i)
      worst = std::max(worst, pentagon_residual(ctx, random_pentagon_instance(ctx, rng)));
    return worst;
  }});
  for (int k = 0; k < 6; ++k) {
    cs.push_back({"sixj.symmetry_" + std::to_string(k + 1), 1e-8,
                  [k](const RootContext& ctx, Rng& rng) {
      double worst = 0;
      for (int i = 0; i < 10; ++i) {
        SixJLabels L = random_sixj_labels(ctx, rng);
        cplx ref = tet(ctx, L);
        worst = std::max(worst, relc(tet(ctx, symmetry_transform(ctx, L, k)), ref));
      }
      return worst;
    }});
  }
  cs.push_back({"sixj.symmetry_involution", 1e-12, [](const RootContext& ctx, Rng& rng) {
    SixJLabels L = random_sixj_labels(ctx, rng);
    SixJLabels tw = symmetry_transform(ctx, symmetry_transform(ctx, L, 2), 2);
    double worst = 0;
    for (auto [x, y] : {std::pair{tw.a, L.a}, {tw.b, L.b}, {tw.e, L.e},
                        {tw.d, L.d}, {tw.c, L.c}, {tw.f, L.f}})
      worst = std::max(worst, std::abs(x.value - y.value));
    return worst;
  }});
  cs.push_back({"sixj.single_sign_equivalence", 1e-8, [](const RootContext& ctx, Rng& rng) {
    if (ctx.n() < 3 || ctx.n() == 4) return 0.0;  // no admissible labels
    double worst = 0;
    for (int i = 0; i < 10; ++i) {
      AdmissibleSixJ L = random_admissible_labels(ctx, rng);
      cplx direct = tet(ctx, L.to_labels());
      worst = std::max(worst, relc(tet_admissible(ctx, L, i % 2 == 0).to_complex(), direct));
      auto terms = summands_complex(ctx, L);
      for (const cplx& t : terms)
        if (t.real() <= 0 || std::abs(t.imag()) > 1e-10 * std::abs(t)) worst = 1.0;
    }
    return worst;
  }});
}

// ---- graphinv --------------------------------------------------------

void add_graphinv(std::vector<Check>& cs) {
  using namespace diagrams;
  cs.push_back({"graphinv.theta_is_one", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      SixJLabels L = random_sixj_labels(ctx, rng);
      for (char cut : {'a', 'b', 'c'})
        worst = std::max(worst,
                         std::abs(invariant(ctx, theta(L.e.value, L.a.value, L.b.value, cut)) - 1.0));
    }
    return worst;
  }});
  cs.push_back({"graphinv.cut_independence", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      SixJLabels L = random_sixj_labels(ctx, rng);
      TetColors col{L.a.value, L.b.value, L.c.value, L.d.value, L.e.value, L.f.value};
      cplx ref = invariant(ctx, tetrahedron(col, 'a'));
      for (char cut : {'b', 'c', 'd', 'e', 'f'})
        worst = std::max(worst, relc(invariant(ctx, tetrahedron(col, cut)), ref));
    }
    return worst;
  }});
  cs.push_back({"graphinv.tet_graph_vs_symbol", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      SixJLabels L = random_sixj_labels(ctx, rng);
      TetColors col{L.a.value, L.b.value, L.c.value, L.d.value, L.e.value, L.f.value};
      worst = std::max(worst, relc(invariant(ctx, tetrahedron(col, 'e')), tet(ctx, L)));
    }
    return worst;
  }});
  cs.push_back({"graphinv.face_equals_tangle", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      cplx k = rng.regular_color(), a = rng.regular_color();
      SixJLabels L = random_sixj_labels(ctx, rng);
      TetColors col{L.a.value, L.b.value, L.c.value, L.d.value, L.e.value, L.f.value};
      std::vector<MorseDiagram> menagerie{
          unknot(k), hopf(k, a), trefoil(k),
          theta(L.e.value, L.a.value, L.b.value, 'a'), tetrahedron(col, 'e')};
      for (const MorseDiagram& d : menagerie) {
        cplx t = invariant(ctx, d);
        worst = std::max(worst, relc(face_invariant(ctx, d), t));
      }
    }
    return worst;
  }});
  cs.push_back({"graphinv.boundary_independence", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      cplx k = rng.regular_color(), a = rng.regular_color();
      FaceModel fm(ctx, hopf(k, a));
      cplx z1 = fm.state_sum(cplx(0.15, 0.02), cplx(0.15, 0.02) + k);
      long l = rng.uniform_int(0, ctx.n() - 1);
      cplx a0(rng.uniform(0.05, 0.45), rng.uniform(0.01, 0.2));
      cplx z2 = fm.state_sum(a0, a0 + k - double(l));
      worst = std::max(worst, relc(z2, z1));
    }
    return worst;
  }});
  cs.push_back({"graphinv.reidemeister_one_framing", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 5; ++i) {
      cplx k = rng.regular_color();
      cplx t = k * (k + 1.0 - double(ctx.n()));
      worst = std::max(worst, std::abs(tangle_scalar(ctx, unknot_curl(k, +1)) - ctx.xi_pow(2.0 * t)));
      worst = std::max(worst, std::abs(tangle_scalar(ctx, unknot_curl(k, -1)) - ctx.xi_pow(-2.0 * t)));
    }
    return worst;
  }});
  cs.push_back({"graphinv.reidemeister_two", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      cplx k = rng.regular_color();
      MorseDiagram tre = trefoil(k), rr = trefoil(k);
      Event plus{Event::Kind::Crossing, 0, "", true, +1, {}, {}, {}};
      Event minus{Event::Kind::Crossing, 0, "", true, -1, {}, {}, {}};
      rr.events.insert(rr.events.begin() + 2, {plus, minus});
      worst = std::max(worst, relc(tangle_scalar(ctx, rr), tangle_scalar(ctx, tre)));
    }
    return worst;
  }});
  cs.push_back({"graphinv.reidemeister_three", 1e-9, [](const RootContext& ctx, Rng& rng) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      cplx k = rng.regular_color();
      MorseDiagram b1 = figure_eight(k), b2 = figure_eight(k);
      b1.events.clear();
      b2.events.clear();
      for (auto* d : {&b1, &b2}) {
        d->events.push_back(Event{Event::Kind::Max, 1, "K", true, +1, {}, {}, {}});
        d->events.push_back(Event{Event::Kind::Max, 2, "K", true, +1, {}, {}, {}});
      }
      for (int pos : {0, 1, 0})
        b1.events.push_back(Event{Event::Kind::Crossing, pos, "", true, +1, {}, {}, {}});
      for (int pos : {1, 0, 1})
        b2.events.push_back(Event{Event::Kind::Crossing, pos, "", true, +1, {}, {}, {}});
      for (auto* d : {&b1, &b2}) {
        d->events.push_back(Event{Event::Kind::Min, 2, "", true, +1, {}, {}, {}});
        d->events.push_back(Event{Event::Kind::Min, 1, "", true, +1, {}, {}, {}});
      }
      worst = std::max(worst, relc(tangle_scalar(ctx, b2), tangle_scalar(ctx, b1)));
    }
    return worst;
  }});
  cs.push_back({"graphinv.midpoint_binomial_limit", 1e-4, [](const RootContext& ctx, Rng&) {
    double half = (ctx.n() - 1) / 2.0 + 1e-6;
    cplx got = ctx.qbinom(2.0 * half + double(ctx.n()), 2.0 * half + 1.0);
    cplx want = (ctx.n() % 2 == 0) ? cplx(-1, 0) : cplx(1, 0);
    return std::abs(got - want);
  }});
  cs.push_back({"graphinv.midpoint_unknot_limit", 1e-6, [](const RootContext& ctx, Rng&) {
    return std::abs(kashaev_limit(ctx, unknot(cplx(0.1, 0.0))) - 1.0);
  }});
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<Check> checks;
  bool all = suite == "all";
  if (all || suite == "qarith") add_qarith(checks);
  if (all || suite == "repcat") add_repcat(checks);
  if (all || suite == "cgc") add_cgc(checks);
  if (all || suite == "sixj") add_sixj(checks);
  if (all || suite == "graphinv") add_graphinv(checks);
  if (checks.empty())
    throw Error(ErrorCode::BadInput, "unknown suite '" + suite + "'");
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });

  RootContext ctx(cfg.n);
  std::vector<CheckResult> out(checks.size());
  for_each_index(checks.size(), cfg.parallel, [&](size_t i) {
    const Check& c = checks[i];
    CheckResult r;
    r.id = c.id;
    r.tolerance = cfg.tolerance_override > 0 ? cfg.tolerance_override : c.tolerance;
    Rng rng(cfg.seed * 0x9e3779b97f4a7c15ULL ^ fnv1a(c.id));
    try {
      r.residual = c.run(ctx, rng);
      r.pass = r.residual <= r.tolerance || r.residual == 0.0;
    } catch (const Error& e) {
      r.residual = std::numeric_limits<double>::infinity();
      r.pass = false;
      r.detail = e.what();
    }
    out[i] = r;
  });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace q6j

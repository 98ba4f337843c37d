#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>

#include "q6j/cgc.hpp"
#include "q6j/diagrams.hpp"
#include "q6j/graphinv.hpp"
#include "q6j/verify.hpp"
#include "q6j/volume.hpp"

using namespace q6j;
using nlohmann::json;

namespace {

// accepts "x", "x+k", "re,im" and "re,im+k"; the explicit integer offset
// keeps recoupling preconditions exact
cplx parse_color(const std::string& text) {
  std::string s = text;
  long offset = 0;
  auto plus = s.find_last_of('+');
  if (plus != std::string::npos && plus > 0 && s.find(',', plus) == std::string::npos) {
    try {
      size_t used = 0;
      offset = std::stol(s.substr(plus + 1), &used);
      if (used == s.size() - plus - 1) s = s.substr(0, plus);
    } catch (...) {
    }
  }
  double re = 0, im = 0;
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      re = std::stod(s);
    } else {
      re = std::stod(s.substr(0, comma));
      im = std::stod(s.substr(comma + 1));
    }
  } catch (...) {
    throw Error(ErrorCode::BadInput, "cannot parse color '" + text + "'");
  }
  return cplx(re + double(offset), im);
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json logcplx_json(const LogComplex& z) {
  return json{{"logmag", z.log_magnitude}, {"phase", z.phase}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_verify(const std::string& suite, const VerifyConfig& cfg, const std::string& format) {
  auto results = verify_suite(suite, cfg);
  if (format == "json") {
    json out = json::array();
    for (const auto& r : results)
      out.push_back({{"id", r.id},
                     {"residual", r.residual},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass},
                     {"detail", r.detail},
                     {"n", cfg.n},
                     {"seed", cfg.seed}});
    emit(out);
  } else if (format == "csv") {
    std::printf("id,n,seed,residual,tolerance,pass\n");
    for (const auto& r : results)
      std::printf("%s,%d,%llu,%.6e,%.1e,%d\n", r.id.c_str(), cfg.n,
                  (unsigned long long)cfg.seed, r.residual, r.tolerance, r.pass ? 1 : 0);
  } else {
    for (const auto& r : results)
      std::printf("%-4s %-38s n=%d seed=%llu residual=%.3e tol=%.1e %s\n",
                  r.pass ? "ok" : "FAIL", r.id.c_str(), cfg.n,
                  (unsigned long long)cfg.seed, r.residual, r.tolerance,
                  r.detail.c_str());
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum recoupling symbols, hyperbolic volumes and colored graph invariants"};
  app.require_subcommand(1);

  int n = 3;
  uint64_t seed = 1;

  // ---- qnum
  auto* qnum = app.add_subcommand("qnum", "quantum numbers of a spin value");
  std::string qnum_a;
  qnum->add_option("value", qnum_a, "spin value (syntax: x, x+k, re,im)")->required();
  qnum->add_option("--n", n, "order parameter (root exp(i pi/n))")->check(CLI::Range(2, 1 << 20));

  // ---- cgc
  auto* cgc_cmd = app.add_subcommand("cgc", "coupling coefficient C^{a,b,c}_{u,v,t}");
  std::string ca, cb, cc;
  int cu = 0, cv = 0, ct = 0;
  cgc_cmd->add_option("--n", n)->check(CLI::Range(2, 64));
  cgc_cmd->add_option("--a", ca)->required();
  cgc_cmd->add_option("--b", cb)->required();
  cgc_cmd->add_option("--c", cc)->required();
  cgc_cmd->add_option("--u", cu)->required();
  cgc_cmd->add_option("--v", cv)->required();
  cgc_cmd->add_option("--t", ct)->required();

  // ---- sixj / tet
  auto* sixj_cmd = app.add_subcommand("sixj", "recoupling symbol {a b e; d c f}");
  auto* tet_cmd = app.add_subcommand("tet", "theta-normalized symbol {a b e; d c f}");
  std::vector<std::string> labels;
  bool use_single_sign = false;
  for (auto* cmd : {sixj_cmd, tet_cmd}) {
    cmd->add_option("--n", n)->check(CLI::Range(2, 1 << 20));
    cmd->add_option("--labels", labels, "six labels a b e d c f")->expected(6)->required();
  }
  tet_cmd->add_flag("--single-sign", use_single_sign,
                    "integer labels via the positive-summand form (log-space)");

  // ---- volume
  auto* vol = app.add_subcommand("volume", "hyperbolic volumes");
  vol->require_subcommand(1);
  auto* vol_ideal = vol->add_subcommand("ideal", "ideal tetrahedron");
  std::vector<double> ideal_angles;
  vol_ideal->add_option("--angles", ideal_angles, "alpha beta gamma (radians)")
      ->expected(3)
      ->required();
  auto* vol_trunc = vol->add_subcommand("truncated", "truncated tetrahedron");
  std::vector<double> trunc_angles;
  vol_trunc->add_option("--angles", trunc_angles, "theta_a..theta_f (radians)")
      ->expected(6)
      ->required();
  auto* vol_scan = vol->add_subcommand("scan", "finite-n ratio against the volume (CSV)");
  std::vector<double> scan_angles;
  std::vector<int> n_list;
  vol_scan->add_option("--angles", scan_angles)->expected(6)->required();
  vol_scan->add_option("--n-list", n_list, "orders to scan")->required();

  // ---- invariant
  auto* inv = app.add_subcommand("invariant", "colored graph invariant from a diagram file");
  std::string diagram_path, cut_edge;
  bool face_model = false;
  inv->add_option("--diagram", diagram_path, "diagram JSON file")->required();
  inv->add_option("--n", n)->check(CLI::Range(2, 64));
  inv->add_flag("--face-model", face_model, "also evaluate the region state sum");
  inv->add_option("--cut-edge", cut_edge, "presentation to use");

  // ---- verify
  auto* ver = app.add_subcommand("verify", "run a module's identity checks");
  std::string suite = "all", format = "pretty";
  double tolerance = 0.0;
  ver->add_option("suite", suite, "qarith|repcat|cgc|sixj|graphinv|all");
  ver->add_option("--n", n)->check(CLI::Range(2, 16));
  ver->add_option("--seed", seed);
  ver->add_option("--tolerance", tolerance, "override every tolerance");
  ver->add_option("--format", format)->check(CLI::IsMember({"pretty", "json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*qnum) {
      RootContext ctx(n);
      cplx a = parse_color(qnum_a);
      json out{{"n", n}, {"value", cplx_json(a)},
               {"brace", cplx_json(ctx.brace(a))},
               {"qint", cplx_json(ctx.qint(a))}};
      if (is_near_integer(a) && a.real() >= 0 && a.real() < n)
        out["qfact"] = cplx_json(ctx.qfact(std::lround(a.real())));
      emit(out);
    } else if (*cgc_cmd) {
      RootContext ctx(n);
      CgcIndex idx{Color(parse_color(ca)), Color(parse_color(cb)), Color(parse_color(cc)),
                   cu, cv, ct};
      emit(json{{"n", n}, {"value", cplx_json(cgqc(ctx, idx))}});
    } else if (*sixj_cmd || *tet_cmd) {
      RootContext ctx(n);
      std::vector<cplx> L;
      for (const auto& s : labels) L.push_back(parse_color(s));
      if (*tet_cmd && use_single_sign) {
        AdmissibleSixJ A;
        long* slots[6] = {&A.a, &A.b, &A.e, &A.d, &A.c, &A.f};
        for (int i = 0; i < 6; ++i) {
          if (!is_near_integer(L[i]))
            throw Error(ErrorCode::BadInput, "--single-sign needs integer labels");
          *slots[i] = std::lround(L[i].real());
        }
        LogComplex v = tet_admissible(ctx, A, true, true);
        emit(json{{"n", n}, {"tet", logcplx_json(v)}, {"value", cplx_json(v.to_complex())}});
      } else {
        SixJLabels S{Color(L[0]), Color(L[1]), Color(L[2]), Color(L[3]), Color(L[4]), Color(L[5])};
        cplx v = *sixj_cmd ? sixj(ctx, S) : tet(ctx, S);
        emit(json{{"n", n}, {"value", cplx_json(v)}});
      }
    } else if (*vol_ideal) {
      double v = ideal_volume(ideal_angles[0], ideal_angles[1], ideal_angles[2]);
      emit(json{{"volume", v}});
    } else if (*vol_trunc) {
      DihedralAngles t{trunc_angles[0], trunc_angles[1], trunc_angles[2],
                       trunc_angles[3], trunc_angles[4], trunc_angles[5]};
      json out{{"volume", truncated_volume(t)}};
      if (!t.ideal_boundary()) {
        ZetaPair z = zeta_roots(t);
        out["zeta1"] = z.zeta1;
        out["zeta2"] = z.zeta2;
        json lens;
        const char* names = "abcdef";
        for (int i = 0; i < 6; ++i)
          lens[std::string(1, names[i])] = edge_length(t, TetEdge(i));
        out["edge_lengths"] = lens;
      }
      emit(out);
    } else if (*vol_scan) {
      DihedralAngles t{scan_angles[0], scan_angles[1], scan_angles[2],
                       scan_angles[3], scan_angles[4], scan_angles[5]};
      double target = truncated_volume(t);
      std::printf("n,ratio,volume,gap,warn\n");
      const double pi = std::numbers::pi;
      for (int nn : n_list) {
        RootContext ctx(nn);
        try {
          if (t.ideal_boundary()) {
            long a = std::lround(std::floor((pi - t.a) * nn / (2 * pi)));
            long b = std::lround(std::floor((pi - t.b) * nn / (2 * pi)));
            long c = nn - 1 - a - b;
            double ratio = ideal_asymptotic_ratio(ctx, a, b, c);
            std::printf("%d,%.10f,%.10f,%.3e,\n", nn, ratio, target, ratio - target);
          } else {
            auto lab = [&](double th) {
              return std::lround(std::floor((pi - th) * nn / (2 * pi)));
            };
            AdmissibleSixJ L{lab(t.a), lab(t.b), lab(t.e), lab(t.d), lab(t.c), lab(t.f)};
            validate_admissible(ctx, L);
            validate_admissible(ctx, L.bar(ctx));
            auto r = asymptotic_ratio(ctx, L, true);
            std::printf("%d,%.10f,%.10f,%.3e,\n", nn, r.ratio, target, r.ratio - target);
          }
        } catch (const Error& e) {
          std::printf("%d,,,,%s\n", nn, to_string(e.code()));
        }
      }
    } else if (*inv) {
      RootContext ctx(n);
      DiagramFile f = load_diagram_file(diagram_path);
      const MorseDiagram& d = cut_edge.empty() ? f.first() : f.presentation(cut_edge);
      cplx tangle = invariant(ctx, d);
      json colors;
      for (const auto& [k, v] : d.colors) colors[k] = cplx_json(v);
      json out{{"n", n},
               {"model", "tangle"},
               {"value", cplx_json(tangle)},
               {"cut_edge", d.open_edge},
               {"colors", colors}};
      if (face_model) {
        cplx face = face_invariant(ctx, d);
        out["face_value"] = cplx_json(face);
        out["model"] = "tangle+face";
        out["diff"] = std::abs(face - tangle);
      }
      emit(out);
    } else if (*ver) {
      return run_verify(suite, {n, seed, tolerance, true}, format);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error Internal: %s\n", e.what());
    return 2;
  }
  return 0;
}

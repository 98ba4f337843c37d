#include "q6j/graphinv.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <sstream>

#include "q6j/cgc.hpp"
#include "q6j/sixj.hpp"

namespace q6j {

namespace {

std::string fmt(cplx z) {
  std::ostringstream os;
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

bool is_range_integer(const RootContext& ctx, cplx v) {
  if (!is_near_integer(v)) return false;
  long k = std::lround(v.real());
  return k >= 0 && k <= ctx.n() - 1;
}

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(int(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ColoringReport validate_coloring(const RootContext& ctx, const MorseDiagram& d) {
  ColoringReport rep;
  auto levels = d.levels();
  for (const auto& [edge, col] : d.colors) {
    if (is_half_integer(col)) {
      rep.valid = false;
      rep.problems.push_back("edge " + edge + " has half-integer color " + fmt(col));
    }
  }
  for (size_t i = 0; i < d.events.size(); ++i) {
    const Event& ev = d.events[i];
    cplx two_sum, single;
    if (ev.kind == Event::Kind::Split) {
      two_sum = d.effective(ev.left, ctx) + d.effective(ev.right, ctx);
      single = d.effective(levels[i][ev.pos], ctx);
    } else if (ev.kind == Event::Kind::Merge) {
      two_sum = d.effective(levels[i][ev.pos], ctx) +
                d.effective(levels[i][ev.pos + 1], ctx);
      single = d.effective(ev.out, ctx);
    } else {
      continue;
    }
    if (!is_range_integer(ctx, two_sum - single)) {
      rep.valid = false;
      rep.problems.push_back("vertex at event " + std::to_string(i) +
                             " violates the coupling condition: sum-gap " +
                             fmt(two_sum - single));
    }
  }
  return rep;
}

cplx tangle_scalar(const RootContext& ctx, const MorseDiagram& d) {
  ColoringReport rep = validate_coloring(ctx, d);
  if (!rep.valid)
    throw Error(ErrorCode::BadDiagram, "invalid coloring: " + rep.problems.front());
  auto levels = d.levels();
  const long n = ctx.n();

  // compose upward, starting from the identity on the open edge's module;
  // each event acts only on its slot, applied in place of the full
  // (identity x core x identity) Kronecker product
  Mat M = Mat::Identity(n, n);
  for (int i = int(d.events.size()) - 1; i >= 0; --i) {
    const Event& ev = d.events[i];
    const auto& above = levels[i];
    const auto& below = levels[i + 1];
    int p = ev.pos;
    RepOperator core{{}, {}, Mat::Identity(1, 1)};
    int below_used = 0;
    switch (ev.kind) {
      case Event::Kind::Max:
        core = cap(ctx, Color(d.effective(below[p], ctx)));
        below_used = 2;
        break;
      case Event::Kind::Min:
        core = cup(ctx, Color(d.effective(above[p], ctx)));
        below_used = 0;
        break;
      case Event::Kind::Crossing: {
        Color bl(d.effective(below[p], ctx)), br(d.effective(below[p + 1], ctx));
        core = ev.sign > 0 ? rmatrix(ctx, bl, br) : rmatrix_inverse(ctx, bl, br);
        below_used = 2;
        break;
      }
      case Event::Kind::Split:
        core = projection(ctx, Color(d.effective(below[p], ctx)),
                          Color(d.effective(below[p + 1], ctx)),
                          Color(d.effective(above[p], ctx)));
        below_used = 2;
        break;
      case Event::Kind::Merge:
        core = inclusion(ctx, Color(d.effective(above[p], ctx)),
                         Color(d.effective(above[p + 1], ctx)),
                         Color(d.effective(below[p], ctx)));
        below_used = 1;
        break;
    }
    long left = tensor_dim(ctx.n(), size_t(p));
    long right = tensor_dim(ctx.n(), below.size() - size_t(p) - size_t(below_used));
    long din = core.matrix.cols(), dout = core.matrix.rows();
    if (left * din * right != M.rows())
      throw Error(ErrorCode::BadDiagram, "strand bookkeeping is inconsistent");
    Mat next = Mat::Zero(left * dout * right, n);
    for (long l = 0; l < left; ++l)
      for (long o = 0; o < dout; ++o)
        for (long in = 0; in < din; ++in) {
          cplx cio = core.matrix(o, in);
          if (cio == cplx(0.0, 0.0)) continue;
          next.block((l * dout + o) * right, 0, right, n) +=
              cio * M.block((l * din + in) * right, 0, right, n);
        }
    M = std::move(next);
  }

  cplx lambda = M(0, 0);
  double off = (M - lambda * Mat::Identity(M.rows(), M.cols())).norm();
  if (off > 1e-8 * (1.0 + std::abs(lambda)))
    throw Error(ErrorCode::NonScalarOperator,
                "diagram operator deviates from a scalar by " + std::to_string(off));
  return lambda;
}

cplx invariant(const RootContext& ctx, const MorseDiagram& d) {
  cplx col = d.color(d.open_edge);
  cplx theta = ctx.qbinom(2.0 * col + double(ctx.n()), 2.0 * col + 1.0);
  return tangle_scalar(ctx, d) / theta;
}

FaceModel::FaceModel(const RootContext& ctx, const MorseDiagram& d)
    : ctx_(ctx), diagram_(d), open_color_(d.color(d.open_edge)) {
  ColoringReport rep = validate_coloring(ctx, d);
  if (!rep.valid)
    throw Error(ErrorCode::BadDiagram, "invalid coloring: " + rep.problems.front());
  auto levels = d.levels();

  UnionFind uf;
  int r0 = uf.make(), r1 = uf.make();
  std::vector<int> slices{r0, r1};

  struct RawAdj {
    int left, right;
    cplx eff;
  };
  std::vector<RawAdj> raw;
  auto record_level = [&](const std::vector<Strand>& strands) {
    for (size_t i = 0; i < strands.size(); ++i)
      raw.push_back({slices[i], slices[i + 1], d.effective(strands[i], ctx)});
  };
  record_level(levels[0]);

  for (size_t i = 0; i < d.events.size(); ++i) {
    const Event& ev = d.events[i];
    const auto& above = levels[i];
    int p = ev.pos;
    WeightSpec w;
    w.kind = ev.kind;
    switch (ev.kind) {
      case Event::Kind::Max: {
        int fresh = uf.make();
        w.rA = slices[p];  // region left of the cap
        slices.insert(slices.begin() + p + 1, {fresh, slices[p]});
        break;
      }
      case Event::Kind::Min: {
        w.rB = slices[p + 1];  // enclosed region above the minimum
        uf.unite(slices[p], slices[p + 2]);
        slices.erase(slices.begin() + p + 1, slices.begin() + p + 3);
        break;
      }
      case Event::Kind::Crossing: {
        w.sign = ev.sign;
        w.lam = d.effective(above[p], ctx);
        w.mu = d.effective(above[p + 1], ctx);
        w.rA = slices[p];
        w.rD = slices[p + 1];
        w.rB = slices[p + 2];
        int fresh = uf.make();
        w.rC = fresh;
        slices[p + 1] = fresh;
        break;
      }
      case Event::Kind::Split: {
        w.eta = d.effective(above[p], ctx);
        w.lam = d.effective(ev.left, ctx);
        w.mu = d.effective(ev.right, ctx);
        w.rB = slices[p];
        w.rC = slices[p + 1];
        int fresh = uf.make();
        w.rA = fresh;
        slices.insert(slices.begin() + p + 1, fresh);
        break;
      }
      case Event::Kind::Merge: {
        w.lam = d.effective(above[p], ctx);
        w.mu = d.effective(above[p + 1], ctx);
        w.eta = d.effective(ev.out, ctx);
        w.rB = slices[p];
        w.rA = slices[p + 1];
        w.rC = slices[p + 2];
        slices.erase(slices.begin() + p + 1);
        break;
      }
    }
    weights_.push_back(w);
    record_level(levels[i + 1]);
  }

  if (uf.find(r0) == uf.find(r1))
    throw Error(ErrorCode::BadDiagram, "boundary regions merged; not a valid diagram");
  if (uf.find(slices.front()) != uf.find(r0) || uf.find(slices.back()) != uf.find(r1))
    throw Error(ErrorCode::BadDiagram, "bottom boundary regions are inconsistent");

  // compact region ids to root indices
  std::map<int, int> root_index;
  auto compact = [&](int id) {
    int r = uf.find(id);
    auto it = root_index.find(r);
    if (it != root_index.end()) return it->second;
    int idx = int(root_index.size());
    root_index[r] = idx;
    offsets_.push_back(idx);
    return idx;
  };
  region_r0_ = compact(r0);
  region_r1_ = compact(r1);
  for (const RawAdj& a : raw) {
    Adjacency adj{compact(a.left), compact(a.right), a.eff};
    bool dup = false;
    for (const Adjacency& b : adjacencies_)
      if (b.left == adj.left && b.right == adj.right && std::abs(b.eff - adj.eff) < 1e-12)
        dup = true;
    if (!dup) adjacencies_.push_back(adj);
  }
  for (WeightSpec& w : weights_) {
    if (w.rA >= 0) w.rA = compact(w.rA);
    if (w.rB >= 0) w.rB = compact(w.rB);
    if (w.rC >= 0) w.rC = compact(w.rC);
    if (w.rD >= 0) w.rD = compact(w.rD);
  }
}

std::vector<std::vector<cplx>> FaceModel::states(cplx a0, cplx a1) const {
  if (!is_range_integer(ctx_, a0 + open_color_ - a1))
    throw Error(ErrorCode::BadInput,
                "boundary values must satisfy a0 + col - a1 in [0, n-1]");
  const int n = ctx_.n();
  const int nr = region_count();
  std::vector<cplx> phi(nr);
  std::vector<bool> set(nr, false);
  phi[region_r0_] = a0;
  set[region_r0_] = true;
  phi[region_r1_] = a1;
  set[region_r1_] = true;

  std::vector<std::vector<cplx>> out;
  bool half_integer_hit = false;

  // depth-first assignment; every adjacency with both ends set must give an
  // integer offset in [0, n-1]
  auto consistent = [&]() {
    for (const Adjacency& a : adjacencies_)
      if (set[a.left] && set[a.right] &&
          !is_range_integer(ctx_, phi[a.left] + a.eff - phi[a.right]))
        return false;
    return true;
  };

  std::function<void()> go = [&]() {
    if (!consistent()) return;
    // next unset region reachable through an adjacency with one end set
    int pick = -1;
    cplx base;
    bool from_left = false;
    for (const Adjacency& a : adjacencies_) {
      if (set[a.left] && !set[a.right]) {
        pick = a.right;
        base = phi[a.left] + a.eff;  // phi[right] = base - l
        from_left = true;
        break;
      }
      if (!set[a.left] && set[a.right]) {
        pick = a.left;
        base = phi[a.right] - a.eff;  // phi[left] = base + l
        from_left = false;
        break;
      }
    }
    if (pick < 0) {
      for (int r = 0; r < nr; ++r)
        if (!set[r])
          throw Error(ErrorCode::BadDiagram, "region not connected to the boundary");
      std::vector<cplx> st(phi.begin(), phi.end());
      for (const cplx& v : st)
        if (is_half_integer(v)) {
          half_integer_hit = true;
          return;
        }
      out.push_back(std::move(st));
      return;
    }
    set[pick] = true;
    for (long l = 0; l <= n - 1; ++l) {
      phi[pick] = from_left ? base - double(l) : base + double(l);
      go();
    }
    set[pick] = false;
  };
  go();

  if (half_integer_hit)
    throw Error(ErrorCode::HalfIntegerColor,
                "a state hits a half-integer; redraw the boundary value");
  if (out.empty()) throw Error(ErrorCode::NoStates, "no admissible region assignment");
  return out;
}

cplx FaceModel::weight(const WeightSpec& w, const std::vector<cplx>& phi) const {
  auto theta = [&](cplx x) {
    return ctx_.qbinom(2.0 * x + double(ctx_.n()), 2.0 * x + 1.0);
  };
  auto tw = [&](cplx x) { return x * (x + 1.0 - double(ctx_.n())); };
  switch (w.kind) {
    case Event::Kind::Max:
      return theta(phi[w.rA]);
    case Event::Kind::Min:
      return 1.0 / theta(phi[w.rB]);
    case Event::Kind::Crossing: {
      cplx a = phi[w.rA], b = phi[w.rB], c = phi[w.rC], d = phi[w.rD];
      cplx phase = ctx_.xi_pow(double(w.sign) * (tw(a) + tw(b) - tw(c) - tw(d)));
      return phase * sixj(ctx_, {Color(w.mu), Color(a), Color(c), Color(w.lam),
                                 Color(b), Color(d)});
    }
    case Event::Kind::Split: {
      cplx a = phi[w.rA], b = phi[w.rB], c = phi[w.rC];
      return theta(w.eta) * sixj(ctx_, {Color(b), Color(w.lam), Color(a),
                                        Color(w.mu), Color(c), Color(w.eta)});
    }
    case Event::Kind::Merge: {
      cplx a = phi[w.rA], b = phi[w.rB], c = phi[w.rC];
      return sixj(ctx_, {Color(w.mu), Color(w.lam), Color(w.eta), Color(b),
                         Color(c), Color(a)});
    }
  }
  throw Error(ErrorCode::BadInput, "unknown weight kind");
}

cplx FaceModel::state_sum(cplx a0, cplx a1) const {
  auto sts = states(a0, a1);
  KahanSum total;
  for (const auto& phi : sts) {
    cplx prod = 1.0;
    for (const WeightSpec& w : weights_) prod *= weight(w, phi);
    total.add(prod);
  }
  cplx theta_open =
      ctx_.qbinom(2.0 * open_color_ + double(ctx_.n()), 2.0 * open_color_ + 1.0);
  return total.value() / theta_open;
}

cplx FaceModel::state_sum_auto() const {
  cplx a0 = cplx(0.1357, 0.0) + open_color_;
  for (int attempt = 0; attempt < 12; ++attempt) {
    try {
      return state_sum(a0, a0 + open_color_);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HalfIntegerColor) throw;
      a0 += cplx(1.0 / std::numbers::pi, 0.0);
    }
  }
  throw Error(ErrorCode::NoStates, "no generic boundary value found");
}

cplx face_invariant(const RootContext& ctx, const MorseDiagram& d) {
  return FaceModel(ctx, d).state_sum_auto();
}

cplx kashaev_limit(const RootContext& ctx, const MorseDiagram& d) {
  for (const Event& ev : d.events)
    if (ev.kind == Event::Kind::Split || ev.kind == Event::Kind::Merge)
      throw Error(ErrorCode::BadInput, "limit is defined for link diagrams only");
  double half = (ctx.n() - 1) / 2.0;
  double sign = (ctx.n() % 2 == 0) ? -1.0 : 1.0;
  auto value_at = [&](double eps) {
    std::map<std::string, cplx> cols;
    for (const auto& [k, v] : d.colors) cols[k] = cplx(half + eps, 0.0);
    return sign * invariant(ctx, d.recolored(cols));
  };
  cplx v1 = value_at(1e-3), v2 = value_at(5e-4), v3 = value_at(2.5e-4);
  cplx r1 = 2.0 * v2 - v1, r2 = 2.0 * v3 - v2;
  if (std::abs(r2 - r1) > 1e-4)
    throw Error(ErrorCode::ExtrapolationUnstable,
                "extrapolants differ by " + std::to_string(std::abs(r2 - r1)));
  return (4.0 * r2 - r1) / 3.0;
}

}  // namespace q6j

#include "q6j/repcat.hpp"

namespace q6j {

long tensor_dim(int n, size_t arity) {
  long d = 1;
  for (size_t i = 0; i < arity; ++i) d *= n;
  return d;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

bool colors_match(const std::vector<Color>& x, const std::vector<Color>& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i].value - y[i].value) > 1e-9) return false;
  return true;
}

}  // namespace

RepOperator RepOperator::identity(const RootContext& ctx, std::vector<Color> colors) {
  long d = tensor_dim(ctx.n(), colors.size());
  return {colors, colors, Mat::Identity(d, d)};
}

RepOperator RepOperator::compose(const RepOperator& other) const {
  if (!colors_match(domain, other.codomain))
    throw Error(ErrorCode::BadInput, "composition with mismatched colors");
  return {other.domain, codomain, matrix * other.matrix};
}

RepOperator RepOperator::tensor(const RepOperator& other) const {
  std::vector<Color> dom = domain, cod = codomain;
  dom.insert(dom.end(), other.domain.begin(), other.domain.end());
  cod.insert(cod.end(), other.codomain.begin(), other.codomain.end());
  return {dom, cod, kron(matrix, other.matrix)};
}

Generators generators(const RootContext& ctx, Color a) {
  require_regular(a, "generator color");
  int n = ctx.n();
  Mat E = Mat::Zero(n, n), F = Mat::Zero(n, n), K = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (j >= 1) E(j - 1, j) = ctx.qint(double(j));
    if (j + 1 < n) F(j + 1, j) = ctx.qint(2.0 * a.value - double(j));
    K(j, j) = ctx.xi_pow(a.value - double(j));
  }
  return {{{a}, {a}, E}, {{a}, {a}, F}, {{a}, {a}, K}};
}

RepOperator coproduct_action(const RootContext& ctx, Gen g, Color a, Color b) {
  Generators ga = generators(ctx, a), gb = generators(ctx, b);
  Mat Kainv = ga.K.matrix.inverse();
  Mat m;
  switch (g) {
    case Gen::E:
      m = kron(ga.E.matrix, gb.K.matrix) + kron(Kainv, gb.E.matrix);
      break;
    case Gen::F:
      m = kron(ga.F.matrix, gb.K.matrix) + kron(Kainv, gb.F.matrix);
      break;
    case Gen::K:
      m = kron(ga.K.matrix, gb.K.matrix);
      break;
  }
  return {{a, b}, {a, b}, m};
}

RepOperator cap(const RootContext& ctx, Color a) {
  require_regular(a, "cap color");
  int n = ctx.n();
  Color abar = a.complement(ctx);
  Mat m = Mat::Zero(1, n * n);
  for (int i = 0; i < n; ++i) {
    int j = n - 1 - i;
    m(0, i * n + j) = ctx.xi_pow(-(a.value - double(i)) * double(n - 1));
  }
  return {{a, abar}, {}, m};
}

RepOperator cup(const RootContext& ctx, Color a) {
  require_regular(a, "cup color");
  int n = ctx.n();
  Color abar = a.complement(ctx);
  cplx b = abar.value;
  Mat m = Mat::Zero(n * n, 1);
  for (int i = 0; i < n; ++i) {
    m(i * n + (n - 1 - i), 0) = ctx.xi_pow((b - double(n) + 1.0 + double(i)) * double(n - 1));
  }
  return {{}, {a, abar}, m};
}

RepOperator rmatrix(const RootContext& ctx, Color a, Color b) {
  require_regular(a, "braiding color");
  require_regular(b, "braiding color");
  int n = ctx.n();
  Mat m = Mat::Zero(n * n, n * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      int mmax = std::min(n - 1 - v, u);
      for (int k = 0; k <= mmax; ++k) {
        cplx expo = 2.0 * (a.value - double(u)) * (b.value - double(v)) -
                    double(k) * (a.value - b.value - double(u) + double(v)) -
                    0.5 * double(k) * double(k + 1);
        cplx coeff = ctx.qfact(k) * ctx.xi_pow(expo) *
                     ctx.qbinom(double(u), double(u - k)) *
                     ctx.qbinom(2.0 * b.value - double(v), 2.0 * b.value - double(v + k));
        m((v + k) * n + (u - k), u * n + v) += coeff;
      }
    }
  }
  return {{a, b}, {b, a}, m};
}

RepOperator rmatrix_inverse(const RootContext& ctx, Color a, Color b) {
  RepOperator fwd = rmatrix(ctx, b, a);  // V^b (x) V^a -> V^a (x) V^b
  Eigen::FullPivLU<Mat> lu(fwd.matrix);
  if (!lu.isInvertible())
    throw Error(ErrorCode::SingularMatrix, "braiding matrix is singular");
  return {{a, b}, {b, a}, lu.inverse()};
}

}  // namespace q6j

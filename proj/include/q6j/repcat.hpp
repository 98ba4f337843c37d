#pragma once

#include <Eigen/Dense>
#include <vector>

#include "q6j/qarith.hpp"

namespace q6j {

using Mat = Eigen::MatrixXcd;

// A spin label. Labels in (1/2)Z are excluded from the representation
// theory; `regular()` is always recomputed from the value.
struct Color {
  cplx value{0.0, 0.0};

  Color() = default;
  Color(cplx v) : value(v) {}
  Color(double v) : value(v, 0.0) {}

  bool regular() const { return !is_half_integer(value); }
  Color complement(const RootContext& ctx) const {
    return Color(cplx(ctx.n() - 1, 0.0) - value);
  }
};

inline void require_regular(const Color& c, const char* what) {
  if (!c.regular())
    throw Error(ErrorCode::HalfIntegerColor,
                std::string(what) + " is a half-integer spin");
}

// Dense morphism between tensor products of simple modules. Row/column
// indices are mixed-radix base n with the first tensor factor most
// significant, so e_u (x) e_v sits at u*n + v.
struct RepOperator {
  std::vector<Color> domain;
  std::vector<Color> codomain;
  Mat matrix;

  static RepOperator identity(const RootContext& ctx, std::vector<Color> colors);

  // this ∘ other (apply `other` first). Checks color compatibility.
  RepOperator compose(const RepOperator& other) const;

  // this (x) other.
  RepOperator tensor(const RepOperator& other) const;
};

long tensor_dim(int n, size_t arity);

// Kronecker product with the first factor most significant.
Mat kron(const Mat& a, const Mat& b);

enum class Gen { E, F, K };

struct Generators {
  RepOperator E, F, K;
};

// E(e_j) = [j] e_{j-1}, F(e_j) = [2a-j] e_{j+1}, K(e_j) = xi^{a-j} e_j.
Generators generators(const RootContext& ctx, Color a);

// Matrix of Delta(g) on V^a (x) V^b:
//   Delta(E) = E(x)K + K^{-1}(x)E, Delta(F) = F(x)K + K^{-1}(x)F,
//   Delta(K) = K(x)K.
RepOperator coproduct_action(const RootContext& ctx, Gen g, Color a, Color b);

// Pairing V^a (x) V^{n-1-a} -> C, (e_i, e_j) -> delta_{i,n-1-j} xi^{-(a-i)(n-1)}.
RepOperator cap(const RootContext& ctx, Color a);

// Invariant vector C -> V^a (x) V^{n-1-a},
//   sum_i xi^{(b-n+1+i)(n-1)} e_i (x) e_{n-1-i},  b = n-1-a.
RepOperator cup(const RootContext& ctx, Color a);

// Braiding V^a (x) V^b -> V^b (x) V^a (crossing composed with the flip).
RepOperator rmatrix(const RootContext& ctx, Color a, Color b);

// Inverse braiding V^a (x) V^b -> V^b (x) V^a; undoes rmatrix(ctx, b, a).
RepOperator rmatrix_inverse(const RootContext& ctx, Color a, Color b);

// Ribbon exponent t_a = a(a+1-n); a full positive curl scales by xi^{2 t_a}.
inline cplx twist_exponent(const RootContext& ctx, Color a) {
  return a.value * (a.value + 1.0 - double(ctx.n()));
}

}  // namespace q6j

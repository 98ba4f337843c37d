#pragma once

#include <Eigen/Dense>

#include "q6j/sixj.hpp"

namespace q6j {

// Lobachevsky function -int_0^x log|2 sin t| dt, pi-periodic and odd,
// evaluated to full double precision.
double lobachevsky(double x);

// Volume of the ideal tetrahedron with dihedral angles (alpha, beta, gamma),
// alpha+beta+gamma = pi.
double ideal_volume(double alpha, double beta, double gamma);

// (pi/n) log((-1)^{n-1} tet{a b c; a b c}) through the closed product form
// (1/n^2) {2a}! {2b}! {2c}!; needs a+b+c = n-1, all positive, 2x <= n-1.
double ideal_asymptotic_ratio(const RootContext& ctx, long a, long b, long c);

// Six dihedral angles of a (truncated or ideal) tetrahedron, radians.
// Edge pairs around the four vertices: (a,b,e), (a,c,f), (b,d,f), (c,d,e).
struct DihedralAngles {
  double a, b, c, d, e, f;

  std::array<std::array<double, 3>, 4> vertex_triples() const {
    return {{{a, b, e}, {a, c, f}, {b, d, f}, {c, d, e}}};
  }
  // strict truncated-type condition: every vertex sum below pi
  bool truncated_valid() const;
  // ideal boundary: every vertex sum equals pi within tol
  bool ideal_boundary(double tol = 1e-9) const;
};

// 4x4 symmetric matrix with unit diagonal and -cos(theta) at the six
// face-pair positions.
Eigen::Matrix4d gram_matrix(const DihedralAngles& t);

// |C1^2 - C0 C2 - 16 (abc^2def)^2 det G| / scale for the quadratic built
// from the angle exponentials; a consistency probe of the closed forms.
double discriminant_residual(const DihedralAngles& t);

struct ZetaPair {
  double zeta1, zeta2;
};

// Stationary phases: the two unit-circle roots of the quadratic
// C2 z^2 + C1 z + C0 = 0 with sqrt(det G) = i sqrt(-det G), mapped into
// their bracketing intervals.
ZetaPair zeta_roots(const DihedralAngles& t);

// Signed sum of eight Lobachevsky terms.
double g_function(const DihedralAngles& t, double zeta);

// (g(zeta1) - g(-zeta2)) / 2; routes to ideal_volume on the ideal boundary.
double truncated_volume(const DihedralAngles& t);

enum class TetEdge { a, b, c, d, e, f };

// Edge length from the Gram cofactors; requires det G < 0.
double edge_length(const DihedralAngles& t, TetEdge edge);

struct AsymptoticResult {
  double ratio;       // (pi/2n) log(tet * tet-bar)
  double peak_gap_1;  // log(sum) - log(max summand), first factor
  double peak_gap_2;  // same for the complement factor
};

// Finite-n two-factor estimate of the truncated volume.
AsymptoticResult asymptotic_ratio(const RootContext& ctx, const AdmissibleSixJ& L,
                                  bool parallel = false);

}  // namespace q6j

#pragma once

#include "q6j/repcat.hpp"

namespace q6j {

// Index data of a coupling coefficient C^{a,b,c}_{u,v,t}; nonzero entries
// satisfy weight conservation u + v - t = a + b - c.
struct CgcIndex {
  Color a, b, c;
  int u = 0, v = 0, t = 0;
};

// Coupling coefficient of e^c_t in e^a_u (x) e^b_v. Requires a+b-c to be an
// integer in [0, n-1] and regular colors; zero off the weight-conservation
// stratum.
cplx cgqc(const RootContext& ctx, const CgcIndex& idx);

// V^c -> V^a (x) V^b with columns sum_{u+v-t=a+b-c} C^{a,b,c}_{u,v,t} e_u (x) e_v.
RepOperator inclusion(const RootContext& ctx, Color a, Color b, Color c);

// V^a (x) V^b -> V^c with entries C^{n-1-b, n-1-a, n-1-c}_{n-1-v, n-1-u, n-1-t}.
RepOperator projection(const RootContext& ctx, Color a, Color b, Color c);

// Scalar of the two-vertex bubble on V^a with loop colors (b, c): equals
// qbin(2a+n, 2a+1). Also forms projection∘inclusion and checks the matrix
// is that scalar. Requires b+c-a integer in [0, n-1].
cplx theta_value(const RootContext& ctx, Color a, Color b, Color c);

// Frobenius norm of id - sum_c qbin(2c+n,2c+1)^{-1} inclusion(a,b,c) projection(a,b,c)
// over c = a+b-k, k = 0..n-1.
double identity_decomposition_residual(const RootContext& ctx, Color a, Color b);

}  // namespace q6j

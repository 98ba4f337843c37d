#pragma once

#include <array>
#include <vector>

#include "q6j/repcat.hpp"

namespace q6j {

// Labels {a b e; d c f}. A well-posed symbol needs the four combinations
// a+b-e, a+f-c, b+d-f, d+e-c to be integers in [0, n-1].
struct SixJLabels {
  Color a, b, e, d, c, f;
};

struct BSet {
  long abe, afc, bdf, dec;
};

// Validates integrality and range of the four combinations.
BSet b_combinations(const RootContext& ctx, const SixJLabels& L);

// Theta-normalized symbol (no bubble factor on f); entire in the labels on
// the integrality locus.
cplx tet(const RootContext& ctx, const SixJLabels& L);

// Recoupling coefficient; tet divided by qbin(2f+n, 2f+1). Flags the
// configurations where that bubble factor vanishes.
cplx sixj(const RootContext& ctx, const SixJLabels& L);

// Integer labels with every vertex triple strictly admissible:
// 0 < i,j,k < n-1, n-1 < i+j+k < 2(n-1), 0 < i+j-k, j+k-i, k+i-j < n-1.
struct AdmissibleSixJ {
  long a, b, e, d, c, f;

  AdmissibleSixJ bar(const RootContext& ctx) const {
    long m = ctx.n() - 1;
    return {m - a, m - b, m - e, m - d, m - c, m - f};
  }
  SixJLabels to_labels() const {
    return {Color(double(a)), Color(double(b)), Color(double(e)),
            Color(double(d)), Color(double(c)), Color(double(f))};
  }
};

bool admissible_triple(int n, long i, long j, long k);
void validate_admissible(const RootContext& ctx, const AdmissibleSixJ& L);

struct ZRange {
  long m, M;
};
ZRange summation_range(const RootContext& ctx, const AdmissibleSixJ& L);

// log R(z): one positive summand of the single-sign form.
double log_summand(const RootContext& ctx, const AdmissibleSixJ& L, long z);

// The positive summands R(m..M) evaluated through complex brace products
// (an independent route used to check positivity and unimodality).
std::vector<cplx> summands_complex(const RootContext& ctx, const AdmissibleSixJ& L);

// Single-sign evaluation: (-1)^{n-1} times a positive sum. In logspace mode
// the sum is a log-sum-exp over log R(z); otherwise summands are
// exponentiated and added smallest first. `parallel` spreads the z scan
// over OpenMP threads.
LogComplex tet_admissible(const RootContext& ctx, const AdmissibleSixJ& L,
                          bool logspace = true, bool parallel = false);

// Successive-summand ratio R(z)/R(z-1) for z in (m, M].
double summand_ratio(const RootContext& ctx, const AdmissibleSixJ& L, long z);

// The unique peak location: r(z0) >= 1 and r(z0+1) <= 1 (ties resolved to
// the smaller index). EmptyRange when m >= M.
long find_z0(const RootContext& ctx, const AdmissibleSixJ& L);

// Alternating-sign evaluation of the symbol for arbitrary integer labels
// whose four B combinations lie in [0, n-1]; signed log-sum-exp, so it
// stays finite at any n. Zero terms (a vanished brace) are skipped.
LogComplex tet_integer(const RootContext& ctx, long a, long b, long e, long d,
                       long c, long f);

// |sum_f theta(f)^{-1} theta(g)^{-1} tet{a b e; d c f} tet{d b f; a c g} - delta_{eg}|,
// f running over all values with b+d-f and a+f-c in [0, n-1].
double orthogonality_residual(const RootContext& ctx, Color a, Color b, Color c,
                              Color d, Color e, Color g);

struct PentagonLabels {
  Color a, b, c, d, e, f, g, i, j;
};

// |LHS - RHS| / (1 + |RHS|) of the recoupling coherence identity
//   sum_h theta(h)^{-1} tet{a b f; c g h} tet{a h g; d e i} tet{b c h; d i j}
//     = tet{f c g; d e j} tet{a b f; j e i}.
double pentagon_residual(const RootContext& ctx, const PentagonLabels& L);

// The six label substitutions that fix the tet symbol (bars denote
// complements n-1-x): k = 0..5.
SixJLabels symmetry_transform(const RootContext& ctx, const SixJLabels& L, int k);

// Relative residuals |tet(L) - tet(S_k L)| for the six substitutions.
std::array<double, 6> symmetry_residuals(const RootContext& ctx, const SixJLabels& L);

}  // namespace q6j

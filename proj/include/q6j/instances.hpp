#pragma once

#include "q6j/rng.hpp"
#include "q6j/sixj.hpp"

namespace q6j {

// Random labels {a b e; d c f} with all four B combinations exact integers
// in [0, n-1]: labels are differences of four generic vertex potentials
// plus integer offsets, so the combinations are integers by construction.
SixJLabels random_sixj_labels(const RootContext& ctx, Rng& rng);

struct OrthogonalityInstance {
  Color a, b, c, d, e, g;
};

// Instance for the pairing identity; `equal` selects e = g.
OrthogonalityInstance random_orthogonality_instance(const RootContext& ctx, Rng& rng,
                                                    bool equal);

// Ten-edge label set on five vertex potentials with all ten triangle
// combinations integers in [0, n-1].
PentagonLabels random_pentagon_instance(const RootContext& ctx, Rng& rng);

// Uniform integer labels with all four vertex triples strictly admissible.
// Requires n >= 3.
AdmissibleSixJ random_admissible_labels(const RootContext& ctx, Rng& rng);

// Extracts the recoupling coefficients from the composition of coupling
// inclusions (a change of basis between the two bracketings of a triple
// tensor product) and compares them with the closed formula. Returns the
// largest relative deviation over the intermediate label, including the
// least-squares defect of the extraction.
double sixj_definition_residual(const RootContext& ctx, Color a, Color b, Color e,
                                Color d, Color c);

}  // namespace q6j

#pragma once

#include "q6j/morse.hpp"
#include "q6j/repcat.hpp"

namespace q6j {

struct ColoringReport {
  bool valid = true;
  std::vector<std::string> problems;
};

// Checks that every edge color is regular and every trivalent vertex
// satisfies the coupling condition (in effective colors: the two strands on
// the doubled side minus the single side lies in [0, n-1]).
ColoringReport validate_coloring(const RootContext& ctx, const MorseDiagram& d);

// The scalar of the operator carried by the one-in one-out diagram on the
// open edge's module; NonScalarOperator when it is not a multiple of the
// identity.
cplx tangle_scalar(const RootContext& ctx, const MorseDiagram& d);

// tangle_scalar normalized by the bubble value of the cut edge; independent
// of every presentation choice.
cplx invariant(const RootContext& ctx, const MorseDiagram& d);

// Planar-region state sum over the same diagram.
class FaceModel {
 public:
  FaceModel(const RootContext& ctx, const MorseDiagram& d);

  int region_count() const { return int(offsets_.size()); }

  // All region assignments for boundary values (a0, a1); requires
  // a0 + col(open) - a1 to be an integer in [0, n-1]. Throws NoStates when
  // the constraints admit no assignment and HalfIntegerColor when some
  // assignment hits a half-integer (reject this a0 and redraw).
  std::vector<std::vector<cplx>> states(cplx a0, cplx a1) const;

  // Normalized state sum for the given boundary values.
  cplx state_sum(cplx a0, cplx a1) const;

  // Normalized state sum at the default generic boundary choice
  // a0 = 0.1357 + col(open), a1 = a0 + col(open), redrawing a0 by 1/pi
  // steps while any state hits a half-integer.
  cplx state_sum_auto() const;

 private:
  struct Adjacency {
    int left, right;  // region indices
    cplx eff;         // effective color of the separating strand
  };
  struct WeightSpec {
    Event::Kind kind;
    int sign = +1;
    cplx lam{}, mu{}, eta{};       // effective edge colors
    int rA = -1, rB = -1, rC = -1, rD = -1;  // region indices by role
  };

  cplx weight(const WeightSpec& w, const std::vector<cplx>& phi) const;

  const RootContext& ctx_;
  const MorseDiagram& diagram_;
  cplx open_color_;
  std::vector<int> offsets_;          // compacted region ids
  std::vector<Adjacency> adjacencies_;
  std::vector<WeightSpec> weights_;
  int region_r0_ = 0, region_r1_ = 0;
};

cplx face_invariant(const RootContext& ctx, const MorseDiagram& d);

// Limit of (-1)^{n-1} times the invariant as every color approaches
// (n-1)/2, via Richardson extrapolation over eps in {1e-3, 5e-4, 2.5e-4}.
// Only defined for link diagrams (no trivalent vertices).
cplx kashaev_limit(const RootContext& ctx, const MorseDiagram& d);

}  // namespace q6j

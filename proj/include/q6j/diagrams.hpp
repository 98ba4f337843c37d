#pragma once

#include "q6j/morse.hpp"

namespace q6j {
namespace diagrams {

// Single downward strand (no events).
MorseDiagram unknot(cplx color);

// Same unknot with one maximum and one minimum (an S-bend).
MorseDiagram unknot_zigzag(cplx color);

// Unknot with one kink of the given sign (a framing change).
MorseDiagram unknot_curl(cplx color, int sign);

// Two edges b, c doubling between two vertices, cut along any of the three
// edges; needs b+c-a integer in [0, n-1].
MorseDiagram theta(cplx a, cplx b, cplx c, char cut);

struct TetColors {
  cplx a, b, c, d, e, f;
};

// One-skeleton with vertex triples (a,b,e), (a,c,f), (b,d,f), (c,d,e), cut
// along any of the six edges. All four combinations a+b-e, a+f-c, b+d-f,
// d+e-c must be integers in [0, n-1].
MorseDiagram tetrahedron(const TetColors& col, char cut);

// Positive Hopf link; the cut component carries `k`, the closed one `a`.
MorseDiagram hopf(cplx k, cplx a);

// Right trefoil (closure of the 2-strand braid with three positive bands).
MorseDiagram trefoil(cplx color);

// Figure-eight knot (closure of (s1 s2^{-1})^2 on three strands).
MorseDiagram figure_eight(cplx color);

// Diagram files bundled with the command-line tool.
DiagramFile unknot_file();
DiagramFile theta_file();
DiagramFile tetrahedron_file();
DiagramFile hopf_file();
DiagramFile trefoil_file();
DiagramFile figure_eight_file();

}  // namespace diagrams
}  // namespace q6j

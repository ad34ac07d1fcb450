#pragma once

#include <vector>

#include "cfk/complex.hpp"

// Model complexes: staircases from step vectors, the torus-knot families
// with known staircase data, thin-knot models, boxes, and the unknot.

namespace cfk {

/// Alternating (horizontal, vertical) step widths, top-left corner first.
/// Nonempty, even length, all entries >= 1.
using StepVector = std::vector<int>;

/// Zigzag complex b_0 .. b_2k descending from (0, tau); the odd generators
/// differentiate to both neighbours, the horizontal arrow carrying the
/// step width as its U-power.
CfkComplex staircase(const StepVector& steps);

/// T_{2, q} for odd q >= 3, or T_{p, p+1}; throws UnsupportedTorusKnotError
/// for any other (p, q).
CfkComplex torus(int p, int q);

/// The staircase summand determining nu_n for a homologically thin knot
/// with the given tau.
CfkComplex thin_model(int tau);

/// Acyclic four-generator square summand; contributes nothing to any nu_n.
/// maslov_top is the Maslov grading of the top generator.
CfkComplex box(int alexander_offset = 0, int maslov_top = 0);

CfkComplex unknot();

}  // namespace cfk

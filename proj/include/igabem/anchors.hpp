#pragma once

#include <vector>

#include "igabem/knot_vector.hpp"

namespace igabem {

/// One anchor per basis function: the Greville abscissa, shifted by an
/// offset alpha for discontinuous (C^-1) functions so that anchors never
/// coincide.
struct Anchor {
    int basis_index;
    double greville;
    double alpha;  ///< zero for continuous functions
    double position() const { return greville + alpha; }
};

struct AnchorSet {
    std::vector<Anchor> anchors;  ///< ascending by position, one per function
};

/// Compute the anchors of a basis. With `ends_discontinuous` the first and
/// last function are treated as C^-1 at the patch boundary and receive an
/// inward offset; interior functions at knots of multiplicity p+1 always do.
AnchorSet greville_anchors(const KnotVector& kv, bool ends_discontinuous = false);

}  // namespace igabem

#pragma once

#include "lcwl/morphism.hpp"

#include <memory>
#include <optional>

namespace lcwl {

// Deterministic kernel/image/cokernel data of the differential of a strict
// 2-term algebra, in g[1] coordinates (degrees -2 and -1).
struct TwoTermDecomposition {
    std::vector<int> lower;          // g[1] indices of degree -2
    std::vector<int> upper;          // g[1] indices of degree -1
    std::vector<Vec> ker_basis;      // kernel of lambda_1, in g[1] coordinates
    std::vector<Vec> im_basis;       // image of lambda_1, in g[1] coordinates
    std::vector<int> coker_indices;  // g[1] indices spanning an echelon complement
};

TwoTermDecomposition decompose_2term(const LInftyAlgebra& g);

// A splitting choice: lifts of the cokernel generators along the projection,
// and preimages of the image basis under lambda_1.
struct TwoTermSplittings {
    std::vector<Vec> h_lift;     // one per coker generator, in g[1] coordinates
    std::vector<Vec> sigma_lift; // one per im basis vector, in g[1] coordinates
};

// Reduced-row-echelon default: h lifts are the complement indices themselves,
// sigma lifts the deterministic solver's preimages.
TwoTermSplittings default_splittings(const LInftyAlgebra& g, const TwoTermDecomposition& dec);

struct MinimalModelResult {
    std::shared_ptr<LInftyAlgebra> minimal; // on ker (+) coker, lambda_1 = 0
    LInftyMorphism embed;                   // minimal -> g, weak when curvature appears
    std::vector<SkewBracket> theta;         // the 3-bracket of the minimal structure
    TwoTermDecomposition dec;
};

// Minimal model of a strict 2-term algebra along the given splittings
// (defaults when absent). The morphism has linear part (ker inclusion, h) and
// the unique weight-2 correction making it an L-infinity morphism; the
// 3-bracket theta lands in the kernel and is a cocycle for the induced action.
MinimalModelResult minimal_model_2term(const LInftyAlgebra& g,
                                       const std::optional<TwoTermSplittings>& split = {});

} // namespace lcwl

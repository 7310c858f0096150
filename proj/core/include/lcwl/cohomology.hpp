#pragma once

#include "lcwl/cochain.hpp"

namespace lcwl {

// H^p(g,V) of the action data of a ruth, with deterministic representatives:
// cocycles spanning a reduced-echelon complement of the image.
struct CohomologyResult {
    int degree = 0;
    int dim = 0;
    CochainBasis basis;                   // ambient basis of C^p
    std::vector<Cochain> representatives; // cocycles, one per class generator
};

// Matrix of D_rho : C^p -> C^{p+1} in the deterministic cochain bases.
RatMatrix ce_matrix(const Ruth& r, int p);

CohomologyResult cohomology(const Ruth& r, int p);

struct ClassDecision {
    bool same = false;
    std::optional<Cochain> certificate; // beta with D beta = z1 - z2 when same
};

// Exact decision procedure; inputs must be cocycles of equal degree.
// Certificates are rechecked by applying D before returning.
ClassDecision same_class(const Ruth& r, const Cochain& z1, const Cochain& z2);

// Coordinates of the class of the cocycle z in the representative basis.
Vec class_coordinates(const Ruth& r, const CohomologyResult& h, const Cochain& z);

// Matrix of the induced map H^p(target data) -> H^p(source data) of a ruth
// morphism, expressed in the representative bases of both sides. Also checks
// that coboundaries pull back to coboundaries.
RatMatrix induced_map_on_cohomology(const RuthMorphism& m, int p, const CohomologyResult& src_h,
                                    const CohomologyResult& tgt_h);
RatMatrix induced_map_on_cohomology(const RuthMorphism& m, int p);

} // namespace lcwl

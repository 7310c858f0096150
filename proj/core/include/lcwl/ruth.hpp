#pragma once

#include "lcwl/morphism.hpp"

namespace lcwl {

SpMat spmat_compose(const SpMat& outer, const SpMat& inner);
// graded commutator A o B - (-1)^{|A||B|} B o A
SpMat spmat_commutator(const SpMat& a, int deg_a, const SpMat& b, int deg_b);

// Representation up to homotopy, stored split into the unit component
// (a degree-1 differential on V) and the reduced action
// rho_bar : S^+(g[1]) -> End(V), one degree-(|w|+1) matrix per word.
struct Ruth {
    const LInftyAlgebra* algebra = nullptr;
    GradedSpace coeffs; // V
    SpMat partial;
    std::map<int, SpMat> action; // word id (weight >= 1) -> matrix on V

    Ruth() = default;
    Ruth(const LInftyAlgebra* g, GradedSpace v) : algebra(g), coeffs(std::move(v)) {}

    const LInftyAlgebra& g() const { return *algebra; }
    SpMat action_of(int word_id) const;
    // rho(w (x) v), with the unit word routed to partial
    Vec apply(int word_id, const Vec& v) const;
    void set_action(int word_id, SpMat m);
    void validate_degrees() const;

    // weight beyond which every action matrix is forced to vanish by degree
    int action_weight_bound() const;
};

// Direct check of the defining identity
//   rho o (d_lambda (x) id) + rho o (id (x) rho) o (Delta (x) id) = 0
// on every (basis word, basis vector) pair in the degree-forced window,
// plus partial^2 = 0. One violation entry per bad pair.
Report check_ruth_direct(const Ruth& r);

// Maurer-Cartan form of the same condition:
//   [partial,-] o rho_bar + rho_bar o d_lambda + 1/2 [.,.] o (rho_bar (x) rho_bar) o Delta_red = 0
// assembled matrix-by-matrix per word. Independent of check_ruth_direct.
Report check_ruth_mc(const Ruth& r);

// Both paths; they must agree (asserted by the test suites, not here).
Report check_ruth(const Ruth& r);

// F^* rho = rho o (F (x) id) for an L-infinity morphism F into r's algebra.
Ruth pullback_ruth(const LInftyMorphism& f, const Ruth& r);

// Tensor product action on V1 (x) V2:
//   rho(x (x) v (x) w) = rho1(x (x) v) (x) w + (-1)^{(|x|+1)|v|} v (x) rho2(x (x) w)
Ruth tensor_ruth(const Ruth& r1, const Ruth& r2);

// Adjoint action ad(x (x) y) = lambda(x v y) on g[1].
Ruth adjoint_ruth(const LInftyAlgebra& g);

// Graded subspace presented by an inclusion into g[1].
struct Subspace {
    GradedSpace basis;          // intrinsic basis of the subspace
    std::vector<Vec> inclusion; // columns in ambient coordinates
};

struct IdealCheck {
    bool is_ideal = true;
    std::string witness; // offending (word, vector) when not an ideal
};

// Is the subspace closed under lambda against arbitrary words?
IdealCheck is_ideal(const LInftyAlgebra& g, const Subspace& sub);

// Restriction of the adjoint ruth to an ideal, in subspace coordinates.
Ruth restricted_adjoint(const LInftyAlgebra& g, const Subspace& sub);

// k-th tensor power of a ruth (iterated tensor_ruth, left bracketing).
Ruth tensor_power_ruth(const Ruth& r, int k);

// chi-skew projector on the k-th tensor power of v:
//   P = 1/k! sum_sigma chi(sigma) sigma-action, an idempotent commuting with
// every tensor-power action.
LinMap skew_projector(const GradedSpace& v, int k);

// Morphism of ruths (F, f) : (V,rho) -> (V',rho') with f : V' -> V degree 0.
struct RuthMorphism {
    const LInftyMorphism* morphism = nullptr; // F : g -> g'
    const Ruth* source = nullptr;             // (V, rho) over g
    const Ruth* target = nullptr;             // (V', rho') over g'
    LinMap f;                                 // V' -> V, degree preserving
};

// Equivariance f o rho' o (F (x) id) = rho o (id (x) f) on all
// (word, coefficient-basis) pairs in the truncation.
Report check_ruth_morphism(const RuthMorphism& m);

// Basis of homogeneous maps f : A -> B of the given degree with
//   f(rho_A(w (x) a)) = (-1)^{d(|w|+1)} rho_B(w (x) f(a)),
// both ruths over one algebra. For degree 0 this is the ruth-map condition;
// the sign is the Koszul extension to homogeneous f.
std::vector<LinMap> ruth_map_space(const Ruth& a, const Ruth& b, int degree);

} // namespace lcwl

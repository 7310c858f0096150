#pragma once

#include "lcwl/ruth.hpp"

namespace lcwl {

// Element of C^p(g,V) = Hom^p(S(g[1]), V): a sparse assignment of V-values to
// canonical words, with |alpha(w)| = |w| + p on every supported word.
struct Cochain {
    int degree = 0;
    std::map<int, Vec> a; // word id -> value

    Vec at(int word) const;
    void set(int word, Vec v);
    void add(int word, const Vec& v, const Rat& scale = Rat(1));
    bool is_zero() const;
    bool reduced() const; // no value on the unit word
    Cochain scaled(const Rat& c) const;
};

void cochain_add(Cochain& acc, const Cochain& other, const Rat& scale = Rat(1));
bool cochain_equal(const Cochain& x, const Cochain& y);
std::string cochain_str(const WordSpace& ws, const GradedSpace& v, const Cochain& c);

// Weights that can support a nonzero value of a degree-p cochain: the word
// degree must land in [min V - p, max V - p], and weight-k words have degrees
// in [k min g[1], k max g[1]]. Returns an empty window as (1, 0).
std::pair<int, int> weight_window(const LInftyAlgebra& g, const GradedSpace& v, int p);

// Deterministic ordered basis of C^p(g,V): (word, V-basis) slots with exact
// degree match, ordered by word id then coefficient index.
struct CochainBasis {
    int degree = 0;
    std::vector<std::pair<int, int>> slots;

    int dim() const { return (int)slots.size(); }
    Cochain element(int i) const;
    Vec coordinates(const Cochain& c) const; // throws if c has support off the basis
    Cochain from_coordinates(const Vec& coords) const;
};

CochainBasis cochain_basis(const LInftyAlgebra& g, const GradedSpace& v, int p);

// Checks homogeneity and the weight window; throws on violation.
void validate_cochain(const LInftyAlgebra& g, const GradedSpace& v, const Cochain& c);

// Chevalley-Eilenberg differential of the action data (valid or not):
//   D_rho(alpha) = rho o (id (x) alpha) o Delta - (-1)^p alpha o d_lambda.
Cochain ce_differential(const Ruth& r, const Cochain& alpha);

// alpha ^_m beta = m o (alpha (x) beta) o Delta for a degree-0 pairing
// m : V1 (x) V2 -> V3 given on the tensor basis (index i*dim(V2)+j).
Cochain cochain_product(const LinMap& m, const GradedSpace& v1, const GradedSpace& v2,
                        const LInftyAlgebra& g, const Cochain& alpha, const Cochain& beta);

// ev : End(V) (x) V -> V as a degree-0 map on the tensor basis.
LinMap ev_map(const GradedSpace& v);

// Graded Lie coefficient data (a dgla when the differential is nonzero).
struct DglaCoefficients {
    GradedSpace space;
    LinMap bracket;    // space (x) space -> space, degree 0, skew
    SpMat differential; // degree 1, squares to zero

    Vec brk(const Vec& x, const Vec& y) const;
};

Report validate_dgla(const DglaCoefficients& l);

// gl(V) with [S,T] = S T - (-1)^{|S||T|} T S and delta = [partial, -].
DglaCoefficients gl_dgla(const GradedSpace& v, const SpMat& partial);

// flatten an End(V)-matrix into coordinates of end_space(v)
Vec end_coords(const GradedSpace& v, const SpMat& m);
SpMat end_matrix(const GradedSpace& v, const Vec& coords);

// the reduced action of a ruth as a degree-1 cochain valued in gl(V)
Cochain action_cochain(const Ruth& r);

// dgla structure on C(g,L): bracket ^_{[.,.]} and differential
//   d(alpha) = d_L o alpha - (-1)^{|alpha|} alpha o d_lambda.
Cochain cochain_dgla_bracket(const LInftyAlgebra& g, const DglaCoefficients& l, const Cochain& alpha,
                             const Cochain& beta);
Cochain cochain_dgla_differential(const LInftyAlgebra& g, const DglaCoefficients& l,
                                  const Cochain& alpha);

// Omega_theta = d(theta) + 1/2 theta ^_{[.,.]} theta for degree-1 theta.
Cochain curvature_of_degree1(const LInftyAlgebra& g, const DglaCoefficients& l,
                             const Cochain& theta);

// D-bar on reduced cochains from split data (partial, rho_bar):
//   D(alpha) = rho_bar ^_ev alpha + partial o alpha - (-1)^{|alpha|} alpha o d_lambda.
Cochain reduced_differential(const Ruth& r, const Cochain& alpha);

// F^* alpha = f o alpha o F along a ruth morphism.
Cochain pullback_cochain(const RuthMorphism& m, const Cochain& alpha);

} // namespace lcwl

#pragma once

#include "lcwl/linalg.hpp"
#include "lcwl/linfty.hpp"

#include <array>

namespace lcwl {

// L-infinity morphism, stored by its corestriction components
// F^1_n : S^n(g[1]) -> h[1] of degree zero. The full coalgebra morphism is
// materialized on demand through the set-partition expansion and cached.
class LInftyMorphism {
public:
    LInftyMorphism() = default;
    LInftyMorphism(const LInftyAlgebra* src, const LInftyAlgebra* tgt);

    const LInftyAlgebra& src() const { return *src_; }
    const LInftyAlgebra& tgt() const { return *tgt_; }

    void set_component(int src_word_id, Vec value_in_tgt_shifted);
    Vec component(int src_word_id) const; // F^1 on a word; zero if absent
    const std::map<int, Vec>& components() const { return comp_; }

    bool strict() const; // no component beyond weight 1
    LinMap linear_part() const;

    // F(w) as a combination of target words; cached.
    const WordCombo& apply_word(int src_word_id) const;
    WordCombo apply_combo(const WordCombo& combo) const;

    // set F^1_1 from a degree-0 map g[1] -> h[1]
    void set_linear(const LinMap& f11);

private:
    const LInftyAlgebra* src_ = nullptr;
    const LInftyAlgebra* tgt_ = nullptr;
    std::map<int, Vec> comp_;
    mutable std::map<int, WordCombo> full_cache_;
};

LInftyMorphism identity_morphism(const LInftyAlgebra& g);
LInftyMorphism strict_morphism(const LInftyAlgebra& src, const LInftyAlgebra& tgt, const LinMap& f11);

// g -o-> h: compose(second, first) has (second o first)(w) = second(first(w)).
LInftyMorphism compose_morphisms(const LInftyMorphism& second, const LInftyMorphism& first);

// Verifies that the corestriction of F o d_src - d_tgt o F onto h[1] vanishes
// on all words of weight <= depth(tgt) + 2; higher weights vanish by degree
// and both sides are coderivations along F, so this decides Eq-level equality.
Report check_morphism(const LInftyMorphism& f, int max_weight = -1);

// Per-degree dimensions of H(g[1], lambda_1). Keys are degrees of g[1].
std::map<int, int> underlying_cohomology(const LInftyAlgebra& g);

struct QuasiIsoResult {
    bool is_quasi_iso = false;
    // degree -> (dim H_src, dim H_tgt, rank of the induced map)
    std::map<int, std::array<int, 3>> per_degree;
};

QuasiIsoResult is_quasi_iso(const LInftyMorphism& f);

// Cocycle representatives of H at each degree of the complex (V, d), plus the
// image basis; used for induced maps and quasi-isomorphism decisions.
struct ComplexCohomology {
    std::map<int, std::vector<Vec>> representatives; // per degree, vectors in V
    std::map<int, int> dims;
};

ComplexCohomology complex_cohomology(const GradedSpace& v, const LinMap& d);

} // namespace lcwl

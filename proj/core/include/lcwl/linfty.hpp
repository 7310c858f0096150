#pragma once

#include "lcwl/coalgebra.hpp"
#include "lcwl/words.hpp"

#include <memory>

namespace lcwl {

struct Violation {
    std::string where;
    std::string detail;
};

struct Report {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary(const std::string& what) const;
};

std::string vec_str(const GradedSpace& space, const Vec& v);

// L-infinity algebra on a space concentrated in degrees [-d, 0], presented by
// its symmetric structure maps lambda_k : S^k(g[1]) -> g[1] of degree one,
// stored against canonical words of the shifted basis.
class LInftyAlgebra {
public:
    LInftyAlgebra() = default;
    explicit LInftyAlgebra(GradedSpace space);
    LInftyAlgebra(const LInftyAlgebra& o);
    LInftyAlgebra& operator=(const LInftyAlgebra& o);
    LInftyAlgebra(LInftyAlgebra&&) = default;
    LInftyAlgebra& operator=(LInftyAlgebra&&) = default;

    const GradedSpace& space() const { return space_; }
    const GradedSpace& shifted() const { return shifted_; }
    int depth() const { return depth_; }
    // lambda_k vanishes for k > depth+2 by degree counting: on a weight-k word
    // the image degree is at most -k+1 which leaves the shifted range below
    // -depth-1 once k exceeds depth+2.
    int max_arity() const { return depth_ + 2; }

    WordSpace& words() const;
    WordSpace& words(int min_weight) const;

    void set_lambda(int word_id, Vec value_in_shifted);
    void add_lambda(int word_id, const Vec& value_in_shifted, const Rat& scale = Rat(1));
    Vec lambda(int word_id) const;
    const std::map<int, Vec>& lambda_table() const { return lambda_; }
    // canonicalize a raw generator tuple, then evaluate lambda
    Vec lambda_raw(const std::vector<int>& raw) const;
    Vec lambda_of_combo(const WordCombo& combo) const;
    // lambda_1 as a homogeneous endomorphism of g[1]
    LinMap differential() const;

    // d_lambda(w), cached
    const WordCombo& coderivation(int word_id) const;

private:
    GradedSpace space_;
    GradedSpace shifted_;
    int depth_ = 0;
    std::map<int, Vec> lambda_;
    mutable std::unique_ptr<WordSpace> words_;
    mutable std::map<int, WordCombo> coder_cache_;
};

// Checks the symmetric Jacobi identities
//   sum_{i,sigma} eps(sigma) lambda_{n-i+1}(lambda_i(w_S) v w_{S^c}) = 0
// on every basis word of weight n <= max_n (default 2*depth+3), reporting each
// violated (n, word) slot. Slots whose image degree falls outside g[1] are
// skipped; they vanish identically.
Report check_jacobi(const LInftyAlgebra& g, int max_n = -1);

// Independent oracle: materializes d_lambda through the generic coderivation
// machinery and checks d^2 = 0 on all words of weight <= max_n.
Report check_jacobi_coderivation(const LInftyAlgebra& g, int max_n = -1);

// --- input in the skew bracket convention -------------------------------

struct SkewBracket {
    std::vector<int> args; // indices into the unshifted space, any order
    Vec value;             // in the unshifted space
};

// Decalage sign fixed by this library:
//   lambda_k(s x_1 v ... v s x_k) = (-1)^{sum_i (k-i)|x_i|} s [x_1,...,x_k]
// with |x_i| the unshifted degrees and the word in canonical order.
int decalage_sign(const GradedSpace& unshifted, const std::vector<int>& canonical_gens);

// Builds the structure from skew brackets [.]^k of degree 2-k; arguments are
// chi-canonicalized, rejecting non-skew (duplicate where forbidden) slots as
// zero. Throws on degree-inhomogeneous values.
LInftyAlgebra make_linfty(GradedSpace space, const std::vector<SkewBracket>& brackets);

// Inverse of the decalage dictionary: the skew bracket table on canonical
// tuples recovering exactly the stored lambdas. Round trips with make_linfty.
std::vector<SkewBracket> brackets_from_lambda(const LInftyAlgebra& g);

// --- crossed modules ------------------------------------------------------

// Crossed module of Lie algebras: partial: m1 -> m0 with an action
// D : m0 -> Der(m1), subject to the Peiffer identities.
struct CrossedModule {
    GradedSpace m1; // becomes degree -1
    GradedSpace m0; // becomes degree 0
    std::map<std::pair<int, int>, Vec> bracket1; // [u_i,u_j], keyed i<j
    std::map<std::pair<int, int>, Vec> bracket0; // [x_i,x_j], keyed i<j
    SpMat partial;                               // m1 -> m0
    std::vector<SpMat> action;                   // D_{x_i} on m1, per m0 basis index

    Vec bkt1(int i, int j) const;
    Vec bkt0(int i, int j) const;
    Vec act(int x, const Vec& u) const;
};

// Jacobi for both brackets, derivation property of the action, equivariance of
// partial and the two Peiffer identities.
Report check_crossed_module(const CrossedModule& cm);

// Strict 2-term algebra on m1[-1] (+) m0[0]: lambda_1 from partial, lambda_2
// from the brackets and the action, lambda_3 = 0.
LInftyAlgebra from_crossed_module(const CrossedModule& cm);

} // namespace lcwl

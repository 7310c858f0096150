#pragma once

#include "lcwl/words.hpp"

#include <functional>

namespace lcwl {

// Combination of words, keyed by word id.
using WordCombo = std::map<int, Rat>;

void combo_add(WordCombo& acc, int word, const Rat& c);
void combo_add(WordCombo& acc, const WordCombo& other, const Rat& scale = Rat(1));
bool combo_is_zero(const WordCombo& c);

// Corestriction data: word id -> value in the word basis of the same space
// (for coderivations) or of another space (for coalgebra morphisms). Words
// without an entry map to zero.
using Corestriction = std::function<Vec(int word_id)>;

// Coderivation induced by a corestriction lambda : S(V) -> V,
//   d(w) = mu o (lambda (x) id) o Delta (w),
// expanded over the coproduct; d(1) = 0. The unit never contributes since
// lambda has no weight-0 component.
WordCombo coderivation_apply(WordSpace& words, const Corestriction& lambda, int word_id);

// The unique coalgebra morphism S(src) -> S(tgt) with the given corestriction:
// sum over unordered set partitions of the word, the corestriction applied
// blockwise, products canonicalized with Koszul signs. Fixes F(1) = 1.
WordCombo coalgebra_morphism_apply(WordSpace& src, WordSpace& tgt, const Corestriction& comp,
                                   int word_id);

// Unordered set partitions of {0..n-1} as restricted-growth strings;
// blocks are listed by ascending minimal element.
std::vector<std::vector<std::vector<int>>> set_partitions(int n);

// Koszul sign of rearranging the generators of `word` into the concatenation
// of the given blocks (each block ascending).
int block_sign(const WordSpace& words, int word_id, const std::vector<std::vector<int>>& blocks);

} // namespace lcwl

#pragma once

#include "lcwl/graded.hpp"
#include "lcwl/permutation.hpp"

namespace lcwl {

// Canonical symmetric word over a fixed shifted basis: generator indices in
// canonical order. The empty word is the coalgebra unit 1.
struct SymWord {
    std::vector<int> gen;
    int weight() const { return (int)gen.size(); }
};

struct CoprodTerm {
    int sign;  // +1 or -1
    int left;  // word id
    int right; // word id
};

// Result of canonicalization: sign = 0 encodes the zero word (a repeated
// odd generator); otherwise sign is the Koszul sign of the sorting permutation.
struct Canonical {
    int sign = 0;
    int id = -1;
    explicit operator bool() const { return sign != 0; }
};

// Enumerated basis of S(base) up to a weight bound, with the deconcatenation
// coproduct. Word ids are stable under growth: ordered by weight, then
// lexicographically in the canonical generator order.
//
// Canonical generator order: by (degree, index). A word with a repeated
// odd-degree generator is zero and is never enumerated; repeated even-degree
// generators are allowed.
class WordSpace {
public:
    explicit WordSpace(GradedSpace base, int max_weight = 0);

    const GradedSpace& base() const { return base_; }
    int max_weight() const { return max_weight_; }

    // Grows the enumeration; invalidates nothing (append-only). Not
    // re-entrant: finish growth before any concurrent reads.
    void ensure_weight(int w);

    int size() const { return (int)words_.size(); }
    int unit_id() const { return 0; }
    const SymWord& word(int id) const { return words_.at(id); }
    int weight(int id) const { return words_[id].weight(); }
    int degree(int id) const { return degree_[id]; }
    const std::vector<int>& ids_of_weight(int w) const;
    std::string label(int id) const;

    // Sorts `raw` into canonical order, returning the Koszul sign; sign 0
    // marks the zero word. Grows the enumeration as needed.
    Canonical canonicalize(std::vector<int> raw);
    // Lookup without growth; throws if the weight is not enumerated.
    int index_of(const std::vector<int>& canonical_gens) const;

    // Full symmetric deconcatenation of Eq-style
    //   Delta(w) = sum over splits (S, S^c) with Koszul signs,
    // including the unit terms 1(x)w and w(x)1. Cached.
    const std::vector<CoprodTerm>& coproduct(int id);
    // Same with both unit terms dropped.
    std::vector<CoprodTerm> reduced_coproduct(int id);

    // Concatenate then canonicalize; graded commutative.
    Canonical product(int id1, int id2);

    // Koszul sign picked up when the generators at positions `left_positions`
    // (ascending) of word `id` are pulled to the front.
    int split_sign(int id, const std::vector<int>& left_positions) const;

private:
    GradedSpace base_;
    std::vector<int> rank_;  // generator -> canonical rank
    int max_weight_ = -1;
    std::vector<SymWord> words_;
    std::vector<int> degree_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> by_weight_;
    std::map<int, std::vector<CoprodTerm>> coprod_; // stable under growth

    void enumerate_weight(int w);
};

} // namespace lcwl

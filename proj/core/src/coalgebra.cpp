#include "lcwl/coalgebra.hpp"

namespace lcwl {

void combo_add(WordCombo& acc, int word, const Rat& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = acc.try_emplace(word, c);
    if (!fresh) {
        it->second += c;
        if (is_zero(it->second)) acc.erase(it);
    }
}

void combo_add(WordCombo& acc, const WordCombo& other, const Rat& scale) {
    for (const auto& [w, c] : other) combo_add(acc, w, c * scale);
}

bool combo_is_zero(const WordCombo& c) {
    for (const auto& [w, x] : c)
        if (!is_zero(x)) return false;
    return true;
}

WordCombo coderivation_apply(WordSpace& words, const Corestriction& lambda, int word_id) {
    WordCombo out;
    for (const auto& term : words.coproduct(word_id)) {
        if (term.left == words.unit_id()) continue; // lambda(1) = 0
        Vec head = lambda(term.left);
        if (head.empty()) continue;
        const auto& rest = words.word(term.right).gen;
        for (const auto& [gen, coeff] : head) {
            std::vector<int> raw;
            raw.reserve(rest.size() + 1);
            raw.push_back(gen);
            raw.insert(raw.end(), rest.begin(), rest.end());
            Canonical c = words.canonicalize(std::move(raw));
            if (!c) continue;
            combo_add(out, c.id, Rat(term.sign * c.sign) * coeff);
        }
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    if (n == 0) return out;
    std::vector<int> rgs(n, 0);
    while (true) {
        int blocks = 0;
        for (int v : rgs) blocks = std::max(blocks, v + 1);
        std::vector<std::vector<int>> part(blocks);
        for (int i = 0; i < n; ++i) part[rgs[i]].push_back(i);
        out.push_back(std::move(part));
        // next restricted-growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
            if (rgs[i] <= cap) break;
        }
        if (i == 0) break;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
    return out;
}

int block_sign(const WordSpace& words, int word_id, const std::vector<std::vector<int>>& blocks) {
    const auto& gens = words.word(word_id).gen;
    std::vector<int> block_of(gens.size());
    for (int b = 0; b < (int)blocks.size(); ++b)
        for (int p : blocks[b]) block_of[p] = b;
    int sign = 1;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (block_of[i] > block_of[j] && (words.base().degree(gens[i]) & 1) &&
                (words.base().degree(gens[j]) & 1))
                sign = -sign;
    return sign;
}

WordCombo coalgebra_morphism_apply(WordSpace& src, WordSpace& tgt, const Corestriction& comp,
                                   int word_id) {
    WordCombo out;
    if (word_id == src.unit_id()) {
        combo_add(out, tgt.unit_id(), Rat(1));
        return out;
    }
    const auto& gens = src.word(word_id).gen;
    const int n = (int)gens.size();
    for (const auto& blocks : set_partitions(n)) {
        int psign = block_sign(src, word_id, blocks);
        // corestriction per block; a block without a component kills the term
        std::vector<Vec> values;
        values.reserve(blocks.size());
        bool dead = false;
        for (const auto& block : blocks) {
            std::vector<int> sub;
            sub.reserve(block.size());
            for (int p : block) sub.push_back(gens[p]);
            Vec v = comp(src.index_of(sub));
            if (v.empty()) {
                dead = true;
                break;
            }
            values.push_back(std::move(v));
        }
        if (dead) continue;
        // distribute the product over the block values
        std::vector<Vec::const_iterator> its;
        for (const auto& v : values) its.push_back(v.begin());
        while (true) {
            Rat coeff(psign);
            std::vector<int> raw;
            raw.reserve(values.size());
            for (size_t b = 0; b < values.size(); ++b) {
                coeff *= its[b]->second;
                raw.push_back(its[b]->first);
            }
            Canonical c = tgt.canonicalize(std::move(raw));
            if (c) combo_add(out, c.id, coeff * c.sign);
            // advance the multi-iterator
            int b = (int)values.size() - 1;
            while (b >= 0) {
                ++its[b];
                if (its[b] != values[b].end()) break;
                its[b] = values[b].begin();
                --b;
            }
            if (b < 0) break;
        }
    }
    return out;
}

} // namespace lcwl

#include "lcwl/words.hpp"

#include <algorithm>
#include <numeric>

namespace lcwl {

WordSpace::WordSpace(GradedSpace base, int max_weight) : base_(std::move(base)) {
    // canonical rank: sort generators by (degree, index)
    std::vector<int> order(base_.dim());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::make_pair(base_.degree(i), i) < std::make_pair(base_.degree(j), j);
    });
    rank_.assign(base_.dim(), 0);
    for (int r = 0; r < (int)order.size(); ++r) rank_[order[r]] = r;
    ensure_weight(std::max(0, max_weight));
}

void WordSpace::ensure_weight(int w) {
    for (int k = max_weight_ + 1; k <= w; ++k) enumerate_weight(k);
    max_weight_ = std::max(max_weight_, w);
}

void WordSpace::enumerate_weight(int w) {
    if ((int)by_weight_.size() <= w) by_weight_.resize(w + 1);
    std::vector<int> cur;
    cur.reserve(w);
    // non-decreasing in rank; odd-degree generators may not repeat
    auto emit = [&]() {
        int id = (int)words_.size();
        int deg = 0;
        for (int g : cur) deg += base_.degree(g);
        words_.push_back(SymWord{cur});
        degree_.push_back(deg);
        index_.emplace(cur, id);
        by_weight_[w].push_back(id);
    };
    std::vector<int> order(base_.dim());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return rank_[i] < rank_[j]; });
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)cur.size() == w) {
            emit();
            return;
        }
        for (int pos = from; pos < (int)order.size(); ++pos) {
            int g = order[pos];
            if (!cur.empty() && cur.back() == g && (base_.degree(g) & 1)) continue;
            cur.push_back(g);
            self(self, pos);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

const std::vector<int>& WordSpace::ids_of_weight(int w) const {
    static const std::vector<int> empty;
    if (w < 0 || w >= (int)by_weight_.size()) return empty;
    return by_weight_[w];
}

std::string WordSpace::label(int id) const {
    const auto& w = words_.at(id);
    if (w.gen.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.gen.size(); ++i) {
        if (i) out += "^";
        out += base_.name(w.gen[i]);
    }
    return out;
}

Canonical WordSpace::canonicalize(std::vector<int> raw) {
    for (int g : raw)
        if (g < 0 || g >= base_.dim()) throw Error("canonicalize: generator index out of range");
    int sign = 1;
    // insertion sort by rank, flipping the sign per odd-odd crossing
    for (size_t i = 1; i < raw.size(); ++i) {
        for (size_t j = i; j > 0 && rank_[raw[j]] < rank_[raw[j - 1]]; --j) {
            if ((base_.degree(raw[j]) & 1) && (base_.degree(raw[j - 1]) & 1)) sign = -sign;
            std::swap(raw[j], raw[j - 1]);
        }
    }
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i] == raw[i - 1] && (base_.degree(raw[i]) & 1)) return Canonical{0, -1};
    ensure_weight((int)raw.size());
    auto it = index_.find(raw);
    if (it == index_.end()) throw Error("canonicalize: word not enumerated");
    return Canonical{sign, it->second};
}

int WordSpace::index_of(const std::vector<int>& canonical_gens) const {
    auto it = index_.find(canonical_gens);
    if (it == index_.end()) throw Error("index_of: word not enumerated");
    return it->second;
}

int WordSpace::split_sign(int id, const std::vector<int>& left_positions) const {
    const auto& gens = words_.at(id).gen;
    std::vector<char> in_left(gens.size(), 0);
    for (int p : left_positions) in_left[p] = 1;
    // pulling the chosen generators to the front crosses every earlier
    // unchosen generator; only odd-odd crossings contribute
    int sign = 1;
    for (size_t j = 0; j < gens.size(); ++j) {
        if (!in_left[j]) continue;
        if (!(base_.degree(gens[j]) & 1)) continue;
        for (size_t i = 0; i < j; ++i)
            if (!in_left[i] && (base_.degree(gens[i]) & 1)) sign = -sign;
    }
    return sign;
}

const std::vector<CoprodTerm>& WordSpace::coproduct(int id) {
    if (auto it = coprod_.find(id); it != coprod_.end()) return it->second;
    const auto& gens = words_.at(id).gen;
    const int n = (int)gens.size();
    std::vector<CoprodTerm> terms;
    std::vector<int> left, right, pos;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        left.clear();
        right.clear();
        pos.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                left.push_back(gens[i]);
                pos.push_back(i);
            } else {
                right.push_back(gens[i]);
            }
        int sign = split_sign(id, pos);
        // subwords of a canonical word are canonical; zero subwords impossible
        terms.push_back(CoprodTerm{sign, index_.at(left), index_.at(right)});
    }
    auto [it, ok] = coprod_.emplace(id, std::move(terms));
    return it->second;
}

std::vector<CoprodTerm> WordSpace::reduced_coproduct(int id) {
    std::vector<CoprodTerm> out;
    for (const auto& t : coproduct(id))
        if (t.left != unit_id() && t.right != unit_id()) out.push_back(t);
    return out;
}

Canonical WordSpace::product(int id1, int id2) {
    std::vector<int> cat = words_.at(id1).gen;
    const auto& g2 = words_.at(id2).gen;
    cat.insert(cat.end(), g2.begin(), g2.end());
    return canonicalize(std::move(cat));
}

} // namespace lcwl

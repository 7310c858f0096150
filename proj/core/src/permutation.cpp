#include "lcwl/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace lcwl {

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= (int)p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

int koszul_sign(const Perm& perm, const std::vector<int>& degrees) {
    if (perm.size() != degrees.size()) throw Error("koszul_sign: perm/degrees length mismatch");
    if (!is_permutation(perm)) throw Error("koszul_sign: not a permutation");
    // Every inversion pair crosses exactly once; only odd-odd crossings flip the sign.
    long flips = 0;
    const int n = (int)perm.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j] && (degrees[perm[i]] & 1) && (degrees[perm[j]] & 1)) ++flips;
    return (flips & 1) ? -1 : 1;
}

int perm_sign(const Perm& perm) {
    long inv = 0;
    const int n = (int)perm.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

int skew_sign(const Perm& perm, const std::vector<int>& degrees) {
    return perm_sign(perm) * koszul_sign(perm, degrees);
}

Perm compose(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw Error("compose: size mismatch");
    Perm r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = t[s[i]];
    return r;
}

std::vector<Perm> unshuffles(int k, int l) {
    if (k < 0 || l < 0) throw Error("unshuffles: negative block size");
    const int n = k + l;
    std::vector<Perm> out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Perm p;
        p.reserve(n);
        std::vector<char> in_pick(n, 0);
        for (int v : pick) {
            p.push_back(v);
            in_pick[v] = 1;
        }
        for (int v = 0; v < n; ++v)
            if (!in_pick[v]) p.push_back(v);
        out.push_back(std::move(p));
        // next k-combination of {0..n-1}
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace lcwl

#pragma once

#include "lcwl/rational.hpp"

#include <cstdint>

namespace lcwl {

// splitmix64: tiny, stable across platforms. Every randomized construction in
// the library threads one of these through explicitly, so runs are
// reproducible from the seed alone.
class Prng {
public:
    explicit Prng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) { return lo + (int)below((uint64_t)(hi - lo + 1)); }

    // small rational with numerator in [-max_num, max_num] and denominator in [1, max_den]
    Rat rat(int max_num = 3, int max_den = 2) {
        long num = (long)below(2 * (uint64_t)max_num + 1) - max_num;
        long den = 1 + (long)below((uint64_t)max_den);
        return rat_of(num, den);
    }

    Rat nonzero_rat(int max_num = 3, int max_den = 2) {
        Rat r;
        do r = rat(max_num, max_den);
        while (is_zero(r));
        return r;
    }

private:
    uint64_t state_;
};

} // namespace lcwl

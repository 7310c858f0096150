#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace lcwl {

// Exact rational scalar. All core arithmetic runs over Q; there is no
// floating-point code path anywhere in the library.
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    try {
        Rat r(text);
        if (r.get_den() == 0) throw Error("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal '" + text + "'");
    }
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

} // namespace lcwl

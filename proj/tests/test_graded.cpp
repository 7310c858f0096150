#include <doctest.h>

#include "lcwl/graded.hpp"
#include "lcwl/permutation.hpp"
#include "lcwl/prng.hpp"

using namespace lcwl;

namespace {

// Oracle: realize the reordering by explicit adjacent swaps and accumulate
// (-1)^{ab} per swap. Independent of the inversion-pair count in the library.
int koszul_by_bubble(const Perm& perm, const std::vector<int>& degrees) {
    std::vector<int> cur(perm.begin(), perm.end());
    int sign = 1;
    for (size_t i = 0; i < cur.size(); ++i)
        for (size_t j = 0; j + 1 < cur.size() - i; ++j)
            if (cur[j] > cur[j + 1]) {
                if ((degrees[cur[j]] & 1) && (degrees[cur[j + 1]] & 1)) sign = -sign;
                std::swap(cur[j], cur[j + 1]);
            }
    return sign;
}

} // namespace

TEST_CASE("koszul sign basics") {
    CHECK(koszul_sign({0, 1, 2}, {-1, -2, -3}) == 1);          // identity
    CHECK(koszul_sign({1, 0}, {-1, -1}) == -1);                // two odds anticommute
    CHECK(koszul_sign({1, 0}, {-2, -1}) == 1);                 // even crossing is free
    // 3-cycle sending slot 1 -> 2 -> 3 -> 1 on degrees (-1,-1,-2)
    Perm cyc{2, 0, 1};
    std::vector<int> degs{-1, -1, -2};
    int expect = koszul_by_bubble(cyc, degs);
    CHECK(expect == 1);
    CHECK(koszul_sign(cyc, degs) == expect);
}

TEST_CASE("koszul sign agrees with bubble oracle and is a cocycle, n <= 5") {
    Prng rng(7);
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> degs(n);
        for (int& d : degs) d = -rng.range(0, 3);
        auto perms = all_permutations(n);
        for (const auto& p : perms) CHECK(koszul_sign(p, degs) == koszul_by_bubble(p, degs));
        // cocycle: applying t then s composes with the t-permuted degree list
        for (const auto& s : perms)
            for (const auto& t : perms) {
                std::vector<int> tdegs(n);
                for (int i = 0; i < n; ++i) tdegs[i] = degs[t[i]];
                CHECK(koszul_sign(compose(s, t), degs) ==
                      koszul_sign(s, tdegs) * koszul_sign(t, degs));
            }
    }
    // n = 5 spot checks
    std::vector<int> degs{-1, -1, -2, -3, 0};
    for (const auto& p : all_permutations(5)) {
        CHECK(koszul_sign(p, degs) == koszul_by_bubble(p, degs));
        CHECK(skew_sign(p, degs) == perm_sign(p) * koszul_sign(p, degs));
    }
}

TEST_CASE("skew sign examples") {
    CHECK(skew_sign({0, 1}, {0, 0}) == 1);
    CHECK(skew_sign({1, 0}, {0, 0}) == -1);  // ungraded antisymmetry
    CHECK(skew_sign({1, 0}, {-1, -1}) == 1); // -(-1)^{|v||w|} on two odds
}

TEST_CASE("shift") {
    GradedSpace v({"a", "b"}, {-1, 0});
    GradedSpace s = shift(v, 1);
    CHECK(s.degree(0) == -2);
    CHECK(s.degree(1) == -1);
    GradedSpace round = shift(shift(v, 3), -3);
    CHECK(round.degrees == v.degrees);
    CHECK(round.names == v.names);
    GradedSpace z({"x"}, {0});
    CHECK(shift(z, 1).degree(0) == -1);
}

TEST_CASE("tensor of maps: signs and interchange law") {
    GradedSpace v({"v0", "v1"}, {0, -1});
    GradedSpace w({"w0", "w1"}, {0, 1});
    // f degree 0, g degree 1: coefficient picks up (-1)^{|v|}
    LinMap f(v, v, 0);
    f.set(0, 0, Rat(1));
    f.set(1, 1, Rat(1));
    LinMap g(w, w, 1);
    g.set(0, 1, Rat(1));
    LinMap fg = tensor_of_maps(f, g);
    // v1 has degree -1: (f(x)g)(v1(x)w0) = (-1)^{1*(-1)} v1(x)w1
    CHECK(fg.a.at({1 * 2 + 0, 1 * 2 + 1}) == Rat(-1));
    CHECK(fg.a.at({0 * 2 + 0, 0 * 2 + 1}) == Rat(1));
    fg.validate();

    // interchange law on randomized homogeneous maps:
    // (f1(x)f2) o (g1(x)g2) = (-1)^{|f2||g1|} (f1 o g1)(x)(f2 o g2)
    Prng rng(11);
    GradedSpace a({"a0", "a1", "a2"}, {0, -1, -2});
    auto random_map = [&](const GradedSpace& src, int deg) {
        LinMap m(src, src, deg);
        for (int i = 0; i < src.dim(); ++i)
            for (int j = 0; j < src.dim(); ++j)
                if (src.degree(j) - src.degree(i) == deg) m.set(i, j, rng.rat());
        m.validate();
        return m;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int df1 = rng.range(-1, 1), df2 = rng.range(-1, 1);
        int dg1 = rng.range(-1, 1), dg2 = rng.range(-1, 1);
        LinMap f1 = random_map(a, df1), f2 = random_map(a, df2);
        LinMap g1 = random_map(a, dg1), g2 = random_map(a, dg2);
        LinMap lhs = compose(tensor_of_maps(f1, f2), tensor_of_maps(g1, g2));
        LinMap rhs = tensor_of_maps(compose(f1, g1), compose(f2, g2));
        Rat sgn((df2 & 1) && (dg1 & 1) ? -1 : 1);
        LinMap diff = map_sum(lhs, rhs, Rat(1), -sgn);
        CHECK(diff.is_zero());
    }
}

TEST_CASE("scalar arithmetic is exact") {
    Prng rng(3);
    for (int i = 0; i < 200; ++i) {
        Rat a = rng.rat(1000, 997), b = rng.rat(1000, 991);
        CHECK(a + b - b == a);
        if (!is_zero(b)) CHECK((a / b) * b == a);
    }
    CHECK(parse_rat("4/6") == rat_of(2, 3));
    CHECK(parse_rat("-12") == rat_of(-12));
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
}

TEST_CASE("graded space guards") {
    CHECK_THROWS_AS(GradedSpace({"a", "a"}, {0, 0}), Error);
    GradedSpace v({"a", "b"}, {0, -1});
    Vec mixed;
    mixed.emplace(0, Rat(1));
    mixed.emplace(1, Rat(1));
    CHECK_THROWS_AS(v.element_degree(mixed), Error);
}

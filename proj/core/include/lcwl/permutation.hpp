#pragma once

#include "lcwl/rational.hpp"

#include <vector>

namespace lcwl {

// A permutation sigma of {0..n-1} stored as the reordering it performs:
// applying sigma to a list (v_0,...,v_{n-1}) yields (v_{sigma[0]},...,v_{sigma[n-1]}).
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

// Koszul sign of sigma for homogeneous elements with the given degrees:
// each crossing of two elements of degrees a,b contributes (-1)^{ab}.
// Multiplicative cocycle: applying tau to the list and then sigma equals
// applying compose(sigma,tau), and
//   koszul_sign(compose(sigma,tau),d) = koszul_sign(sigma, d o tau) * koszul_sign(tau, d).
int koszul_sign(const Perm& perm, const std::vector<int>& degrees);

// Sign of the skew-symmetric action: sign(sigma) * koszul_sign(sigma).
int skew_sign(const Perm& perm, const std::vector<int>& degrees);

int perm_sign(const Perm& perm);

// compose(s,t)[i] = t[s[i]]; applying it to a list reorders by t first, then s.
Perm compose(const Perm& s, const Perm& t);

// All (k,l)-unshuffles of {0..k+l-1}: increasing on the first k and last l slots.
// Exactly binomial(k+l,k) of them, emitted in lexicographic order of the leading block.
std::vector<Perm> unshuffles(int k, int l);

std::vector<Perm> all_permutations(int n);

} // namespace lcwl

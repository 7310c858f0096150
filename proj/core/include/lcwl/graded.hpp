#pragma once

#include "lcwl/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace lcwl {

// Sparse coordinates of an element in a fixed ordered basis.
using Vec = std::map<int, Rat>;

void vec_add(Vec& acc, const Vec& v, const Rat& scale = Rat(1));
bool vec_is_zero(const Vec& v);
Vec vec_scaled(const Vec& v, const Rat& scale);
void vec_prune(Vec& v);

// Bare sparse matrix over basis indices: (row=source index, col=target index).
using SpMat = std::map<std::pair<int, int>, Rat>;

Vec spmat_apply(const SpMat& m, const Vec& v);
void spmat_add(SpMat& acc, const SpMat& m, const Rat& scale = Rat(1));
void spmat_set(SpMat& m, int i, int j, const Rat& c);
bool spmat_is_zero(const SpMat& m);

// Finite graded vector space with a named, ordered basis.
struct GradedSpace {
    std::vector<std::string> names;
    std::vector<int> degrees;

    GradedSpace() = default;
    GradedSpace(std::vector<std::string> n, std::vector<int> d);

    int dim() const { return (int)names.size(); }
    int degree(int i) const { return degrees.at(i); }
    const std::string& name(int i) const { return names.at(i); }
    int index_of(const std::string& name) const; // -1 if absent
    int min_degree() const;
    int max_degree() const;

    bool same_grading(const GradedSpace& other) const { return degrees == other.degrees; }

    // True degree of a sparse element; throws on inhomogeneous support.
    // Empty support reports `fallback`.
    int element_degree(const Vec& v, int fallback = 0) const;
};

// V[k]: same basis names, degree n goes to n-k.
GradedSpace shift(const GradedSpace& space, int k);

// V (x) W with index (i,j) -> i*dim(W)+j and additive degrees.
GradedSpace tensor_space(const GradedSpace& a, const GradedSpace& b);

// End(V) with basis E[i,j]: e_j -> e_i, of degree deg(i)-deg(j); index i*dim+j.
GradedSpace end_space(const GradedSpace& v);

// Homogeneous linear map between graded index sets.
struct LinMap {
    GradedSpace src;
    GradedSpace tgt;
    int degree = 0;
    std::map<std::pair<int, int>, Rat> a; // (src index, tgt index) -> coefficient

    LinMap() = default;
    LinMap(GradedSpace s, GradedSpace t, int deg) : src(std::move(s)), tgt(std::move(t)), degree(deg) {}

    void set(int i, int j, const Rat& c);
    void add(int i, int j, const Rat& c);
    Vec column(int i) const; // image of basis vector i
    Vec apply(const Vec& v) const;
    bool is_zero() const;

    // Every entry must connect degrees differing by exactly `degree`.
    void validate() const;
};

LinMap identity_map(const GradedSpace& v);
LinMap zero_map(const GradedSpace& src, const GradedSpace& tgt, int degree);
LinMap compose(const LinMap& outer, const LinMap& inner); // outer o inner
LinMap map_sum(const LinMap& f, const LinMap& g, const Rat& cf = Rat(1), const Rat& cg = Rat(1));

// (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).
LinMap tensor_of_maps(const LinMap& f, const LinMap& g);

} // namespace lcwl

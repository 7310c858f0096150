#include "lcwl/graded.hpp"

#include <algorithm>
#include <set>

namespace lcwl {

void vec_add(Vec& acc, const Vec& v, const Rat& scale) {
    if (is_zero(scale)) return;
    for (const auto& [i, c] : v) {
        auto it = acc.find(i);
        if (it == acc.end()) {
            Rat t = c * scale;
            if (!is_zero(t)) acc.emplace(i, std::move(t));
        } else {
            it->second += c * scale;
            if (is_zero(it->second)) acc.erase(it);
        }
    }
}

bool vec_is_zero(const Vec& v) {
    for (const auto& [i, c] : v)
        if (!is_zero(c)) return false;
    return true;
}

Vec vec_scaled(const Vec& v, const Rat& scale) {
    Vec out;
    if (is_zero(scale)) return out;
    for (const auto& [i, c] : v) out.emplace(i, c * scale);
    return out;
}

void vec_prune(Vec& v) {
    for (auto it = v.begin(); it != v.end();)
        it = is_zero(it->second) ? v.erase(it) : std::next(it);
}

Vec spmat_apply(const SpMat& m, const Vec& v) {
    Vec out;
    for (const auto& [k, c] : m) {
        auto it = v.find(k.first);
        if (it == v.end()) continue;
        Rat t = c * it->second;
        if (is_zero(t)) continue;
        auto [pos, fresh] = out.try_emplace(k.second, t);
        if (!fresh) {
            pos->second += t;
            if (is_zero(pos->second)) out.erase(pos);
        }
    }
    return out;
}

void spmat_add(SpMat& acc, const SpMat& m, const Rat& scale) {
    if (is_zero(scale)) return;
    for (const auto& [k, c] : m) {
        auto it = acc.find(k);
        if (it == acc.end()) {
            Rat t = c * scale;
            if (!is_zero(t)) acc.emplace(k, std::move(t));
        } else {
            it->second += c * scale;
            if (is_zero(it->second)) acc.erase(it);
        }
    }
}

void spmat_set(SpMat& m, int i, int j, const Rat& c) {
    if (is_zero(c))
        m.erase({i, j});
    else
        m[{i, j}] = c;
}

bool spmat_is_zero(const SpMat& m) {
    for (const auto& [k, c] : m)
        if (!is_zero(c)) return false;
    return true;
}

GradedSpace::GradedSpace(std::vector<std::string> n, std::vector<int> d)
    : names(std::move(n)), degrees(std::move(d)) {
    if (names.size() != degrees.size()) throw Error("GradedSpace: names/degrees length mismatch");
    std::set<std::string> seen;
    for (const auto& nm : names)
        if (!seen.insert(nm).second) throw Error("GradedSpace: duplicate basis name '" + nm + "'");
}

int GradedSpace::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (names[i] == name) return i;
    return -1;
}

int GradedSpace::min_degree() const {
    if (degrees.empty()) return 0;
    return *std::min_element(degrees.begin(), degrees.end());
}

int GradedSpace::max_degree() const {
    if (degrees.empty()) return 0;
    return *std::max_element(degrees.begin(), degrees.end());
}

int GradedSpace::element_degree(const Vec& v, int fallback) const {
    bool found = false;
    int deg = fallback;
    for (const auto& [i, c] : v) {
        if (is_zero(c)) continue;
        if (!found) {
            deg = degree(i);
            found = true;
        } else if (degree(i) != deg) {
            throw Error("inhomogeneous element");
        }
    }
    return deg;
}

GradedSpace shift(const GradedSpace& space, int k) {
    GradedSpace out = space;
    for (int& d : out.degrees) d -= k;
    return out;
}

GradedSpace tensor_space(const GradedSpace& a, const GradedSpace& b) {
    GradedSpace out;
    out.names.reserve((size_t)a.dim() * b.dim());
    out.degrees.reserve((size_t)a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            out.names.push_back(a.name(i) + "(x)" + b.name(j));
            out.degrees.push_back(a.degree(i) + b.degree(j));
        }
    return out;
}

GradedSpace end_space(const GradedSpace& v) {
    GradedSpace out;
    const int n = v.dim();
    out.names.reserve((size_t)n * n);
    out.degrees.reserve((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.names.push_back("E[" + v.name(i) + "," + v.name(j) + "]");
            out.degrees.push_back(v.degree(i) - v.degree(j));
        }
    return out;
}

void LinMap::set(int i, int j, const Rat& c) {
    if (lcwl::is_zero(c))
        a.erase({i, j});
    else
        a[{i, j}] = c;
}

void LinMap::add(int i, int j, const Rat& c) {
    auto it = a.find({i, j});
    if (it == a.end()) {
        if (!lcwl::is_zero(c)) a.emplace(std::make_pair(i, j), c);
    } else {
        it->second += c;
        if (lcwl::is_zero(it->second)) a.erase(it);
    }
}

Vec LinMap::column(int i) const {
    Vec out;
    auto it = a.lower_bound({i, 0});
    for (; it != a.end() && it->first.first == i; ++it)
        if (!lcwl::is_zero(it->second)) out.emplace(it->first.second, it->second);
    return out;
}

Vec LinMap::apply(const Vec& v) const {
    Vec out;
    for (const auto& [i, c] : v) vec_add(out, column(i), c);
    return out;
}

bool LinMap::is_zero() const {
    for (const auto& [k, c] : a)
        if (!lcwl::is_zero(c)) return false;
    return true;
}

void LinMap::validate() const {
    for (const auto& [k, c] : a) {
        if (lcwl::is_zero(c)) continue;
        if (k.first < 0 || k.first >= src.dim() || k.second < 0 || k.second >= tgt.dim())
            throw Error("LinMap: entry out of range");
        if (tgt.degree(k.second) - src.degree(k.first) != degree)
            throw Error("LinMap: entry " + src.name(k.first) + " -> " + tgt.name(k.second) +
                        " violates degree " + std::to_string(degree));
    }
}

LinMap identity_map(const GradedSpace& v) {
    LinMap f(v, v, 0);
    for (int i = 0; i < v.dim(); ++i) f.set(i, i, Rat(1));
    return f;
}

LinMap zero_map(const GradedSpace& src, const GradedSpace& tgt, int degree) {
    return LinMap(src, tgt, degree);
}

LinMap compose(const LinMap& outer, const LinMap& inner) {
    if (!inner.tgt.same_grading(outer.src))
        throw Error("compose: incompatible grading data");
    LinMap out(inner.src, outer.tgt, inner.degree + outer.degree);
    for (const auto& [k, c] : inner.a) {
        Vec img = outer.column(k.second);
        for (const auto& [j, d] : img) out.add(k.first, j, c * d);
    }
    return out;
}

LinMap map_sum(const LinMap& f, const LinMap& g, const Rat& cf, const Rat& cg) {
    if (f.degree != g.degree || !f.src.same_grading(g.src) || !f.tgt.same_grading(g.tgt))
        throw Error("map_sum: incompatible maps");
    LinMap out(f.src, f.tgt, f.degree);
    for (const auto& [k, c] : f.a) out.add(k.first, k.second, c * cf);
    for (const auto& [k, c] : g.a) out.add(k.first, k.second, c * cg);
    return out;
}

LinMap tensor_of_maps(const LinMap& f, const LinMap& g) {
    LinMap out(tensor_space(f.src, g.src), tensor_space(f.tgt, g.tgt), f.degree + g.degree);
    const int gs = g.src.dim(), gt = g.tgt.dim();
    if (gs == 0 || gt == 0) return out;
    for (const auto& [kf, cf] : f.a)
        for (const auto& [kg, cg] : g.a) {
            // (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w)
            Rat c = cf * cg;
            if ((g.degree & 1) && (f.src.degree(kf.first) & 1)) c = -c;
            out.add(kf.first * gs + kg.first, kf.second * gt + kg.second, c);
        }
    return out;
}

} // namespace lcwl

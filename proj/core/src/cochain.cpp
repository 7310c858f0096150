#include "lcwl/cochain.hpp"

#include <sstream>

namespace lcwl {

Vec Cochain::at(int word) const {
    auto it = a.find(word);
    return it == a.end() ? Vec{} : it->second;
}

void Cochain::set(int word, Vec v) {
    vec_prune(v);
    if (v.empty())
        a.erase(word);
    else
        a[word] = std::move(v);
}

void Cochain::add(int word, const Vec& v, const Rat& scale) {
    Vec cur = at(word);
    vec_add(cur, v, scale);
    set(word, std::move(cur));
}

bool Cochain::is_zero() const {
    for (const auto& [w, v] : a)
        if (!vec_is_zero(v)) return false;
    return true;
}

bool Cochain::reduced() const {
    auto it = a.find(0);
    return it == a.end() || vec_is_zero(it->second);
}

Cochain Cochain::scaled(const Rat& c) const {
    Cochain out;
    out.degree = degree;
    if (lcwl::is_zero(c)) return out;
    for (const auto& [w, v] : a) out.a.emplace(w, vec_scaled(v, c));
    return out;
}

void cochain_add(Cochain& acc, const Cochain& other, const Rat& scale) {
    if (acc.degree != other.degree && !other.is_zero() && !acc.a.empty())
        throw Error("cochain_add: degree mismatch");
    for (const auto& [w, v] : other.a) acc.add(w, v, scale);
}

bool cochain_equal(const Cochain& x, const Cochain& y) {
    Cochain d = x;
    cochain_add(d, y, Rat(-1));
    return d.is_zero();
}

std::string cochain_str(const WordSpace& ws, const GradedSpace& v, const Cochain& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, val] : c.a) {
        if (vec_is_zero(val)) continue;
        if (!first) os << "; ";
        os << ws.label(w) << " -> " << vec_str(v, val);
        first = false;
    }
    return os.str();
}

std::pair<int, int> weight_window(const LInftyAlgebra& g, const GradedSpace& v, int p) {
    if (v.dim() == 0) return {1, 0};
    const int vmin = v.min_degree(), vmax = v.max_degree();
    if (g.shifted().dim() == 0) {
        // only the unit word exists
        return (p >= vmin && p <= vmax) ? std::make_pair(0, 0) : std::make_pair(1, 0);
    }
    const int smin = g.shifted().min_degree(); // most negative
    const int smax = g.shifted().max_degree(); // <= -1
    // need k*smax >= vmin - p and k*smin <= vmax - p
    int hi = (p - vmin) / (-smax);
    if (p - vmin < 0) hi = -1;
    long lo_num = p - vmax;
    int lo = lo_num <= 0 ? 0 : (int)((lo_num + (-smin) - 1) / (-smin));
    if (lo > hi) return {1, 0};
    return {lo, hi};
}

Cochain CochainBasis::element(int i) const {
    Cochain c;
    c.degree = degree;
    const auto& [w, vb] = slots.at(i);
    Vec v;
    v.emplace(vb, Rat(1));
    c.set(w, std::move(v));
    return c;
}

Vec CochainBasis::coordinates(const Cochain& c) const {
    std::map<std::pair<int, int>, int> pos;
    for (int i = 0; i < (int)slots.size(); ++i) pos[slots[i]] = i;
    Vec out;
    for (const auto& [w, v] : c.a)
        for (const auto& [vb, x] : v) {
            if (is_zero(x)) continue;
            auto it = pos.find({w, vb});
            if (it == pos.end()) throw Error("cochain has support outside the basis");
            out.emplace(it->second, x);
        }
    return out;
}

Cochain CochainBasis::from_coordinates(const Vec& coords) const {
    Cochain c;
    c.degree = degree;
    for (const auto& [i, x] : coords) {
        const auto& [w, vb] = slots.at(i);
        c.add(w, Vec{{vb, x}});
    }
    return c;
}

CochainBasis cochain_basis(const LInftyAlgebra& g, const GradedSpace& v, int p) {
    CochainBasis basis;
    basis.degree = p;
    auto [lo, hi] = weight_window(g, v, p);
    if (lo > hi) return basis;
    WordSpace& ws = g.words(hi);
    for (int k = lo; k <= hi; ++k)
        for (int wid : ws.ids_of_weight(k)) {
            const int want = ws.degree(wid) + p;
            for (int vb = 0; vb < v.dim(); ++vb)
                if (v.degree(vb) == want) basis.slots.push_back({wid, vb});
        }
    return basis;
}

void validate_cochain(const LInftyAlgebra& g, const GradedSpace& v, const Cochain& c) {
    auto [lo, hi] = weight_window(g, v, c.degree);
    for (const auto& [w, val] : c.a) {
        if (vec_is_zero(val)) continue;
        const int k = g.words().weight(w);
        if (k < lo || k > hi)
            throw Error("cochain weight " + std::to_string(k) + " outside the window [" +
                        std::to_string(lo) + "," + std::to_string(hi) + "]");
        if (v.element_degree(val) != g.words().degree(w) + c.degree)
            throw Error("cochain value of wrong degree on word " + g.words().label(w));
    }
}

Cochain ce_differential(const Ruth& r, const Cochain& alpha) {
    const LInftyAlgebra& g = r.g();
    Cochain out;
    out.degree = alpha.degree + 1;
    auto [lo, hi] = weight_window(g, r.coeffs, out.degree);
    if (lo > hi) return out;
    WordSpace& ws = g.words(hi);
    const bool odd_p = alpha.degree & 1;
    for (int k = lo; k <= hi; ++k)
        for (int wid : ws.ids_of_weight(k)) {
            Vec total;
            for (const auto& t : ws.coproduct(wid)) {
                Vec inner = alpha.at(t.right);
                if (inner.empty()) continue;
                int sgn = t.sign;
                if (odd_p && (ws.degree(t.left) & 1)) sgn = -sgn;
                vec_add(total, r.apply(t.left, inner), Rat(sgn));
            }
            for (const auto& [u, c] : g.coderivation(wid))
                vec_add(total, alpha.at(u), odd_p ? c : Rat(-c));
            out.set(wid, std::move(total));
        }
    return out;
}

Cochain cochain_product(const LinMap& m, const GradedSpace& v1, const GradedSpace& v2,
                        const LInftyAlgebra& g, const Cochain& alpha, const Cochain& beta) {
    if (m.degree != 0) throw Error("cochain_product: pairing must be degree 0");
    if (m.src.dim() != v1.dim() * v2.dim())
        throw Error("cochain_product: pairing source is not V1 (x) V2");
    Cochain out;
    out.degree = alpha.degree + beta.degree;
    const int dim2 = v2.dim();
    if (dim2 == 0 || v1.dim() == 0) return out;
    const bool beta_odd = beta.degree & 1;
    // output window over the *target* coefficients of m
    auto [lo, hi] = weight_window(g, m.tgt, out.degree);
    if (lo > hi) return out;
    WordSpace& ws = g.words(hi);
    for (int k = lo; k <= hi; ++k)
        for (int wid : ws.ids_of_weight(k)) {
            Vec total;
            for (const auto& t : ws.coproduct(wid)) {
                Vec va = alpha.at(t.left);
                if (va.empty()) continue;
                Vec vb = beta.at(t.right);
                if (vb.empty()) continue;
                int sgn = t.sign;
                if (beta_odd && (ws.degree(t.left) & 1)) sgn = -sgn;
                for (const auto& [i, ca] : va)
                    for (const auto& [j, cb] : vb)
                        vec_add(total, m.column(i * dim2 + j), Rat(sgn) * ca * cb);
            }
            out.set(wid, std::move(total));
        }
    return out;
}

LinMap ev_map(const GradedSpace& v) {
    GradedSpace es = end_space(v);
    LinMap m(tensor_space(es, v), v, 0);
    const int d = v.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m.set((i * d + j) * d + j, i, Rat(1)); // E[i,j] (x) e_j -> e_i
    return m;
}

Vec DglaCoefficients::brk(const Vec& x, const Vec& y) const {
    Vec out;
    const int d = space.dim();
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) vec_add(out, bracket.column(i * d + j), ci * cj);
    return out;
}

Report validate_dgla(const DglaCoefficients& l) {
    Report rep;
    const int d = l.space.dim();
    auto basis = [](int i) { return Vec{{i, Rat(1)}}; };
    // degree checks
    l.bracket.validate();
    for (const auto& [k, c] : l.differential)
        if (!is_zero(c) && l.space.degree(k.second) - l.space.degree(k.first) != 1)
            rep.violations.push_back({"differential", "entry of wrong degree"});
    // d^2 = 0
    if (!spmat_is_zero(spmat_compose(l.differential, l.differential)))
        rep.violations.push_back({"differential", "d^2 != 0"});
    // skew-symmetry [x,y] = -(-1)^{|x||y|}[y,x]
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            Vec s = l.brk(basis(i), basis(j));
            int sgn = (l.space.degree(i) & 1) && (l.space.degree(j) & 1) ? 1 : -1;
            vec_add(s, l.brk(basis(j), basis(i)), Rat(-sgn));
            if (!vec_is_zero(s))
                rep.violations.push_back(
                    {"skew at (" + l.space.name(i) + "," + l.space.name(j) + ")",
                     vec_str(l.space, s)});
        }
    // graded Jacobi [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Vec lhs = l.brk(basis(i), l.brk(basis(j), basis(k)));
                Vec rhs = l.brk(l.brk(basis(i), basis(j)), basis(k));
                int sgn = (l.space.degree(i) & 1) && (l.space.degree(j) & 1) ? -1 : 1;
                vec_add(rhs, l.brk(basis(j), l.brk(basis(i), basis(k))), Rat(sgn));
                vec_add(lhs, rhs, Rat(-1));
                if (!vec_is_zero(lhs))
                    rep.violations.push_back({"jacobi at (" + l.space.name(i) + "," +
                                                  l.space.name(j) + "," + l.space.name(k) + ")",
                                              vec_str(l.space, lhs)});
            }
    // derivation d[x,y] = [dx,y] + (-1)^{|x|}[x,dy]
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec lhs = spmat_apply(l.differential, l.brk(basis(i), basis(j)));
            Vec rhs = l.brk(spmat_apply(l.differential, basis(i)), basis(j));
            vec_add(rhs, l.brk(basis(i), spmat_apply(l.differential, basis(j))),
                    Rat(l.space.degree(i) & 1 ? -1 : 1));
            vec_add(lhs, rhs, Rat(-1));
            if (!vec_is_zero(lhs))
                rep.violations.push_back(
                    {"derivation at (" + l.space.name(i) + "," + l.space.name(j) + ")",
                     vec_str(l.space, lhs)});
        }
    return rep;
}

DglaCoefficients gl_dgla(const GradedSpace& v, const SpMat& partial) {
    DglaCoefficients l;
    l.space = end_space(v);
    const int d = v.dim();
    l.bracket = LinMap(tensor_space(l.space, l.space), l.space, 0);
    // E[i,j] at flat index i*d+j is the matrix e_j -> e_i
    auto endo = [&](int idx) {
        SpMat m;
        spmat_set(m, idx % d, idx / d, Rat(1));
        return m;
    };
    for (int a = 0; a < d * d; ++a)
        for (int b = 0; b < d * d; ++b) {
            SpMat comm = spmat_commutator(endo(a), l.space.degree(a), endo(b), l.space.degree(b));
            for (const auto& [k, c] : comm)
                l.bracket.add(a * d * d + b, k.second * d + k.first, c);
        }
    for (int a = 0; a < d * d; ++a) {
        SpMat dm = spmat_compose(partial, endo(a));
        spmat_add(dm, spmat_compose(endo(a), partial), Rat(l.space.degree(a) & 1 ? 1 : -1));
        for (const auto& [k, c] : dm) spmat_set(l.differential, a, k.second * d + k.first, c);
    }
    return l;
}

Vec end_coords(const GradedSpace& v, const SpMat& m) {
    Vec out;
    const int d = v.dim();
    for (const auto& [k, c] : m)
        if (!is_zero(c)) out.emplace(k.second * d + k.first, c); // E[target, source]
    return out;
}

SpMat end_matrix(const GradedSpace& v, const Vec& coords) {
    SpMat m;
    const int d = v.dim();
    for (const auto& [idx, c] : coords) spmat_set(m, idx % d, idx / d, c);
    return m;
}

Cochain action_cochain(const Ruth& r) {
    Cochain theta;
    theta.degree = 1;
    for (const auto& [w, m] : r.action) theta.set(w, end_coords(r.coeffs, m));
    return theta;
}

Cochain cochain_dgla_bracket(const LInftyAlgebra& g, const DglaCoefficients& l, const Cochain& alpha,
                             const Cochain& beta) {
    return cochain_product(l.bracket, l.space, l.space, g, alpha, beta);
}

Cochain cochain_dgla_differential(const LInftyAlgebra& g, const DglaCoefficients& l,
                                  const Cochain& alpha) {
    Cochain out;
    out.degree = alpha.degree + 1;
    auto [lo, hi] = weight_window(g, l.space, out.degree);
    if (lo > hi) return out;
    WordSpace& ws = g.words(hi);
    const bool odd_p = alpha.degree & 1;
    for (int k = lo; k <= hi; ++k)
        for (int wid : ws.ids_of_weight(k)) {
            Vec total = spmat_apply(l.differential, alpha.at(wid));
            for (const auto& [u, c] : g.coderivation(wid))
                vec_add(total, alpha.at(u), odd_p ? c : Rat(-c));
            out.set(wid, std::move(total));
        }
    return out;
}

Cochain curvature_of_degree1(const LInftyAlgebra& g, const DglaCoefficients& l,
                             const Cochain& theta) {
    if (theta.degree != 1) throw Error("curvature_of_degree1: theta must have degree 1");
    Cochain omega = cochain_dgla_differential(g, l, theta);
    Cochain sq = cochain_dgla_bracket(g, l, theta, theta);
    cochain_add(omega, sq, rat_of(1, 2));
    return omega;
}

Cochain reduced_differential(const Ruth& r, const Cochain& alpha) {
    if (!alpha.reduced()) throw Error("reduced_differential: cochain is not reduced");
    const LInftyAlgebra& g = r.g();
    Cochain rho_bar = action_cochain(r);
    LinMap ev = ev_map(r.coeffs);
    Cochain out = cochain_product(ev, end_space(r.coeffs), r.coeffs, g, rho_bar, alpha);
    out.degree = alpha.degree + 1;
    // partial o alpha - (-1)^p alpha o d_lambda
    auto [lo, hi] = weight_window(g, r.coeffs, out.degree);
    if (lo > hi) return out;
    WordSpace& ws = g.words(hi);
    const bool odd_p = alpha.degree & 1;
    for (int k = lo; k <= hi; ++k)
        for (int wid : ws.ids_of_weight(k)) {
            Vec total;
            vec_add(total, spmat_apply(r.partial, alpha.at(wid)));
            for (const auto& [u, c] : g.coderivation(wid))
                vec_add(total, alpha.at(u), odd_p ? c : Rat(-c));
            out.add(wid, total);
        }
    return out;
}

Cochain pullback_cochain(const RuthMorphism& m, const Cochain& alpha) {
    Cochain out;
    out.degree = alpha.degree;
    const LInftyAlgebra& g = m.morphism->src();
    auto [lo, hi] = weight_window(g, m.source->coeffs, alpha.degree);
    if (lo > hi) return out;
    WordSpace& ws = g.words(hi);
    for (int k = lo; k <= hi; ++k)
        for (int wid : ws.ids_of_weight(k)) {
            Vec total;
            for (const auto& [u, c] : m.morphism->apply_word(wid)) vec_add(total, alpha.at(u), c);
            out.set(wid, m.f.apply(total));
        }
    return out;
}

} // namespace lcwl

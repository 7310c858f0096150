#include "lcwl/morphism.hpp"

#include <set>

namespace lcwl {

LInftyMorphism::LInftyMorphism(const LInftyAlgebra* src, const LInftyAlgebra* tgt)
    : src_(src), tgt_(tgt) {}

void LInftyMorphism::set_component(int src_word_id, Vec value) {
    vec_prune(value);
    const int wdeg = src().words().degree(src_word_id);
    if (!value.empty() && tgt().shifted().element_degree(value) != wdeg)
        throw Error("morphism component of nonzero degree on word " +
                    src().words().label(src_word_id));
    if (value.empty())
        comp_.erase(src_word_id);
    else
        comp_[src_word_id] = std::move(value);
    full_cache_.clear();
}

Vec LInftyMorphism::component(int src_word_id) const {
    auto it = comp_.find(src_word_id);
    return it == comp_.end() ? Vec{} : it->second;
}

bool LInftyMorphism::strict() const {
    for (const auto& [w, v] : comp_)
        if (src().words().weight(w) > 1 && !vec_is_zero(v)) return false;
    return true;
}

LinMap LInftyMorphism::linear_part() const {
    LinMap f(src().shifted(), tgt().shifted(), 0);
    WordSpace& ws = src().words(1);
    for (int g = 0; g < src().shifted().dim(); ++g) {
        Vec v = component(ws.index_of({g}));
        for (const auto& [i, c] : v) f.add(g, i, c);
    }
    return f;
}

void LInftyMorphism::set_linear(const LinMap& f11) {
    WordSpace& ws = src().words(1);
    for (int g = 0; g < src().shifted().dim(); ++g) set_component(ws.index_of({g}), f11.column(g));
}

const WordCombo& LInftyMorphism::apply_word(int src_word_id) const {
    auto it = full_cache_.find(src_word_id);
    if (it != full_cache_.end()) return it->second;
    const int w = src().words().weight(src_word_id);
    WordSpace& sw = src().words(w);
    WordSpace& tw = tgt().words(w);
    WordCombo img =
        coalgebra_morphism_apply(sw, tw, [this](int u) { return component(u); }, src_word_id);
    return full_cache_.emplace(src_word_id, std::move(img)).first->second;
}

WordCombo LInftyMorphism::apply_combo(const WordCombo& combo) const {
    WordCombo out;
    for (const auto& [w, c] : combo) combo_add(out, apply_word(w), c);
    return out;
}

LInftyMorphism identity_morphism(const LInftyAlgebra& g) {
    LInftyMorphism f(&g, &g);
    f.set_linear(identity_map(g.shifted()));
    return f;
}

LInftyMorphism strict_morphism(const LInftyAlgebra& src, const LInftyAlgebra& tgt,
                               const LinMap& f11) {
    LInftyMorphism f(&src, &tgt);
    f.set_linear(f11);
    return f;
}

LInftyMorphism compose_morphisms(const LInftyMorphism& second, const LInftyMorphism& first) {
    if (&first.tgt() != &second.src()) throw Error("compose_morphisms: middle algebras differ");
    LInftyMorphism out(&first.src(), &second.tgt());
    // components of the composite vanish above depth(tgt)+1 by degree
    int max_w = second.tgt().depth() + 1;
    for (const auto& [w, v] : first.components())
        max_w = std::max(max_w, first.src().words().weight(w));
    WordSpace& ws = first.src().words(max_w);
    for (int w = 1; w <= max_w; ++w)
        for (int wid : ws.ids_of_weight(w)) {
            Vec val;
            for (const auto& [u, c] : first.apply_word(wid)) vec_add(val, second.component(u), c);
            if (!vec_is_zero(val)) out.set_component(wid, std::move(val));
        }
    return out;
}

Report check_morphism(const LInftyMorphism& f, int max_weight) {
    Report rep;
    if (max_weight < 0) max_weight = f.tgt().depth() + 2;
    WordSpace& ws = f.src().words(max_weight);
    if (f.tgt().shifted().dim() == 0 || f.src().shifted().dim() == 0) return rep;
    const int lo = f.tgt().shifted().min_degree();
    const int hi = f.tgt().shifted().max_degree();
    for (int n = 1; n <= max_weight; ++n) {
        for (int wid : ws.ids_of_weight(n)) {
            const int out_deg = ws.degree(wid) + 1;
            if (out_deg < lo || out_deg > hi) continue;
            // corestriction of F o d_src minus corestriction of d_tgt o F
            Vec diff;
            for (const auto& [u, c] : f.src().coderivation(wid)) vec_add(diff, f.component(u), c);
            vec_add(diff, f.tgt().lambda_of_combo(f.apply_word(wid)), Rat(-1));
            if (!vec_is_zero(diff))
                rep.violations.push_back({"weight=" + std::to_string(n) + " word=" + ws.label(wid),
                                          vec_str(f.tgt().shifted(), diff)});
        }
    }
    return rep;
}

ComplexCohomology complex_cohomology(const GradedSpace& v, const LinMap& d) {
    if (d.degree != 1) throw Error("complex_cohomology: differential must have degree 1");
    ComplexCohomology out;
    if (v.dim() == 0) return out;
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < v.dim(); ++i) by_degree[v.degree(i)].push_back(i);
    auto local = [&](const Vec& full, const std::vector<int>& idx) {
        Vec loc;
        for (int k = 0; k < (int)idx.size(); ++k) {
            auto it = full.find(idx[k]);
            if (it != full.end() && !is_zero(it->second)) loc.emplace(k, it->second);
        }
        return loc;
    };
    auto global = [&](const Vec& loc, const std::vector<int>& idx) {
        Vec full;
        for (const auto& [k, c] : loc) full.emplace(idx[k], c);
        return full;
    };
    for (const auto& [deg, idx] : by_degree) {
        const std::vector<int>* up = by_degree.count(deg + 1) ? &by_degree.at(deg + 1) : nullptr;
        std::vector<Vec> cols;
        for (int i : idx) cols.push_back(up ? local(d.column(i), *up) : Vec{});
        RatMatrix dmat = RatMatrix::from_columns(up ? (int)up->size() : 0, cols);
        std::vector<Vec> ker = kernel(dmat); // local coordinates of idx
        std::vector<Vec> img;
        if (by_degree.count(deg - 1))
            for (int j : by_degree.at(deg - 1)) {
                Vec c = local(d.column(j), idx);
                if (!vec_is_zero(c)) img.push_back(std::move(c));
            }
        std::vector<Vec> all = img;
        all.insert(all.end(), ker.begin(), ker.end());
        Echelon e = rref(RatMatrix::from_columns((int)idx.size(), all));
        std::vector<Vec> reps;
        for (int p : e.pivots)
            if (p >= (int)img.size()) reps.push_back(global(ker[p - img.size()], idx));
        out.dims[deg] = (int)reps.size();
        out.representatives[deg] = std::move(reps);
    }
    return out;
}

std::map<int, int> underlying_cohomology(const LInftyAlgebra& g) {
    // reported in unshifted degrees; the complex (g, [.]^1) has the same
    // matrices as (g[1], lambda_1)
    LinMap d1 = g.differential();
    LinMap d(g.space(), g.space(), 1);
    d.a = d1.a;
    d.validate();
    return complex_cohomology(g.space(), d).dims;
}

QuasiIsoResult is_quasi_iso(const LInftyMorphism& f) {
    QuasiIsoResult out;
    LinMap f11 = f.linear_part();
    auto src = complex_cohomology(f.src().shifted(), f.src().differential());
    auto tgt = complex_cohomology(f.tgt().shifted(), f.tgt().differential());
    out.is_quasi_iso = true;
    std::set<int> degrees;
    for (const auto& [d, n] : src.dims)
        if (n) degrees.insert(d);
    for (const auto& [d, n] : tgt.dims)
        if (n) degrees.insert(d);
    for (int deg : degrees) {
        const int ns = src.dims.count(deg) ? src.dims.at(deg) : 0;
        const int nt = tgt.dims.count(deg) ? tgt.dims.at(deg) : 0;
        int rank_induced = 0;
        if (ns && nt) {
            // express images of source representatives in the target basis of
            // representatives modulo exact vectors
            std::vector<Vec> cols;
            const auto& treps = tgt.representatives.at(deg);
            cols.insert(cols.end(), treps.begin(), treps.end());
            LinMap dt = f.tgt().differential();
            for (int i = 0; i < f.tgt().shifted().dim(); ++i)
                if (f.tgt().shifted().degree(i) == deg - 1) {
                    Vec c = dt.column(i);
                    if (!vec_is_zero(c)) cols.push_back(std::move(c));
                }
            RatMatrix m = RatMatrix::from_columns(f.tgt().shifted().dim(), cols);
            RatMatrix induced((int)treps.size(), ns);
            for (int j = 0; j < ns; ++j) {
                Vec img = f11.apply(src.representatives.at(deg)[j]);
                auto sol = solve(m, img);
                if (!sol.solution) throw Error("is_quasi_iso: image of a cocycle is not a cocycle");
                for (const auto& [r, c] : *sol.solution)
                    if (r < (int)treps.size()) induced.at(r, j) = c;
            }
            rank_induced = rank(induced);
        }
        out.per_degree[deg] = {ns, nt, rank_induced};
        if (ns != nt || rank_induced != ns) out.is_quasi_iso = false;
    }
    return out;
}

} // namespace lcwl

#include "lcwl/ruth.hpp"

namespace lcwl {

SpMat spmat_compose(const SpMat& outer, const SpMat& inner) {
    SpMat out;
    for (const auto& [ki, ci] : inner) {
        auto it = outer.lower_bound({ki.second, 0});
        for (; it != outer.end() && it->first.first == ki.second; ++it) {
            Rat t = ci * it->second;
            auto [pos, fresh] = out.try_emplace({ki.first, it->first.second}, t);
            if (!fresh) {
                pos->second += t;
                if (is_zero(pos->second)) out.erase(pos);
            }
        }
    }
    return out;
}

SpMat spmat_commutator(const SpMat& a, int deg_a, const SpMat& b, int deg_b) {
    SpMat out = spmat_compose(a, b);
    spmat_add(out, spmat_compose(b, a), Rat((deg_a & 1) && (deg_b & 1) ? 1 : -1));
    return out;
}

SpMat Ruth::action_of(int word_id) const {
    auto it = action.find(word_id);
    return it == action.end() ? SpMat{} : it->second;
}

Vec Ruth::apply(int word_id, const Vec& v) const {
    if (algebra && word_id == algebra->words().unit_id()) return spmat_apply(partial, v);
    auto it = action.find(word_id);
    return it == action.end() ? Vec{} : spmat_apply(it->second, v);
}

void Ruth::set_action(int word_id, SpMat m) {
    for (auto it = m.begin(); it != m.end();)
        it = is_zero(it->second) ? m.erase(it) : std::next(it);
    if (m.empty())
        action.erase(word_id);
    else
        action[word_id] = std::move(m);
}

void Ruth::validate_degrees() const {
    for (const auto& [k, c] : partial) {
        if (is_zero(c)) continue;
        if (coeffs.degree(k.second) - coeffs.degree(k.first) != 1)
            throw Error("ruth: partial is not of degree 1");
    }
    for (const auto& [w, m] : action) {
        const int want = g().words().degree(w) + 1;
        for (const auto& [k, c] : m) {
            if (is_zero(c)) continue;
            if (coeffs.degree(k.second) - coeffs.degree(k.first) != want)
                throw Error("ruth: action on " + g().words().label(w) + " is not of degree " +
                            std::to_string(want));
        }
    }
}

int Ruth::action_weight_bound() const {
    if (!algebra || algebra->shifted().dim() == 0 || coeffs.dim() == 0) return 0;
    const int max_shift_deg = algebra->shifted().max_degree(); // <= -1
    const int spread = coeffs.max_degree() - coeffs.min_degree();
    return std::max(0, (spread + 1) / -max_shift_deg);
}

Report check_ruth_direct(const Ruth& r) {
    Report rep;
    r.validate_degrees();
    // partial^2 = 0 (the unit slot of the defining identity)
    SpMat p2 = spmat_compose(r.partial, r.partial);
    if (!spmat_is_zero(p2)) rep.violations.push_back({"unit word", "partial^2 != 0"});
    if (r.coeffs.dim() == 0 || r.g().space().dim() == 0) return rep;
    const int bound = r.action_weight_bound() + 1; // composite terms reach one weight higher
    WordSpace& ws = r.g().words(bound);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) {
            for (int vb = 0; vb < r.coeffs.dim(); ++vb) {
                Vec v;
                v.emplace(vb, Rat(1));
                Vec total;
                for (const auto& [u, c] : r.g().coderivation(wid)) vec_add(total, r.apply(u, v), c);
                for (const auto& t : ws.coproduct(wid)) {
                    Vec inner = r.apply(t.right, v);
                    if (inner.empty()) continue;
                    int sgn = (ws.degree(t.left) & 1) ? -t.sign : t.sign;
                    vec_add(total, r.apply(t.left, inner), Rat(sgn));
                }
                if (!vec_is_zero(total))
                    rep.violations.push_back({"word=" + ws.label(wid) + " v=" + r.coeffs.name(vb),
                                              vec_str(r.coeffs, total)});
            }
        }
    return rep;
}

Report check_ruth_mc(const Ruth& r) {
    Report rep;
    r.validate_degrees();
    SpMat p2 = spmat_compose(r.partial, r.partial);
    if (!spmat_is_zero(p2)) rep.violations.push_back({"unit word", "partial^2 != 0"});
    if (r.coeffs.dim() == 0 || r.g().space().dim() == 0) return rep;
    const int bound = r.action_weight_bound() + 1;
    WordSpace& ws = r.g().words(bound);
    const Rat half = rat_of(1, 2);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) {
            const int wdeg = ws.degree(wid);
            // [partial, rho(w)]
            SpMat total = spmat_compose(r.partial, r.action_of(wid));
            spmat_add(total, spmat_compose(r.action_of(wid), r.partial),
                      Rat((wdeg + 1) & 1 ? 1 : -1));
            // rho(d_lambda w)
            for (const auto& [u, c] : r.g().coderivation(wid)) spmat_add(total, r.action_of(u), c);
            // 1/2 [.,.] o (rho (x) rho) o reduced coproduct
            for (const auto& t : ws.reduced_coproduct(wid)) {
                SpMat comm = spmat_commutator(r.action_of(t.left), ws.degree(t.left) + 1,
                                              r.action_of(t.right), ws.degree(t.right) + 1);
                int sgn = (ws.degree(t.left) & 1) ? -t.sign : t.sign;
                spmat_add(total, comm, half * sgn);
            }
            if (!spmat_is_zero(total))
                rep.violations.push_back({"word=" + ws.label(wid), "maurer-cartan slot nonzero"});
        }
    return rep;
}

Report check_ruth(const Ruth& r) { return check_ruth_mc(r); }

Ruth pullback_ruth(const LInftyMorphism& f, const Ruth& r) {
    if (&f.tgt() != r.algebra) throw Error("pullback_ruth: morphism target is not the ruth algebra");
    Ruth out(&f.src(), r.coeffs);
    out.partial = r.partial;
    const int bound = out.action_weight_bound();
    WordSpace& ws = f.src().words(bound);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) {
            SpMat m;
            for (const auto& [u, c] : f.apply_word(wid)) spmat_add(m, r.action_of(u), c);
            out.set_action(wid, std::move(m));
        }
    return out;
}

Ruth tensor_ruth(const Ruth& r1, const Ruth& r2) {
    if (r1.algebra != r2.algebra) throw Error("tensor_ruth: mismatched algebras");
    Ruth out(r1.algebra, tensor_space(r1.coeffs, r2.coeffs));
    const int d2 = r2.coeffs.dim();
    auto lift = [&](const SpMat& m1, const SpMat& m2, int xdeg) {
        // m1 (x) id + sign * id (x) m2 with sign (-1)^{(|x|+1)|v|}
        SpMat m;
        for (const auto& [k, c] : m1)
            for (int j = 0; j < d2; ++j) spmat_set(m, k.first * d2 + j, k.second * d2 + j, c);
        for (int i = 0; i < r1.coeffs.dim(); ++i) {
            const bool flip = ((xdeg + 1) & 1) && (r1.coeffs.degree(i) & 1);
            for (const auto& [k, c] : m2) {
                Rat cc = flip ? Rat(-c) : c;
                auto key = std::make_pair(i * d2 + k.first, i * d2 + k.second);
                auto it = m.find(key);
                if (it == m.end())
                    m.emplace(key, cc);
                else {
                    it->second += cc;
                    if (is_zero(it->second)) m.erase(it);
                }
            }
        }
        return m;
    };
    out.partial = lift(r1.partial, r2.partial, 0); // unit word: sign (-1)^{|v|}
    const int bound = std::max(r1.action_weight_bound(), r2.action_weight_bound());
    WordSpace& ws = r1.g().words(bound);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n))
            out.set_action(wid, lift(r1.action_of(wid), r2.action_of(wid), ws.degree(wid)));
    return out;
}

Ruth adjoint_ruth(const LInftyAlgebra& g) {
    Ruth out(&g, g.shifted());
    LinMap d = g.differential();
    out.partial = d.a;
    const int bound = out.action_weight_bound();
    WordSpace& ws = g.words(bound);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) {
            SpMat m;
            const auto& gens = ws.word(wid).gen;
            for (int y = 0; y < g.shifted().dim(); ++y) {
                std::vector<int> raw = gens;
                raw.push_back(y);
                Vec val = g.lambda_raw(raw);
                for (const auto& [t, c] : val) spmat_set(m, y, t, c);
            }
            out.set_action(wid, std::move(m));
        }
    return out;
}

IdealCheck is_ideal(const LInftyAlgebra& g, const Subspace& sub) {
    IdealCheck out;
    const int dim = g.shifted().dim();
    // lambda has arity at most depth+2, so one subspace slot plus words of
    // weight <= depth+1 exhaust all potentially nonzero brackets
    const int bound = g.max_arity() - 1;
    WordSpace& ws = g.words(bound);
    for (int sv = 0; sv < (int)sub.inclusion.size(); ++sv) {
        for (int n = 0; n <= bound; ++n)
            for (int wid : ws.ids_of_weight(n)) {
                Vec val;
                for (const auto& [b, c] : sub.inclusion[sv]) {
                    std::vector<int> raw = ws.word(wid).gen;
                    raw.push_back(b);
                    vec_add(val, g.lambda_raw(raw), c);
                }
                if (vec_is_zero(val)) continue;
                if (!coordinates_in_span(sub.inclusion, val, dim)) {
                    out.is_ideal = false;
                    out.witness = "lambda(" + ws.label(wid) + " ^ " + sub.basis.name(sv) +
                                  ") = " + vec_str(g.shifted(), val) + " leaves the subspace";
                    return out;
                }
            }
    }
    return out;
}

Ruth restricted_adjoint(const LInftyAlgebra& g, const Subspace& sub) {
    IdealCheck ic = is_ideal(g, sub);
    if (!ic.is_ideal) throw Error("restricted_adjoint: not an ideal: " + ic.witness);
    Ruth out(&g, sub.basis);
    const int dim = g.shifted().dim();
    auto in_sub = [&](const Vec& ambient) {
        auto c = coordinates_in_span(sub.inclusion, ambient, dim);
        if (!c) throw Error("restricted_adjoint: value left the subspace");
        return *c;
    };
    for (int sv = 0; sv < (int)sub.inclusion.size(); ++sv) {
        Vec d;
        for (const auto& [b, c] : sub.inclusion[sv]) vec_add(d, g.lambda_raw({b}), c);
        for (const auto& [t, c] : in_sub(d)) spmat_set(out.partial, sv, t, c);
    }
    const int bound = out.action_weight_bound();
    WordSpace& ws = g.words(bound);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) {
            SpMat m;
            for (int sv = 0; sv < (int)sub.inclusion.size(); ++sv) {
                Vec val;
                for (const auto& [b, c] : sub.inclusion[sv]) {
                    std::vector<int> raw = ws.word(wid).gen;
                    raw.push_back(b);
                    vec_add(val, g.lambda_raw(raw), c);
                }
                for (const auto& [t, c] : in_sub(val)) spmat_set(m, sv, t, c);
            }
            out.set_action(wid, std::move(m));
        }
    return out;
}

Ruth tensor_power_ruth(const Ruth& r, int k) {
    if (k < 1) throw Error("tensor_power_ruth: k must be >= 1");
    Ruth out = r;
    for (int i = 1; i < k; ++i) out = tensor_ruth(out, r);
    return out;
}

LinMap skew_projector(const GradedSpace& v, int k) {
    GradedSpace tensor = v;
    for (int i = 1; i < k; ++i) tensor = tensor_space(tensor, v);
    LinMap p(tensor, tensor, 0);
    const int dim = v.dim();
    const Rat norm = rat_of(1, [&] {
        long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    }());
    std::vector<int> idx(k);
    const long total = [&] {
        long t = 1;
        for (int i = 0; i < k; ++i) t *= dim;
        return t;
    }();
    auto perms = all_permutations(k);
    for (long flat = 0; flat < total; ++flat) {
        long rest = flat;
        for (int i = k - 1; i >= 0; --i) {
            idx[i] = (int)(rest % dim);
            rest /= dim;
        }
        std::vector<int> degs(k);
        for (int i = 0; i < k; ++i) degs[i] = v.degree(idx[i]);
        for (const auto& sigma : perms) {
            int chi = skew_sign(sigma, degs);
            long target = 0;
            for (int i = 0; i < k; ++i) target = target * dim + idx[sigma[i]];
            p.add((int)flat, (int)target, norm * chi);
        }
    }
    return p;
}

Report check_ruth_morphism(const RuthMorphism& m) {
    Report rep;
    if (!m.morphism || !m.source || !m.target) throw Error("ruth morphism: missing data");
    if (m.f.degree != 0) throw Error("ruth morphism: f must be degree preserving");
    const Ruth& src = *m.source;
    const Ruth& tgt = *m.target;
    // unit slot: f o partial' = partial o f
    {
        SpMat l = spmat_compose(m.f.a, tgt.partial); // f after partial'
        spmat_add(l, spmat_compose(src.partial, m.f.a), Rat(-1));
        if (!spmat_is_zero(l)) rep.violations.push_back({"unit word", "f does not chain-commute"});
    }
    const int bound = std::max(src.action_weight_bound(), tgt.action_weight_bound());
    WordSpace& ws = src.g().words(bound);
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) {
            for (int vb = 0; vb < tgt.coeffs.dim(); ++vb) {
                Vec v;
                v.emplace(vb, Rat(1));
                // f(rho'(F(w) (x) v))
                Vec lhs;
                for (const auto& [u, c] : m.morphism->apply_word(wid))
                    vec_add(lhs, tgt.apply(u, v), c);
                lhs = m.f.apply(lhs);
                // rho(w (x) f(v))
                Vec rhs = src.apply(wid, m.f.apply(v));
                vec_add(lhs, rhs, Rat(-1));
                if (!vec_is_zero(lhs))
                    rep.violations.push_back({"word=" + ws.label(wid) + " v=" + tgt.coeffs.name(vb),
                                              vec_str(src.coeffs, lhs)});
            }
        }
    return rep;
}

std::vector<LinMap> ruth_map_space(const Ruth& a, const Ruth& b, int degree) {
    if (a.algebra != b.algebra) throw Error("ruth_map_space: mismatched algebras");
    // unknowns: degree-compatible entries of f
    std::vector<std::pair<int, int>> unknowns;
    for (int i = 0; i < a.coeffs.dim(); ++i)
        for (int j = 0; j < b.coeffs.dim(); ++j)
            if (b.coeffs.degree(j) - a.coeffs.degree(i) == degree) unknowns.push_back({i, j});
    std::map<std::pair<int, int>, int> col;
    for (int c = 0; c < (int)unknowns.size(); ++c) col[unknowns[c]] = c;

    const int bound = std::max(a.action_weight_bound(), b.action_weight_bound());
    WordSpace& ws = a.g().words(bound);
    std::vector<int> word_ids{ws.unit_id()};
    for (int n = 1; n <= bound; ++n)
        for (int wid : ws.ids_of_weight(n)) word_ids.push_back(wid);

    std::vector<Vec> rows; // one row per (word, src basis, tgt basis) constraint
    for (int wid : word_ids) {
        const int wdeg = wid == ws.unit_id() ? 0 : ws.degree(wid);
        const bool flip = (degree & 1) && ((wdeg + 1) & 1);
        SpMat rho_a = wid == ws.unit_id() ? a.partial : a.action_of(wid);
        SpMat rho_b = wid == ws.unit_id() ? b.partial : b.action_of(wid);
        // f(rho_a(w (x) e_i)) - (-1)^{d(|w|+1)} rho_b(w (x) f(e_i)) = 0
        std::map<std::pair<int, int>, Vec> constraint; // (i, target j) -> row
        for (const auto& [k, c] : rho_a) {
            // contributes c * f[k.second -> j] at row (k.first, j)
            for (int j = 0; j < b.coeffs.dim(); ++j) {
                auto u = col.find({k.second, j});
                if (u != col.end()) {
                    Vec& row = constraint[{k.first, j}];
                    vec_add(row, Vec{{u->second, c}});
                }
            }
        }
        for (const auto& [k, c] : rho_b) {
            // contributes -sign * c * f[i -> k.first] at row (i, k.second)
            for (int i = 0; i < a.coeffs.dim(); ++i) {
                auto u = col.find({i, k.first});
                if (u != col.end()) {
                    Vec& row = constraint[{i, k.second}];
                    vec_add(row, Vec{{u->second, flip ? c : Rat(-c)}});
                }
            }
        }
        for (auto& [key, row] : constraint) {
            vec_prune(row);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    // kernel of the constraint matrix
    RatMatrix m((int)rows.size(), (int)unknowns.size());
    for (int r = 0; r < (int)rows.size(); ++r)
        for (const auto& [c, x] : rows[r]) m.at(r, c) = x;
    std::vector<LinMap> basis;
    for (const Vec& k : kernel(m)) {
        LinMap f(a.coeffs, b.coeffs, degree);
        for (const auto& [c, x] : k) f.set(unknowns[c].first, unknowns[c].second, x);
        f.validate();
        basis.push_back(std::move(f));
    }
    return basis;
}

} // namespace lcwl

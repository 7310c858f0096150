#include "lcwl/minimal_model.hpp"

namespace lcwl {

namespace {

Vec local_vec(const Vec& full, const std::vector<int>& idx) {
    std::map<int, int> pos;
    for (int k = 0; k < (int)idx.size(); ++k) pos[idx[k]] = k;
    Vec out;
    for (const auto& [i, c] : full) {
        auto it = pos.find(i);
        if (it == pos.end()) {
            if (!is_zero(c)) throw Error("vector has support outside the expected degree");
        } else {
            out.emplace(it->second, c);
        }
    }
    return out;
}

Vec global_vec(const Vec& loc, const std::vector<int>& idx) {
    Vec out;
    for (const auto& [k, c] : loc) out.emplace(idx.at(k), c);
    return out;
}

} // namespace

TwoTermDecomposition decompose_2term(const LInftyAlgebra& g) {
    if (g.depth() > 1) throw Error("decompose_2term: algebra is not 2-term");
    TwoTermDecomposition dec;
    for (int i = 0; i < g.shifted().dim(); ++i) {
        if (g.shifted().degree(i) == -2) dec.lower.push_back(i);
        if (g.shifted().degree(i) == -1) dec.upper.push_back(i);
    }
    LinMap d = g.differential();
    RatMatrix p((int)dec.upper.size(), (int)dec.lower.size());
    for (int c = 0; c < (int)dec.lower.size(); ++c)
        p.set_col(c, local_vec(d.column(dec.lower[c]), dec.upper));
    for (const Vec& k : kernel(p)) dec.ker_basis.push_back(global_vec(k, dec.lower));
    Echelon e = rref(p);
    for (int piv : e.pivots) dec.im_basis.push_back(global_vec(p.col(piv), dec.upper));
    // echelon complement: upper indices whose standard vectors are not pivots
    // of [im | I]
    {
        std::vector<Vec> cols;
        for (const Vec& v : dec.im_basis) cols.push_back(local_vec(v, dec.upper));
        const int nim = (int)cols.size();
        for (int j = 0; j < (int)dec.upper.size(); ++j) cols.push_back(Vec{{j, Rat(1)}});
        Echelon e2 = rref(RatMatrix::from_columns((int)dec.upper.size(), cols));
        for (int piv : e2.pivots)
            if (piv >= nim) dec.coker_indices.push_back(dec.upper[piv - nim]);
    }
    return dec;
}

TwoTermSplittings default_splittings(const LInftyAlgebra& g, const TwoTermDecomposition& dec) {
    TwoTermSplittings s;
    for (int idx : dec.coker_indices) s.h_lift.push_back(Vec{{idx, Rat(1)}});
    LinMap d = g.differential();
    RatMatrix p((int)dec.upper.size(), (int)dec.lower.size());
    for (int c = 0; c < (int)dec.lower.size(); ++c)
        p.set_col(c, local_vec(d.column(dec.lower[c]), dec.upper));
    for (const Vec& im : dec.im_basis) {
        auto sol = solve(p, local_vec(im, dec.upper));
        if (!sol.solution) throw Error("default_splittings: image vector without preimage");
        s.sigma_lift.push_back(global_vec(*sol.solution, dec.lower));
    }
    return s;
}

MinimalModelResult minimal_model_2term(const LInftyAlgebra& g,
                                       const std::optional<TwoTermSplittings>& split) {
    if (g.depth() > 1) throw Error("minimal_model_2term: algebra is not 2-term");
    for (const auto& [w, v] : g.lambda_table())
        if (g.words().weight(w) > 2 && !vec_is_zero(v))
            throw Error("minimal_model_2term: algebra is not strict");
    Report jac = check_jacobi(g);
    if (!jac.ok()) throw Error(jac.summary("minimal_model_2term: input"));

    MinimalModelResult out;
    out.dec = decompose_2term(g);
    const TwoTermDecomposition& dec = out.dec;
    TwoTermSplittings sp = split ? *split : default_splittings(g, dec);

    // validate the splittings
    if ((int)sp.h_lift.size() != (int)dec.coker_indices.size() ||
        (int)sp.sigma_lift.size() != (int)dec.im_basis.size())
        throw Error("minimal_model_2term: splitting size mismatch");
    {
        // h must lift the cokernel generators: h_j - e_{C_j} in the image span
        std::vector<Vec> imloc;
        for (const Vec& v : dec.im_basis) imloc.push_back(local_vec(v, dec.upper));
        for (size_t j = 0; j < sp.h_lift.size(); ++j) {
            Vec diff = local_vec(sp.h_lift[j], dec.upper);
            vec_add(diff, Vec{{(int)std::distance(dec.upper.begin(),
                                                  std::find(dec.upper.begin(), dec.upper.end(),
                                                            dec.coker_indices[j])),
                               Rat(1)}},
                    Rat(-1));
            if (!vec_is_zero(diff) &&
                !coordinates_in_span(imloc, diff, (int)dec.upper.size()))
                throw Error("minimal_model_2term: h is not a right inverse of the projection");
        }
        LinMap d = g.differential();
        for (size_t k = 0; k < sp.sigma_lift.size(); ++k) {
            Vec chk = d.apply(sp.sigma_lift[k]);
            vec_add(chk, dec.im_basis[k], Rat(-1));
            if (!vec_is_zero(chk))
                throw Error("minimal_model_2term: sigma is not a right inverse on the image");
        }
    }

    // the minimal space: ker generators in degree -1, coker generators in 0
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (size_t i = 0; i < dec.ker_basis.size(); ++i) {
        names.push_back("k" + std::to_string(i));
        degrees.push_back(-1);
    }
    for (size_t j = 0; j < dec.coker_indices.size(); ++j) {
        names.push_back("q" + std::to_string(j));
        degrees.push_back(0);
    }
    out.minimal = std::make_shared<LInftyAlgebra>(GradedSpace(names, degrees));
    LInftyAlgebra& m = *out.minimal;
    const int nk = (int)dec.ker_basis.size();
    const int nq = (int)dec.coker_indices.size();

    // linear part of the embedding
    LinMap f11(m.shifted(), g.shifted(), 0);
    for (int i = 0; i < nk; ++i)
        for (const auto& [t, c] : dec.ker_basis[i]) f11.add(i, t, c);
    for (int j = 0; j < nq; ++j)
        for (const auto& [t, c] : sp.h_lift[j]) f11.add(nk + j, t, c);
    out.embed = LInftyMorphism(out.minimal.get(), &g);
    out.embed.set_linear(f11);

    // weight-2 correction on coker ^ coker words:
    //   F^1_2 = -sigma(image part of lambda_2(h x v h y))
    // fixed by the weight-2 morphism identity.
    auto im_part_coords = [&](const Vec& v_upper_global) {
        // decompose v = sum a_k im_k + sum b_j e_{C_j}; returns (a, b)
        std::vector<Vec> cols;
        for (const Vec& w : dec.im_basis) cols.push_back(local_vec(w, dec.upper));
        const int nim = (int)cols.size();
        for (int idx : dec.coker_indices)
            cols.push_back(local_vec(Vec{{idx, Rat(1)}}, dec.upper));
        auto sol = solve(RatMatrix::from_columns((int)dec.upper.size(), cols),
                         local_vec(v_upper_global, dec.upper));
        if (!sol.solution) throw Error("minimal_model_2term: decomposition failed");
        Vec a, b;
        for (const auto& [i, c] : *sol.solution)
            (i < nim ? a : b).emplace(i < nim ? i : i - nim, c);
        return std::make_pair(a, b);
    };

    WordSpace& mw = m.words(3);
    WordSpace& gw = g.words(3);
    (void)gw;
    for (int j1 = 0; j1 < nq; ++j1)
        for (int j2 = j1; j2 < nq; ++j2) {
            Canonical cw = mw.canonicalize({nk + j1, nk + j2});
            if (!cw) continue; // repeated odd generator
            // lambda_2^g(h x v h y)
            Vec q;
            for (const auto& [b1, c1] : sp.h_lift[j1])
                for (const auto& [b2, c2] : sp.h_lift[j2])
                    vec_add(q, g.lambda_raw({b1, b2}), c1 * c2);
            if (cw.sign != 1) throw Error("minimal_model_2term: unexpected canonical sign");
            auto [a, b] = im_part_coords(q);
            // induced coker bracket: lambda_2^m picks the complement part
            Vec bracket;
            for (const auto& [j, c] : b) bracket.emplace(nk + (int)j, c);
            m.add_lambda(cw.id, bracket);
            // F^1_2 = -sigma(image part)
            Vec f2;
            for (const auto& [k, c] : a) vec_add(f2, sp.sigma_lift[k], -c);
            if (!vec_is_zero(f2)) out.embed.set_component(cw.id, f2);
        }

    // remaining lambda_2^m slots (ker x coker) and lambda_3^m on coker^3: solve
    //   F^1_1(lambda^m_n(w)) = corestr(d_g o F)(w) - lower-weight F o d_m terms
    RatMatrix f11mat(g.shifted().dim(), m.shifted().dim());
    for (int c = 0; c < m.shifted().dim(); ++c) f11mat.set_col(c, f11.column(c));
    for (int n = 2; n <= 3; ++n) {
        for (int wid : mw.ids_of_weight(n)) {
            const int out_deg = mw.degree(wid) + 1;
            if (out_deg < m.shifted().min_degree() || out_deg > m.shifted().max_degree()) continue;
            if (n == 2 && !m.lambda(wid).empty()) continue; // coker^2 already set
            if (n == 2) {
                bool qq = true;
                for (int gen : mw.word(wid).gen) qq = qq && gen >= nk;
                if (qq) continue; // zero bracket was the solved value
            }
            Vec rhs = g.lambda_of_combo(out.embed.apply_word(wid));
            // subtract the lower-arity contributions of F o d_m
            for (const auto& t : mw.coproduct(wid)) {
                if (t.left == mw.unit_id() || mw.weight(t.left) >= n) continue;
                Vec head = m.lambda(t.left);
                for (const auto& [hgen, hc] : head) {
                    std::vector<int> raw;
                    raw.push_back(hgen);
                    const auto& rest = mw.word(t.right).gen;
                    raw.insert(raw.end(), rest.begin(), rest.end());
                    Canonical cc = mw.canonicalize(std::move(raw));
                    if (!cc) continue;
                    vec_add(rhs, out.embed.component(cc.id), Rat(-t.sign * cc.sign) * hc);
                }
            }
            if (vec_is_zero(rhs)) continue;
            auto sol = solve(f11mat, rhs);
            if (!sol.solution)
                throw Error("minimal_model_2term: structure value escapes the embedding");
            m.add_lambda(wid, *sol.solution);
        }
    }

    // report the 3-bracket in the skew convention
    for (const auto& br : brackets_from_lambda(m))
        if (br.args.size() == 3) out.theta.push_back(br);

    Report morph = check_morphism(out.embed);
    if (!morph.ok()) throw Error(morph.summary("minimal_model_2term: embedding"));
    return out;
}

} // namespace lcwl

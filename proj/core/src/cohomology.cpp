#include "lcwl/cohomology.hpp"

namespace lcwl {

RatMatrix ce_matrix(const Ruth& r, int p) {
    CochainBasis bp = cochain_basis(r.g(), r.coeffs, p);
    CochainBasis bq = cochain_basis(r.g(), r.coeffs, p + 1);
    RatMatrix m(bq.dim(), bp.dim());
    for (int i = 0; i < bp.dim(); ++i)
        m.set_col(i, bq.coordinates(ce_differential(r, bp.element(i))));
    return m;
}

CohomologyResult cohomology(const Ruth& r, int p) {
    CohomologyResult out;
    out.degree = p;
    out.basis = cochain_basis(r.g(), r.coeffs, p);
    if (out.basis.dim() == 0) return out;
    RatMatrix d = ce_matrix(r, p);
    std::vector<Vec> ker = kernel(d);
    std::vector<Vec> img;
    CochainBasis prev = cochain_basis(r.g(), r.coeffs, p - 1);
    if (prev.dim() > 0)
        for (const Vec& v : image(ce_matrix(r, p - 1))) img.push_back(v);
    std::vector<Vec> all = img;
    all.insert(all.end(), ker.begin(), ker.end());
    Echelon e = rref(RatMatrix::from_columns(out.basis.dim(), all));
    for (int piv : e.pivots)
        if (piv >= (int)img.size())
            out.representatives.push_back(out.basis.from_coordinates(ker[piv - img.size()]));
    out.dim = (int)out.representatives.size();
    return out;
}

ClassDecision same_class(const Ruth& r, const Cochain& z1, const Cochain& z2) {
    if (z1.degree != z2.degree && !z1.is_zero() && !z2.is_zero())
        throw Error("same_class: degree mismatch");
    const int p = z1.is_zero() ? z2.degree : z1.degree;
    if (!ce_differential(r, z1).is_zero() || !ce_differential(r, z2).is_zero())
        throw Error("same_class: inputs are not cocycles");
    Cochain diff = z1;
    diff.degree = p;
    cochain_add(diff, z2, Rat(-1));
    CochainBasis bp = cochain_basis(r.g(), r.coeffs, p);
    CochainBasis bm = cochain_basis(r.g(), r.coeffs, p - 1);
    RatMatrix d = ce_matrix(r, p - 1);
    auto sol = solve(d, bp.coordinates(diff));
    ClassDecision out;
    if (!sol.solution) return out;
    out.same = true;
    Cochain beta = bm.from_coordinates(*sol.solution);
    // recheck the certificate
    Cochain check = ce_differential(r, beta);
    cochain_add(check, diff, Rat(-1));
    if (!check.is_zero()) throw Error("same_class: certificate recheck failed");
    out.certificate = std::move(beta);
    return out;
}

Vec class_coordinates(const Ruth& r, const CohomologyResult& h, const Cochain& z) {
    if (!ce_differential(r, z).is_zero()) throw Error("class_coordinates: not a cocycle");
    std::vector<Vec> cols;
    for (const Cochain& rep : h.representatives) cols.push_back(h.basis.coordinates(rep));
    const int nreps = (int)cols.size();
    RatMatrix dprev = ce_matrix(r, h.degree - 1);
    for (int c = 0; c < dprev.cols(); ++c) {
        Vec col = dprev.col(c);
        if (!vec_is_zero(col)) cols.push_back(std::move(col));
    }
    auto sol = solve(RatMatrix::from_columns(h.basis.dim(), cols), h.basis.coordinates(z));
    if (!sol.solution) throw Error("class_coordinates: cocycle outside the computed cohomology");
    Vec out;
    for (const auto& [i, c] : *sol.solution)
        if (i < nreps) out.emplace(i, c);
    return out;
}

RatMatrix induced_map_on_cohomology(const RuthMorphism& m, int p, const CohomologyResult& src_h,
                                    const CohomologyResult& tgt_h) {
    const Ruth& src = *m.source;
    const Ruth& tgt = *m.target;
    // coboundaries of the target pull back to coboundaries of the source
    CochainBasis tprev = cochain_basis(tgt.g(), tgt.coeffs, p - 1);
    for (int i = 0; i < tprev.dim(); ++i) {
        Cochain pulled = pullback_cochain(m, ce_differential(tgt, tprev.element(i)));
        Cochain direct = ce_differential(src, pullback_cochain(m, tprev.element(i)));
        cochain_add(pulled, direct, Rat(-1));
        if (!pulled.is_zero())
            throw Error("induced_map_on_cohomology: pullback is not a chain map");
    }
    RatMatrix out((int)src_h.representatives.size(), (int)tgt_h.representatives.size());
    for (int j = 0; j < (int)tgt_h.representatives.size(); ++j) {
        Cochain img = pullback_cochain(m, tgt_h.representatives[j]);
        out.set_col(j, class_coordinates(src, src_h, img));
    }
    return out;
}

RatMatrix induced_map_on_cohomology(const RuthMorphism& m, int p) {
    CohomologyResult src_h = cohomology(*m.source, p);
    CohomologyResult tgt_h = cohomology(*m.target, p);
    return induced_map_on_cohomology(m, p, src_h, tgt_h);
}

} // namespace lcwl

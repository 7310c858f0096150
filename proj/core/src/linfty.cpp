#include "lcwl/linfty.hpp"

#include <algorithm>
#include <sstream>

namespace lcwl {

std::string Report::summary(const std::string& what) const {
    std::ostringstream os;
    if (ok()) {
        os << what << ": ok";
    } else {
        os << what << ": " << violations.size() << " violation(s)";
        for (const auto& v : violations) os << "\n  [" << v.where << "] " << v.detail;
    }
    return os.str();
}

std::string vec_str(const GradedSpace& space, const Vec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        os << rat_str(c) << "*" << space.name(i);
        first = false;
    }
    return os.str();
}

LInftyAlgebra::LInftyAlgebra(GradedSpace space)
    : space_(std::move(space)), shifted_(shift(space_, 1)) {
    if (space_.dim() > 0 && space_.max_degree() > 0)
        throw Error("LInftyAlgebra: space must be concentrated in degrees [-d, 0]");
    depth_ = space_.dim() > 0 ? -space_.min_degree() : 0;
}

LInftyAlgebra::LInftyAlgebra(const LInftyAlgebra& o)
    : space_(o.space_), shifted_(o.shifted_), depth_(o.depth_), lambda_(o.lambda_) {
    if (o.words_) words_ = std::make_unique<WordSpace>(*o.words_);
    coder_cache_ = o.coder_cache_;
}

LInftyAlgebra& LInftyAlgebra::operator=(const LInftyAlgebra& o) {
    if (this == &o) return *this;
    space_ = o.space_;
    shifted_ = o.shifted_;
    depth_ = o.depth_;
    lambda_ = o.lambda_;
    words_ = o.words_ ? std::make_unique<WordSpace>(*o.words_) : nullptr;
    coder_cache_ = o.coder_cache_;
    return *this;
}

WordSpace& LInftyAlgebra::words() const {
    if (!words_) words_ = std::make_unique<WordSpace>(shifted_, 1);
    return *words_;
}

WordSpace& LInftyAlgebra::words(int min_weight) const {
    WordSpace& w = words();
    w.ensure_weight(min_weight);
    return w;
}

void LInftyAlgebra::set_lambda(int word_id, Vec value) {
    vec_prune(value);
    const int wdeg = words().degree(word_id);
    if (!value.empty() && shifted_.element_degree(value) != wdeg + 1)
        throw Error("set_lambda: value of wrong degree on word " + words().label(word_id));
    if (value.empty())
        lambda_.erase(word_id);
    else
        lambda_[word_id] = std::move(value);
    coder_cache_.clear();
}

void LInftyAlgebra::add_lambda(int word_id, const Vec& value, const Rat& scale) {
    Vec cur = lambda(word_id);
    vec_add(cur, value, scale);
    set_lambda(word_id, std::move(cur));
}

Vec LInftyAlgebra::lambda(int word_id) const {
    auto it = lambda_.find(word_id);
    return it == lambda_.end() ? Vec{} : it->second;
}

Vec LInftyAlgebra::lambda_raw(const std::vector<int>& raw) const {
    Canonical c = words().canonicalize(raw);
    if (!c) return {};
    return vec_scaled(lambda(c.id), Rat(c.sign));
}

Vec LInftyAlgebra::lambda_of_combo(const WordCombo& combo) const {
    Vec out;
    for (const auto& [w, c] : combo) vec_add(out, lambda(w), c);
    return out;
}

LinMap LInftyAlgebra::differential() const {
    LinMap d(shifted_, shifted_, 1);
    WordSpace& ws = words(1);
    for (int g = 0; g < shifted_.dim(); ++g) {
        Vec v = lambda(ws.index_of({g}));
        for (const auto& [i, c] : v) d.add(g, i, c);
    }
    return d;
}

const WordCombo& LInftyAlgebra::coderivation(int word_id) const {
    auto it = coder_cache_.find(word_id);
    if (it != coder_cache_.end()) return it->second;
    WordCombo d = coderivation_apply(words(), [this](int w) { return lambda(w); }, word_id);
    return coder_cache_.emplace(word_id, std::move(d)).first->second;
}

// ---------------------------------------------------------------------------

Report check_jacobi(const LInftyAlgebra& g, int max_n) {
    Report report;
    if (max_n < 0) max_n = 2 * g.depth() + 3;
    if (g.space().dim() == 0) return report;
    WordSpace& ws = g.words(max_n);
    const int lo = g.shifted().min_degree(), hi = g.shifted().max_degree();
    for (int n = 1; n <= max_n; ++n) {
        for (int wid : ws.ids_of_weight(n)) {
            const int out_deg = ws.degree(wid) + 2;
            if (out_deg < lo || out_deg > hi) continue; // vanishes by degree
            const auto& gens = ws.word(wid).gen;
            Vec jac;
            std::vector<int> pos, rest;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                pos.clear();
                rest.clear();
                std::vector<int> sub;
                for (int i = 0; i < n; ++i) {
                    if (mask & (1u << i)) {
                        pos.push_back(i);
                        sub.push_back(gens[i]);
                    } else {
                        rest.push_back(gens[i]);
                    }
                }
                const int esign = ws.split_sign(wid, pos);
                Vec head = g.lambda(ws.index_of(sub));
                for (const auto& [b, c] : head) {
                    std::vector<int> raw;
                    raw.reserve(rest.size() + 1);
                    raw.push_back(b);
                    raw.insert(raw.end(), rest.begin(), rest.end());
                    Canonical cc = ws.canonicalize(std::move(raw));
                    if (!cc) continue;
                    vec_add(jac, g.lambda(cc.id), Rat(esign * cc.sign) * c);
                }
            }
            if (!vec_is_zero(jac))
                report.violations.push_back(
                    {"n=" + std::to_string(n) + " word=" + ws.label(wid), vec_str(g.shifted(), jac)});
        }
    }
    return report;
}

Report check_jacobi_coderivation(const LInftyAlgebra& g, int max_n) {
    Report report;
    if (max_n < 0) max_n = 2 * g.depth() + 3;
    if (g.space().dim() == 0) return report;
    WordSpace& ws = g.words(max_n);
    for (int n = 1; n <= max_n; ++n) {
        for (int wid : ws.ids_of_weight(n)) {
            WordCombo dd;
            for (const auto& [u, c] : g.coderivation(wid)) combo_add(dd, g.coderivation(u), c);
            if (!combo_is_zero(dd)) {
                std::ostringstream os;
                for (const auto& [u, c] : dd) os << rat_str(c) << "*(" << ws.label(u) << ") ";
                report.violations.push_back({"n=" + std::to_string(n) + " word=" + ws.label(wid), os.str()});
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

int decalage_sign(const GradedSpace& unshifted, const std::vector<int>& canonical_gens) {
    const int k = (int)canonical_gens.size();
    long e = 0;
    for (int i = 0; i < k; ++i) e += (long)(k - 1 - i) * unshifted.degree(canonical_gens[i]);
    return (e & 1) ? -1 : 1;
}

namespace {

// chi-canonicalize a tuple for the skew convention: sort by (degree, index)
// against unshifted degrees, each swap contributing -(-1)^{ab}. Returns sign 0
// for tuples that vanish in the exterior algebra.
int chi_sort(const GradedSpace& space, std::vector<int>& args) {
    int sign = 1;
    for (size_t i = 1; i < args.size(); ++i) {
        for (size_t j = i; j > 0; --j) {
            auto key = [&](int g) { return std::make_pair(space.degree(g), g); };
            if (key(args[j]) >= key(args[j - 1])) break;
            int flips = 1 + (space.degree(args[j]) & 1) * (space.degree(args[j - 1]) & 1);
            if (flips & 1) sign = -sign;
            std::swap(args[j], args[j - 1]);
        }
    }
    for (size_t i = 1; i < args.size(); ++i)
        if (args[i] == args[i - 1] && !(space.degree(args[i]) & 1)) return 0;
    return sign;
}

} // namespace

LInftyAlgebra make_linfty(GradedSpace space, const std::vector<SkewBracket>& brackets) {
    LInftyAlgebra g(std::move(space));
    const GradedSpace& sp = g.space();
    for (const auto& br : brackets) {
        if (br.args.empty()) throw Error("make_linfty: empty bracket");
        for (int a : br.args)
            if (a < 0 || a >= sp.dim()) throw Error("make_linfty: bracket argument out of range");
        Vec value = br.value;
        vec_prune(value);
        if (value.empty()) continue;
        const int k = (int)br.args.size();
        int argdeg = 0;
        for (int a : br.args) argdeg += sp.degree(a);
        if (sp.element_degree(value) != argdeg + 2 - k)
            throw Error("make_linfty: bracket value of wrong degree");
        std::vector<int> sorted = br.args;
        int chi = chi_sort(sp, sorted);
        if (chi == 0) throw Error("make_linfty: non-skew input (value on a vanishing wedge slot)");
        const int dec = decalage_sign(sp, sorted);
        const int wid = g.words((int)sorted.size()).index_of(sorted);
        g.add_lambda(wid, value, Rat(chi * dec));
    }
    return g;
}

std::vector<SkewBracket> brackets_from_lambda(const LInftyAlgebra& g) {
    std::vector<SkewBracket> out;
    for (const auto& [wid, value] : g.lambda_table()) {
        const auto& gens = g.words().word(wid).gen;
        SkewBracket br;
        br.args = gens;
        br.value = vec_scaled(value, Rat(decalage_sign(g.space(), gens)));
        out.push_back(std::move(br));
    }
    return out;
}

// ---------------------------------------------------------------------------

Vec CrossedModule::bkt1(int i, int j) const {
    if (i == j) return {};
    auto it = bracket1.find({std::min(i, j), std::max(i, j)});
    if (it == bracket1.end()) return {};
    return i < j ? it->second : vec_scaled(it->second, Rat(-1));
}

Vec CrossedModule::bkt0(int i, int j) const {
    if (i == j) return {};
    auto it = bracket0.find({std::min(i, j), std::max(i, j)});
    if (it == bracket0.end()) return {};
    return i < j ? it->second : vec_scaled(it->second, Rat(-1));
}

Vec CrossedModule::act(int x, const Vec& u) const {
    return spmat_apply(action.at(x), u);
}

namespace {

Vec lie_bracket(const std::map<std::pair<int, int>, Vec>& table, const Vec& a, const Vec& b) {
    Vec out;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            if (i == j) continue;
            auto it = table.find({std::min(i, j), std::max(i, j)});
            if (it == table.end()) continue;
            vec_add(out, it->second, i < j ? Rat(ca * cb) : Rat(-(ca * cb)));
        }
    return out;
}

} // namespace

Report check_crossed_module(const CrossedModule& cm) {
    Report rep;
    const int n1 = cm.m1.dim(), n0 = cm.m0.dim();
    if ((int)cm.action.size() != n0)
        throw Error("crossed module: need one action matrix per degree-0 generator");
    auto basis = [](int i) {
        Vec v;
        v.emplace(i, Rat(1));
        return v;
    };
    // Jacobi for both brackets
    auto jac = [&](const std::map<std::pair<int, int>, Vec>& t, int dim, const GradedSpace& sp,
                   const std::string& tag) {
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    Vec s = lie_bracket(t, lie_bracket(t, basis(i), basis(j)), basis(k));
                    vec_add(s, lie_bracket(t, lie_bracket(t, basis(j), basis(k)), basis(i)));
                    vec_add(s, lie_bracket(t, lie_bracket(t, basis(k), basis(i)), basis(j)));
                    if (!vec_is_zero(s))
                        rep.violations.push_back({tag + " jacobi(" + sp.name(i) + "," + sp.name(j) +
                                                      "," + sp.name(k) + ")",
                                                  vec_str(sp, s)});
                }
    };
    jac(cm.bracket0, n0, cm.m0, "m0");
    jac(cm.bracket1, n1, cm.m1, "m1");
    // action is a Lie homomorphism into derivations of m1
    for (int x = 0; x < n0; ++x)
        for (int y = x + 1; y < n0; ++y) {
            for (int u = 0; u < n1; ++u) {
                Vec lhs = cm.act(x, cm.act(y, basis(u)));
                vec_add(lhs, cm.act(y, cm.act(x, basis(u))), Rat(-1));
                Vec rhs;
                for (const auto& [z, c] : cm.bkt0(x, y)) vec_add(rhs, cm.act(z, basis(u)), c);
                vec_add(lhs, rhs, Rat(-1));
                if (!vec_is_zero(lhs))
                    rep.violations.push_back({"action hom at ([" + cm.m0.name(x) + "," + cm.m0.name(y) +
                                                  "], " + cm.m1.name(u) + ")",
                                              vec_str(cm.m1, lhs)});
            }
        }
    for (int x = 0; x < n0; ++x)
        for (int u = 0; u < n1; ++u)
            for (int v = u + 1; v < n1; ++v) {
                Vec lhs = cm.act(x, cm.bkt1(u, v));
                Vec rhs = lie_bracket(cm.bracket1, cm.act(x, basis(u)), basis(v));
                vec_add(rhs, lie_bracket(cm.bracket1, basis(u), cm.act(x, basis(v))));
                vec_add(lhs, rhs, Rat(-1));
                if (!vec_is_zero(lhs))
                    rep.violations.push_back({"action derivation at (" + cm.m0.name(x) + ",[" +
                                                  cm.m1.name(u) + "," + cm.m1.name(v) + "])",
                                              vec_str(cm.m1, lhs)});
            }
    // partial equivariant: partial(D_x u) = [x, partial u]
    for (int x = 0; x < n0; ++x)
        for (int u = 0; u < n1; ++u) {
            Vec lhs = spmat_apply(cm.partial, cm.act(x, basis(u)));
            Vec rhs = lie_bracket(cm.bracket0, basis(x), spmat_apply(cm.partial, basis(u)));
            vec_add(lhs, rhs, Rat(-1));
            if (!vec_is_zero(lhs))
                rep.violations.push_back(
                    {"equivariance at (" + cm.m0.name(x) + "," + cm.m1.name(u) + ")",
                     vec_str(cm.m0, lhs)});
        }
    // Peiffer: D_{partial u} v = [u, v]
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n1; ++v) {
            Vec lhs;
            for (const auto& [x, c] : spmat_apply(cm.partial, basis(u)))
                vec_add(lhs, cm.act(x, basis(v)), c);
            vec_add(lhs, cm.bkt1(u, v), Rat(-1));
            if (!vec_is_zero(lhs))
                rep.violations.push_back(
                    {"peiffer at (" + cm.m1.name(u) + "," + cm.m1.name(v) + ")", vec_str(cm.m1, lhs)});
        }
    return rep;
}

LInftyAlgebra from_crossed_module(const CrossedModule& cm) {
    Report rep = check_crossed_module(cm);
    if (!rep.ok()) throw Error(rep.summary("crossed module"));
    const int n1 = cm.m1.dim(), n0 = cm.m0.dim();
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 0; i < n1; ++i) {
        names.push_back(cm.m1.name(i));
        degrees.push_back(-1);
    }
    for (int i = 0; i < n0; ++i) {
        names.push_back(cm.m0.name(i));
        degrees.push_back(0);
    }
    GradedSpace sp(names, degrees);
    auto up = [&](const Vec& v, int offset) {
        Vec out;
        for (const auto& [i, c] : v) out.emplace(i + offset, c);
        return out;
    };
    std::vector<SkewBracket> brackets;
    // lambda_1 from partial
    for (int u = 0; u < n1; ++u) {
        Vec v;
        for (const auto& [k, c] : cm.partial)
            if (k.first == u) v.emplace(k.second + n1, c);
        if (!v.empty()) brackets.push_back({{u}, v});
    }
    // degree-0 brackets and the mixed action brackets
    for (const auto& [k, v] : cm.bracket0)
        brackets.push_back({{k.first + n1, k.second + n1}, up(v, n1)});
    for (int x = 0; x < n0; ++x)
        for (int u = 0; u < n1; ++u) {
            Vec v;
            for (const auto& [k, c] : cm.action[x])
                if (k.first == u) v.emplace(k.second, c);
            if (!v.empty()) brackets.push_back({{x + n1, u}, v});
        }
    return make_linfty(std::move(sp), brackets);
}

} // namespace lcwl

#include "lcwl/linalg.hpp"

namespace lcwl {

void RatMatrix::set_col(int c, const Vec& v) {
    for (const auto& [r, x] : v) at(r, c) = x;
}

Vec RatMatrix::col(int c) const {
    Vec out;
    for (int r = 0; r < rows_; ++r)
        if (!is_zero(at(r, c))) out.emplace(r, at(r, c));
    return out;
}

Vec RatMatrix::apply(const Vec& x) const {
    Vec out;
    for (const auto& [c, v] : x) {
        if (c < 0 || c >= cols_) throw Error("RatMatrix::apply: index out of range");
        for (int r = 0; r < rows_; ++r) {
            const Rat& m = at(r, c);
            if (is_zero(m)) continue;
            auto [it, fresh] = out.try_emplace(r, m * v);
            if (!fresh) it->second += m * v;
        }
    }
    vec_prune(out);
    return out;
}

RatMatrix RatMatrix::from_columns(int rows, const std::vector<Vec>& cols) {
    RatMatrix m(rows, (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c) m.set_col(c, cols[c]);
    return m;
}

Echelon rref(const RatMatrix& m) {
    Echelon e{m, {}, 0};
    RatMatrix& r = e.r;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int p = -1;
        for (int i = row; i < r.rows(); ++i)
            if (!is_zero(r.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < r.cols(); ++c) std::swap(r.at(p, c), r.at(row, c));
        Rat inv = 1 / r.at(row, col);
        for (int c = col; c < r.cols(); ++c) r.at(row, c) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || is_zero(r.at(i, col))) continue;
            Rat f = r.at(i, col);
            for (int c = col; c < r.cols(); ++c) r.at(i, c) -= f * r.at(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

int rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<Vec> kernel(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v;
        v.emplace(c, Rat(1));
        for (int pr = 0; pr < e.rank; ++pr) {
            const Rat& x = e.r.at(pr, c);
            if (!is_zero(x)) v.emplace(e.pivots[pr], -x);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> image(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<Vec> basis;
    basis.reserve(e.pivots.size());
    for (int c : e.pivots) basis.push_back(m.col(c));
    return basis;
}

SolveResult solve(const RatMatrix& m, const Vec& b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.set_col(m.cols(), b);
    Echelon e = rref(aug);
    SolveResult out;
    for (int pr = 0; pr < e.rank; ++pr)
        if (e.pivots[pr] == m.cols()) {
            out.inconsistent_row = pr;
            return out;
        }
    Vec x;
    for (int pr = 0; pr < e.rank; ++pr) {
        const Rat& v = e.r.at(pr, m.cols());
        if (!is_zero(v)) x.emplace(e.pivots[pr], v);
    }
    out.solution = std::move(x);
    return out;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& b, int ambient_dim) {
    RatMatrix m = RatMatrix::from_columns(ambient_dim, span);
    auto r = solve(m, b);
    return r.solution;
}

} // namespace lcwl

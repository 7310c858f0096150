#pragma once

#include "lcwl/graded.hpp"

#include <optional>

namespace lcwl {

// Dense exact rational matrix with deterministic elimination. Dimensions in
// this library are small; determinism of pivots and representatives matters
// more than asymptotics.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    void set_col(int c, const Vec& v);
    Vec col(int c) const;
    Vec apply(const Vec& x) const; // y = M x, x indexed by columns
    static RatMatrix from_columns(int rows, const std::vector<Vec>& cols);

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

struct Echelon {
    RatMatrix r;             // reduced row echelon form
    std::vector<int> pivots; // pivot column per pivot row
    int rank = 0;
};

// Gauss-Jordan over Q with first-nonzero pivoting; fully deterministic.
Echelon rref(const RatMatrix& m);

int rank(const RatMatrix& m);

// Basis of { x : M x = 0 }, one vector per free column, echelon-normalized.
std::vector<Vec> kernel(const RatMatrix& m);

// Basis of the column space: the pivot columns of M, in column order.
std::vector<Vec> image(const RatMatrix& m);

struct SolveResult {
    std::optional<Vec> solution;        // some x with M x = b
    // Certificate of inconsistency: rank [M|b] = rank M + 1 at this pivot row.
    std::optional<int> inconsistent_row;
};

SolveResult solve(const RatMatrix& m, const Vec& b);

// Column span membership tests / coordinates of b in the span of the columns.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& b, int ambient_dim);

} // namespace lcwl

#include "csitdof/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace csitdof {

namespace {

// Reduces `rows` to reduced row echelon form in place and returns the pivot
// column of each nonzero row.
std::vector<std::size_t> reduce(RationalMatrix& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        const Rational inv = 1 / rows[r][c];
        for (std::size_t k = c; k < cols; ++k) {
            rows[r][k] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) {
                continue;
            }
            const Rational factor = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                rows[i][k] -= factor * rows[r][k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    // forward elimination only; the echelon shape is enough for the rank
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) {
                continue;
            }
            const Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) {
                rows[i][k] -= factor * rows[r][k];
            }
        }
        ++r;
    }
    return r;
}

std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw std::invalid_argument("solve_square: dimension mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw std::invalid_argument("solve_square: matrix is not square");
        }
        a[i].push_back(b[i]);
    }
    const auto pivots = reduce(a, n + 1);
    if (pivots.size() < n || pivots.back() >= n) {
        return std::nullopt;
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a[i][n];
    }
    return x;
}

RationalMatrix null_space(RationalMatrix a, std::size_t cols) {
    const auto pivots = reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }
    RationalMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace csitdof

#include "csitdof/exact_lp.hpp"

#include <stdexcept>

namespace csitdof {

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) {
        throw std::invalid_argument("find_nonnegative_solution: dimension mismatch");
    }
    if (rows == 0) {
        return RationalVector{};
    }
    const std::size_t vars = a.front().size();
    const std::size_t cols = vars + rows;  // structural + artificial

    // tableau[r] = [coefficients | rhs], with rhs >= 0
    RationalMatrix tableau(rows, RationalVector(cols + 1, 0));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (a[r].size() != vars) {
            throw std::invalid_argument("find_nonnegative_solution: ragged matrix");
        }
        const bool flip = sgn(b[r]) < 0;
        for (std::size_t c = 0; c < vars; ++c) {
            tableau[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
        }
        tableau[r][vars + r] = 1;
        tableau[r][cols] = flip ? Rational(-b[r]) : b[r];
        basis[r] = vars + r;
    }

    // reduced costs of "minimize sum of artificials"
    RationalVector cost(cols + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c <= cols; ++c) {
            if (c < vars || c == cols) {
                cost[c] -= tableau[r][c];
            }
        }
    }

    for (;;) {
        // Bland: lowest-index column with negative reduced cost
        std::size_t entering = cols;
        for (std::size_t c = 0; c < cols; ++c) {
            if (sgn(cost[c]) < 0) {
                entering = c;
                break;
            }
        }
        if (entering == cols) {
            break;
        }
        std::size_t leaving = rows;
        Rational best_ratio;
        for (std::size_t r = 0; r < rows; ++r) {
            if (sgn(tableau[r][entering]) <= 0) {
                continue;
            }
            const Rational ratio = tableau[r][cols] / tableau[r][entering];
            if (leaving == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == rows) {
            break;  // unbounded phase-one direction cannot happen; objective is bounded below by 0
        }
        const Rational pivot = tableau[leaving][entering];
        for (auto& v : tableau[leaving]) {
            v /= pivot;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leaving || sgn(tableau[r][entering]) == 0) {
                continue;
            }
            const Rational factor = tableau[r][entering];
            for (std::size_t c = 0; c <= cols; ++c) {
                tableau[r][c] -= factor * tableau[leaving][c];
            }
        }
        const Rational factor = cost[entering];
        for (std::size_t c = 0; c <= cols; ++c) {
            cost[c] -= factor * tableau[leaving][c];
        }
        basis[leaving] = entering;
    }

    // -cost[rhs] is the remaining artificial mass
    if (sgn(cost[cols]) != 0) {
        return std::nullopt;
    }
    RationalVector x(vars, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        if (basis[r] < vars) {
            x[basis[r]] = tableau[r][cols];
        }
    }
    return x;
}

}  // namespace csitdof

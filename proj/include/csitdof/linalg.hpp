#pragma once

#include "csitdof/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace csitdof {

// Dense row-major rational matrix.
using RationalMatrix = std::vector<RationalVector>;

// Exact rank by Gaussian elimination. Rows may be empty (rank 0).
std::size_t rank(RationalMatrix rows);

// Solves the square system A x = b; std::nullopt when A is singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b);

// Basis of {x : A x = 0} for an A with `cols` columns, one vector per basis
// element, in reduced form (free variables set to unit vectors).
RationalMatrix null_space(RationalMatrix a, std::size_t cols);

}  // namespace csitdof

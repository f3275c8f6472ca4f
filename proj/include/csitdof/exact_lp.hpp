#pragma once

#include "csitdof/linalg.hpp"

#include <optional>

namespace csitdof {

// Finds x >= 0 with A x = b using a phase-one simplex over the rationals
// (Bland's rule, so it terminates on degenerate systems). Returns a feasible
// point, or std::nullopt when the system has none.
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b);

}  // namespace csitdof

#pragma once

#include "csitdof/achievability.hpp"
#include "csitdof/bound_gen.hpp"
#include "csitdof/polytope.hpp"
#include "csitdof/scheme_sim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace csitdof {

// All writers render rationals as "p/q". When `decimals` is set, a trailing
// "display" column repeats the main value(s) in decimal form.

// tag,c_1,...,c_K,rhs
std::string bounds_csv(const BoundSet& bounds, std::optional<int> decimals = {});

// v_1,...,v_K
std::string vertices_csv(const VertexSet& vertices, std::optional<int> decimals = {});

// weighted_sum,decimal,d_1,...,d_K (the maximizer)
std::string sumdof_csv(const WeightedOptimum& optimum, std::optional<int> decimals = {});

// label,d_1,...,d_K
std::string corners_csv(const std::vector<CornerPoint>& corners, std::optional<int> decimals = {});

// v_1,...,v_K,achievable
std::string tightness_csv(const TightnessReport& report, std::optional<int> decimals = {});

// user,intended,decodable,dof
std::string ledger_csv(const DecodeLedger& ledger, std::optional<int> decimals = {});

// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

}  // namespace csitdof

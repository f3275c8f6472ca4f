#pragma once

#include "csitdof/bound_gen.hpp"
#include "csitdof/errors.hpp"
#include "csitdof/rational.hpp"

#include <cstddef>
#include <vector>

namespace csitdof {

// Largest dimension and row count accepted by enumerate_vertices.
inline constexpr std::size_t kMaxPolytopeDim = 6;
inline constexpr std::size_t kMaxPolytopeRows = 200;

// {d : A d <= b, d >= 0}. Nonnegativity is implicit and never listed.
class HPolytope {
public:
    HPolytope(std::size_t dim, std::vector<Inequality> rows);
    explicit HPolytope(const BoundSet& bounds);

    std::size_t dim() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return rows_; }

private:
    std::size_t dim_;
    std::vector<Inequality> rows_;
};

// Extreme points of a polytope, deduplicated and sorted lexicographically.
struct VertexSet {
    std::size_t dim = 0;
    std::vector<RationalVector> points;
};

// Raised when the region has a recession direction.
class UnboundedRegionError : public PreconditionError {
public:
    explicit UnboundedRegionError(RationalVector direction);
    const RationalVector& direction() const { return direction_; }

private:
    RationalVector direction_;
};

// Exact vertex set. Empty when the region is empty.
VertexSet enumerate_vertices(const HPolytope& h);

struct WeightedOptimum {
    Rational value;
    RationalVector argmax;  // first maximizing vertex in canonical order
};

// Maximum of weights . d over the region (vertex scan).
WeightedOptimum max_weighted(const HPolytope& h, const RationalVector& weights);

// Minimal description of the same region: every kept row defines a facet and
// no two kept rows agree up to scaling.
HPolytope remove_redundant(const HPolytope& h);

bool contains(const HPolytope& h, const RationalVector& point);

bool region_equal(const HPolytope& a, const HPolytope& b);

// True iff `point` is componentwise dominated by a convex combination of the
// given points (the down-closed convex hull).
bool hull_contains(const VertexSet& vertices, const RationalVector& point);

}  // namespace csitdof

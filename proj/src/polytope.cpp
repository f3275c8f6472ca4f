#include "csitdof/polytope.hpp"

#include "csitdof/exact_lp.hpp"
#include "csitdof/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csitdof {

namespace {

struct Halfspace {
    RationalVector normal;
    Rational offset;
};

struct Vertex {
    RationalVector point;
    std::vector<bool> tight;  // indexed by halfspace
};

Rational slack(const Halfspace& h, const RationalVector& x) {
    return dot(h.normal, x) - h.offset;
}

// Halfspaces 0..dim-1 are -d_i <= 0 and halfspace `dim` is the bounding
// simplex sum(d) <= bound; the caller's rows follow.
std::vector<Halfspace> with_frame(std::size_t dim, const std::vector<Halfspace>& rows, const Rational& bound) {
    std::vector<Halfspace> all;
    all.reserve(dim + 1 + rows.size());
    for (std::size_t i = 0; i < dim; ++i) {
        RationalVector e(dim, 0);
        e[i] = -1;
        all.push_back({std::move(e), 0});
    }
    all.push_back({RationalVector(dim, 1), bound});
    all.insert(all.end(), rows.begin(), rows.end());
    return all;
}

bool adjacent(const Vertex& u, const Vertex& w, const std::vector<Halfspace>& halfspaces, std::size_t processed,
              std::size_t dim) {
    RationalMatrix common;
    for (std::size_t i = 0; i < processed; ++i) {
        if (u.tight[i] && w.tight[i]) {
            common.push_back(halfspaces[i].normal);
        }
    }
    if (common.size() + 1 < dim) {
        return false;
    }
    return rank(std::move(common)) + 1 == dim;
}

// Incremental double description: start from the simplex spanned by the
// frame and cut with one halfspace at a time. New vertices appear on the
// edges joining a kept vertex to a removed one.
std::vector<Vertex> cut_vertices(std::size_t dim, const std::vector<Halfspace>& halfspaces) {
    const std::size_t total = halfspaces.size();
    const Rational& bound = halfspaces[dim].offset;

    std::vector<Vertex> vertices;
    {
        Vertex origin{RationalVector(dim, 0), std::vector<bool>(total, false)};
        for (std::size_t i = 0; i < dim; ++i) {
            origin.tight[i] = true;
        }
        vertices.push_back(std::move(origin));
        for (std::size_t k = 0; k < dim; ++k) {
            Vertex corner{RationalVector(dim, 0), std::vector<bool>(total, false)};
            corner.point[k] = bound;
            for (std::size_t i = 0; i < dim; ++i) {
                corner.tight[i] = i != k;
            }
            corner.tight[dim] = true;
            vertices.push_back(std::move(corner));
        }
    }

    for (std::size_t idx = dim + 1; idx < total && !vertices.empty(); ++idx) {
        const Halfspace& cut = halfspaces[idx];
        std::vector<Rational> slacks;
        slacks.reserve(vertices.size());
        bool any_outside = false;
        for (const auto& v : vertices) {
            slacks.push_back(slack(cut, v.point));
            any_outside = any_outside || sgn(slacks.back()) > 0;
        }
        if (!any_outside) {
            for (std::size_t i = 0; i < vertices.size(); ++i) {
                vertices[i].tight[idx] = sgn(slacks[i]) == 0;
            }
            continue;
        }

        std::vector<Vertex> next;
        std::set<RationalVector> created;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (sgn(slacks[i]) > 0) {
                continue;
            }
            Vertex kept = vertices[i];
            kept.tight[idx] = sgn(slacks[i]) == 0;
            next.push_back(std::move(kept));
        }
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (sgn(slacks[i]) >= 0) {
                continue;
            }
            for (std::size_t j = 0; j < vertices.size(); ++j) {
                if (sgn(slacks[j]) <= 0 || !adjacent(vertices[i], vertices[j], halfspaces, idx, dim)) {
                    continue;
                }
                const Rational t = slacks[i] / (slacks[i] - slacks[j]);
                RationalVector point(dim);
                for (std::size_t k = 0; k < dim; ++k) {
                    point[k] = vertices[i].point[k] + t * (vertices[j].point[k] - vertices[i].point[k]);
                }
                if (!created.insert(point).second) {
                    continue;
                }
                Vertex fresh{std::move(point), std::vector<bool>(total, false)};
                for (std::size_t h = 0; h <= idx; ++h) {
                    fresh.tight[h] = sgn(slack(halfspaces[h], fresh.point)) == 0;
                }
                next.push_back(std::move(fresh));
            }
        }
        vertices = std::move(next);
    }
    return vertices;
}

std::vector<Halfspace> halfspaces_of(const HPolytope& h) {
    std::vector<Halfspace> rows;
    rows.reserve(h.inequalities().size());
    for (const auto& ineq : h.inequalities()) {
        rows.push_back({ineq.coeffs, ineq.rhs});
    }
    return rows;
}

bool touches_frame(const std::vector<Vertex>& vertices, std::size_t dim) {
    return std::any_of(vertices.begin(), vertices.end(), [dim](const Vertex& v) { return v.tight[dim]; });
}

// Returns a nonzero direction r >= 0 with A r <= 0, if any.
std::optional<RationalVector> recession_direction(std::size_t dim, const std::vector<Halfspace>& rows) {
    std::vector<Halfspace> cone;
    cone.reserve(rows.size());
    for (const auto& row : rows) {
        cone.push_back({row.normal, 0});
    }
    const auto vertices = cut_vertices(dim, with_frame(dim, cone, 1));
    for (const auto& v : vertices) {
        if (v.tight[dim]) {
            return v.point;
        }
    }
    return std::nullopt;
}

Rational abs_sum(const std::vector<Halfspace>& rows) {
    Rational total = 1;
    for (const auto& row : rows) {
        total += abs(row.offset);
    }
    return total;
}


std::size_t affine_rank(const std::vector<RationalVector>& points) {
    if (points.empty()) {
        return 0;
    }
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(points[i].size());
        for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = points[i][k] - points[0][k];
        }
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

bool is_nonnegativity_row(const Inequality& row) {
    if (sgn(row.rhs) != 0) {
        return false;
    }
    std::size_t nonzero = 0;
    bool negative = false;
    for (const auto& c : row.coeffs) {
        if (sgn(c) != 0) {
            ++nonzero;
            negative = sgn(c) < 0;
        }
    }
    return nonzero == 1 && negative;
}

std::string direction_text(const RationalVector& direction) {
    return to_string(direction);
}

}  // namespace

HPolytope::HPolytope(std::size_t dim, std::vector<Inequality> rows) : dim_(dim), rows_(std::move(rows)) {
    if (dim_ == 0) {
        throw ValidationError("polytope dimension must be at least 1");
    }
    for (const auto& row : rows_) {
        if (row.coeffs.size() != dim_) {
            throw ValidationError("inequality '" + row.tag + "' has " + std::to_string(row.coeffs.size()) +
                                  " coefficients, polytope dimension is " + std::to_string(dim_));
        }
    }
}

HPolytope::HPolytope(const BoundSet& bounds) : HPolytope(bounds.users(), bounds.inequalities()) {}

UnboundedRegionError::UnboundedRegionError(RationalVector direction)
    : PreconditionError("region is unbounded along direction " + direction_text(direction)),
      direction_(std::move(direction)) {}

VertexSet enumerate_vertices(const HPolytope& h) {
    const std::size_t dim = h.dim();
    if (dim > kMaxPolytopeDim) {
        throw PreconditionError("vertex enumeration supports dimension <= " + std::to_string(kMaxPolytopeDim) +
                                ", got " + std::to_string(dim));
    }
    if (h.inequalities().size() > kMaxPolytopeRows) {
        throw PreconditionError("vertex enumeration supports at most " + std::to_string(kMaxPolytopeRows) +
                                " inequalities, got " + std::to_string(h.inequalities().size()));
    }
    const auto rows = halfspaces_of(h);
    Rational bound = abs_sum(rows);
    bool checked_recession = false;
    for (;;) {
        const auto vertices = cut_vertices(dim, with_frame(dim, rows, bound));
        if (!touches_frame(vertices, dim)) {
            VertexSet out{dim, {}};
            out.points.reserve(vertices.size());
            for (const auto& v : vertices) {
                out.points.push_back(v.point);
            }
            std::sort(out.points.begin(), out.points.end());
            out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
            return out;
        }
        if (!checked_recession) {
            if (auto direction = recession_direction(dim, rows)) {
                throw UnboundedRegionError(std::move(*direction));
            }
            checked_recession = true;
        }
        bound *= 2;
    }
}

WeightedOptimum max_weighted(const HPolytope& h, const RationalVector& weights) {
    if (weights.size() != h.dim()) {
        throw PreconditionError("weights have " + std::to_string(weights.size()) + " entries, region dimension is " +
                                std::to_string(h.dim()));
    }
    const VertexSet vertices = enumerate_vertices(h);
    if (vertices.points.empty()) {
        throw PreconditionError("cannot optimize over an empty region");
    }
    WeightedOptimum best{dot(weights, vertices.points.front()), vertices.points.front()};
    for (const auto& p : vertices.points) {
        Rational value = dot(weights, p);
        if (value > best.value) {
            best = {std::move(value), p};
        }
    }
    return best;
}

HPolytope remove_redundant(const HPolytope& h) {
    const std::size_t dim = h.dim();
    const VertexSet vertices = enumerate_vertices(h);
    if (vertices.points.empty()) {
        return h;
    }
    if (affine_rank(vertices.points) == dim) {
        // Full-dimensional: keep exactly one row per facet.
        std::vector<Inequality> kept;
        std::set<std::pair<RationalVector, Rational>> facets;
        for (const auto& row : h.inequalities()) {
            if (is_nonnegativity_row(row)) {
                continue;
            }
            std::vector<RationalVector> on_row;
            for (const auto& p : vertices.points) {
                if (dot(row.coeffs, p) == row.rhs) {
                    on_row.push_back(p);
                }
            }
            if (on_row.size() < dim || affine_rank(on_row) + 1 != dim) {
                continue;
            }
            Rational scale = 0;
            for (const auto& c : row.coeffs) {
                if (sgn(c) != 0) {
                    scale = abs(c);
                    break;
                }
            }
            RationalVector key = row.coeffs;
            for (auto& c : key) {
                c /= scale;
            }
            if (facets.emplace(std::move(key), row.rhs / scale).second) {
                kept.push_back(row);
            }
        }
        return HPolytope(dim, std::move(kept));
    }

    // Lower-dimensional region: drop rows one at a time while the region is
    // unchanged.
    std::vector<Inequality> current = h.inequalities();
    for (std::size_t i = 0; i < current.size();) {
        std::vector<Inequality> without = current;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        bool same = false;
        try {
            same = region_equal(HPolytope(dim, without), HPolytope(dim, current));
        } catch (const UnboundedRegionError&) {
            same = false;
        }
        if (same) {
            current = std::move(without);
        } else {
            ++i;
        }
    }
    return HPolytope(dim, std::move(current));
}

bool contains(const HPolytope& h, const RationalVector& point) {
    if (point.size() != h.dim()) {
        throw PreconditionError("point has " + std::to_string(point.size()) + " coordinates, region dimension is " +
                                std::to_string(h.dim()));
    }
    for (const auto& x : point) {
        if (sgn(x) < 0) {
            return false;
        }
    }
    for (const auto& row : h.inequalities()) {
        if (dot(row.coeffs, point) > row.rhs) {
            return false;
        }
    }
    return true;
}

bool region_equal(const HPolytope& a, const HPolytope& b) {
    if (a.dim() != b.dim()) {
        throw PreconditionError("region_equal: dimensions differ");
    }
    const VertexSet va = enumerate_vertices(a);
    const VertexSet vb = enumerate_vertices(b);
    const auto inside = [](const VertexSet& vs, const HPolytope& h) {
        return std::all_of(vs.points.begin(), vs.points.end(), [&](const RationalVector& p) { return contains(h, p); });
    };
    return inside(va, b) && inside(vb, a);
}

bool hull_contains(const VertexSet& vertices, const RationalVector& point) {
    if (vertices.points.empty()) {
        return false;
    }
    const std::size_t dim = point.size();
    const std::size_t count = vertices.points.size();
    // variables: mu_1..mu_count, then one surplus per coordinate
    //   sum_v mu_v v_k - s_k = p_k,  sum_v mu_v = 1
    RationalMatrix a(dim + 1, RationalVector(count + dim, 0));
    RationalVector b(dim + 1, 0);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t v = 0; v < count; ++v) {
            if (vertices.points[v].size() != dim) {
                throw PreconditionError("hull_contains: dimension mismatch");
            }
            a[k][v] = vertices.points[v][k];
        }
        a[k][count + k] = -1;
        b[k] = point[k];
    }
    for (std::size_t v = 0; v < count; ++v) {
        a[dim][v] = 1;
    }
    b[dim] = 1;
    return find_nonnegative_solution(a, b).has_value();
}

}  // namespace csitdof

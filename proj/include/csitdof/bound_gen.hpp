#pragma once

#include "csitdof/csit_model.hpp"
#include "csitdof/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace csitdof {

// coeffs . d <= rhs, with d_i >= 0 implicit. The tag records where the row
// came from; users inside tags are 1-based.
struct Inequality {
    RationalVector coeffs;
    Rational rhs;
    std::string tag;

    bool operator==(const Inequality&) const = default;
};

// Rows are sorted by tag and contain no two rows that agree up to positive
// scaling; the first row (in tag order) of each such class is kept.
class BoundSet {
public:
    explicit BoundSet(std::size_t users);
    BoundSet(std::size_t users, std::vector<Inequality> rows);

    std::size_t users() const { return users_; }
    const std::vector<Inequality>& inequalities() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    // Merges another set over the same users, re-applying the ordering and
    // deduplication rules.
    BoundSet merged(const BoundSet& other) const;

private:
    std::size_t users_;
    std::vector<Inequality> rows_;
};

// Largest K accepted by the generators.
inline constexpr std::size_t kMaxBoundUsers = 8;

// Weighted-sum bounds: for every ordered selection pi of j users,
//   sum_i d_pi(i) / i <= 1 + sum_{i=2}^{j} (sum_{r<i} lambda_P^pi(r)) / (i (i-1)).
BoundSet theorem1_weighted(const Marginals& marginals);

// Equal-weight sum bounds: for every subset S with |S| >= 2,
//   sum_{i in S} d_i <= 1 + sum of the |S|-1 smallest (lambda_P^i + lambda_D^i).
BoundSet theorem1_sum(const Marginals& marginals);

// Union of the two families above.
BoundSet theorem1(const Marginals& marginals);

// Joint-distribution bounds on the D->P collapsed joint: for every subset S
// with |S| >= 3 and weak user w in S, 2 sum_{S\w} d + d_w <= rhs. Subsets of
// size >= 4 need symmetric marginals (PreconditionError otherwise).
BoundSet theorem2(const JointCsitDistribution& joint);

// Two-user MIMO bounds with N1 >= N2 receive antennas and P/N-only CSIT,
// plus the point-to-point caps d_k <= N_k.
BoundSet theorem3_mimo(std::size_t n1, std::size_t n2, const JointCsitDistribution& joint);

}  // namespace csitdof

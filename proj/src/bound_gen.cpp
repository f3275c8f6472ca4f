#include "csitdof/bound_gen.hpp"

#include "csitdof/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace csitdof {

namespace {

using CanonicalKey = std::pair<RationalVector, Rational>;

CanonicalKey canonical_key(const Inequality& row) {
    Rational scale = 0;
    for (const auto& c : row.coeffs) {
        if (sgn(c) != 0) {
            scale = abs(c);
            break;
        }
    }
    CanonicalKey key{row.coeffs, row.rhs};
    for (auto& c : key.first) {
        c /= scale;
    }
    key.second /= scale;
    return key;
}

std::vector<Inequality> normalize(std::size_t users, std::vector<Inequality> rows) {
    for (const auto& row : rows) {
        if (row.coeffs.size() != users) {
            throw ValidationError("inequality '" + row.tag + "' has " + std::to_string(row.coeffs.size()) +
                                  " coefficients, expected " + std::to_string(users));
        }
        if (std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return sgn(c) == 0; })) {
            throw ValidationError("inequality '" + row.tag + "' has no nonzero coefficient");
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Inequality& a, const Inequality& b) { return a.tag < b.tag; });
    std::map<CanonicalKey, bool> seen;
    std::vector<Inequality> kept;
    kept.reserve(rows.size());
    for (auto& row : rows) {
        if (seen.emplace(canonical_key(row), true).second) {
            kept.push_back(std::move(row));
        }
    }
    return kept;
}

std::string user_list(const std::vector<std::size_t>& users, char sep) {
    std::string out;
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(users[i] + 1);
    }
    return out;
}

void check_user_count(std::size_t users) {
    if (users == 0 || users > kMaxBoundUsers) {
        throw PreconditionError("bound generation supports 1 <= K <= " + std::to_string(kMaxBoundUsers) +
                                ", got K = " + std::to_string(users));
    }
}

std::vector<std::size_t> members(unsigned mask, std::size_t users) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < users; ++i) {
        if (mask & (1u << i)) {
            out.push_back(i);
        }
    }
    return out;
}

// Emits every ordered selection of distinct users, depth-first.
void weighted_rows(const Marginals& marginals, std::vector<std::size_t>& prefix, std::vector<bool>& used,
                   std::vector<Inequality>& out) {
    const std::size_t users = marginals.users();
    if (!prefix.empty()) {
        Inequality row{RationalVector(users, 0), 1, "T1w:" + user_list(prefix, '>')};
        Rational perfect_so_far = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const unsigned position = static_cast<unsigned>(i + 1);
            row.coeffs[prefix[i]] = Rational(1, position);
            if (position >= 2) {
                row.rhs += perfect_so_far / (position * (position - 1));
            }
            perfect_so_far += marginals.user(prefix[i]).perfect;
        }
        out.push_back(std::move(row));
    }
    for (std::size_t u = 0; u < users; ++u) {
        if (!used[u]) {
            used[u] = true;
            prefix.push_back(u);
            weighted_rows(marginals, prefix, used, out);
            prefix.pop_back();
            used[u] = false;
        }
    }
}

}  // namespace

BoundSet::BoundSet(std::size_t users) : users_(users) {}

BoundSet::BoundSet(std::size_t users, std::vector<Inequality> rows)
    : users_(users), rows_(normalize(users, std::move(rows))) {}

BoundSet BoundSet::merged(const BoundSet& other) const {
    if (other.users_ != users_) {
        throw ValidationError("cannot merge bound sets over different user counts");
    }
    std::vector<Inequality> rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return BoundSet(users_, std::move(rows));
}

BoundSet theorem1_weighted(const Marginals& marginals) {
    check_user_count(marginals.users());
    std::vector<Inequality> rows;
    std::vector<std::size_t> prefix;
    std::vector<bool> used(marginals.users(), false);
    weighted_rows(marginals, prefix, used, rows);
    return BoundSet(marginals.users(), std::move(rows));
}

BoundSet theorem1_sum(const Marginals& marginals) {
    const std::size_t users = marginals.users();
    check_user_count(users);
    std::vector<Inequality> rows;
    for (unsigned mask = 1; mask < (1u << users); ++mask) {
        const auto subset = members(mask, users);
        if (subset.size() < 2) {
            continue;
        }
        // The smallest |S|-1 values of lambda_P + lambda_D minimize the
        // bound over all enhancement orders.
        std::vector<Rational> known;
        for (std::size_t i : subset) {
            known.push_back(marginals.user(i).perfect + marginals.user(i).delayed);
        }
        std::sort(known.begin(), known.end());
        Inequality row{RationalVector(users, 0), 1, "T1s:{" + user_list(subset, ',') + "}"};
        for (std::size_t i : subset) {
            row.coeffs[i] = 1;
        }
        for (std::size_t i = 0; i + 1 < known.size(); ++i) {
            row.rhs += known[i];
        }
        rows.push_back(std::move(row));
    }
    return BoundSet(users, std::move(rows));
}

BoundSet theorem1(const Marginals& marginals) {
    return theorem1_weighted(marginals).merged(theorem1_sum(marginals));
}

BoundSet theorem2(const JointCsitDistribution& joint) {
    const std::size_t users = joint.users();
    check_user_count(users);
    const JointCsitDistribution collapsed = collapse_delay_to_perfect(joint);
    const Marginals marginals = marginals_from_joint(collapsed);
    const bool symmetric = is_symmetric(marginals);

    std::vector<Inequality> rows;
    for (unsigned mask = 1; mask < (1u << users); ++mask) {
        const auto subset = members(mask, users);
        const std::size_t j = subset.size();
        if (j < 3) {
            continue;
        }
        if (j >= 4 && !symmetric) {
            throw PreconditionError("theorem 2 with subsets of size >= 4 requires symmetric marginals "
                                    "(after treating delayed CSIT as perfect); asymmetric K >= 4 is unsupported");
        }
        for (std::size_t weak : subset) {
            std::vector<std::size_t> strong;
            for (std::size_t i : subset) {
                if (i != weak) {
                    strong.push_back(i);
                }
            }
            Inequality row{RationalVector(users, 0), 2,
                           "T2:{" + user_list(subset, ',') + "}/w=" + std::to_string(weak + 1)};
            for (std::size_t i : strong) {
                row.coeffs[i] = 2;
            }
            row.coeffs[weak] = 1;
            if (j == 3) {
                row.rhs += marginals.user(strong[0]).perfect + marginals.user(strong[1]).perfect +
                           pairwise_perfect(collapsed, strong[0], strong[1]);
            } else {
                Rational min_pair = pairwise_perfect(collapsed, strong[0], strong[1]);
                for (std::size_t a = 0; a < strong.size(); ++a) {
                    for (std::size_t b = a + 1; b < strong.size(); ++b) {
                        min_pair = std::min(min_pair, pairwise_perfect(collapsed, strong[a], strong[b]));
                    }
                }
                row.rhs += 2 * Rational(static_cast<long>(j - 2)) * marginals.user(0).perfect + min_pair;
            }
            rows.push_back(std::move(row));
        }
    }
    return BoundSet(users, std::move(rows));
}

BoundSet theorem3_mimo(std::size_t n1, std::size_t n2, const JointCsitDistribution& joint) {
    if (joint.users() != 2) {
        throw PreconditionError("theorem 3 applies to two-user MIMO only");
    }
    if (n2 < 1 || n1 < n2) {
        throw PreconditionError("theorem 3 requires N1 >= N2 >= 1 (swap the users so that N1 >= N2)");
    }
    for (const auto& [tuple, p] : joint.mass()) {
        if (std::find(tuple.begin(), tuple.end(), CsitState::D) != tuple.end()) {
            throw PreconditionError("theorem 3 requires P/N-only CSIT, found state " + to_string(tuple));
        }
    }
    const Marginals m = marginals_from_joint(joint);
    const Rational N1(static_cast<long>(n1));
    const Rational N2(static_cast<long>(n2));
    std::vector<Inequality> rows;
    rows.push_back({{1 / N1, 1 / N2}, 1 + m.user(1).perfect, "T3:antenna-weighted"});
    rows.push_back({{1, 1}, N1 + N2 * m.user(0).perfect, "T3:sum"});
    rows.push_back({{1, 0}, N1, "cap:d1"});
    rows.push_back({{0, 1}, N2, "cap:d2"});
    return BoundSet(2, std::move(rows));
}

}  // namespace csitdof

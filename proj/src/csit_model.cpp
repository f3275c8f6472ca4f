#include "csitdof/csit_model.hpp"

#include "csitdof/errors.hpp"

#include <algorithm>

namespace csitdof {

char to_char(CsitState state) {
    switch (state) {
    case CsitState::P:
        return 'P';
    case CsitState::D:
        return 'D';
    case CsitState::N:
        return 'N';
    }
    return '?';
}

CsitState csit_state_from_char(char c) {
    switch (c) {
    case 'P':
        return CsitState::P;
    case 'D':
        return CsitState::D;
    case 'N':
        return CsitState::N;
    default:
        throw ValidationError(std::string("invalid CSIT state '") + c + "' (expected P, D or N)");
    }
}

StateTuple parse_state_tuple(std::string_view text) {
    StateTuple tuple;
    tuple.reserve(text.size());
    for (char c : text) {
        tuple.push_back(csit_state_from_char(c));
    }
    return tuple;
}

std::string to_string(const StateTuple& tuple) {
    std::string out;
    out.reserve(tuple.size());
    for (CsitState s : tuple) {
        out.push_back(to_char(s));
    }
    return out;
}

StateTemplate parse_state_template(std::string_view text) {
    StateTemplate pattern;
    pattern.reserve(text.size());
    for (char c : text) {
        if (c == '-') {
            pattern.emplace_back(std::nullopt);
        } else {
            pattern.emplace_back(csit_state_from_char(c));
        }
    }
    return pattern;
}

CsitPattern CsitPattern::from_columns(const std::vector<std::string>& columns) {
    if (columns.empty()) {
        throw ValidationError("pattern: at least one slot is required");
    }
    std::vector<StateTuple> parsed;
    parsed.reserve(columns.size());
    for (const auto& column : columns) {
        parsed.push_back(parse_state_tuple(column));
    }
    const std::size_t users = parsed.front().size();
    return CsitPattern(users, std::move(parsed));
}

CsitPattern::CsitPattern(std::size_t users, std::vector<StateTuple> columns)
    : users_(users), columns_(std::move(columns)) {
    if (users_ == 0) {
        throw ValidationError("pattern: at least one user is required");
    }
    if (columns_.empty()) {
        throw ValidationError("pattern: at least one slot is required");
    }
    for (std::size_t t = 0; t < columns_.size(); ++t) {
        if (columns_[t].size() != users_) {
            throw ValidationError("pattern: slot " + std::to_string(t + 1) + " has " +
                                  std::to_string(columns_[t].size()) + " states, expected " +
                                  std::to_string(users_));
        }
    }
}

JointCsitDistribution::JointCsitDistribution(std::size_t users, const std::map<StateTuple, Rational>& mass)
    : users_(users) {
    if (users_ == 0) {
        throw ValidationError("joint: at least one user is required");
    }
    Rational total = 0;
    for (const auto& [tuple, p] : mass) {
        if (tuple.size() != users_) {
            throw ValidationError("joint: state '" + to_string(tuple) + "' does not have " +
                                  std::to_string(users_) + " entries");
        }
        if (sgn(p) < 0) {
            throw ValidationError("joint: negative probability for state '" + to_string(tuple) + "'");
        }
        total += p;
        if (sgn(p) > 0) {
            mass_.emplace(tuple, p);
        }
    }
    if (total != 1) {
        throw ValidationError("joint: probabilities sum to " + to_string(total) + ", expected 1");
    }
}

Rational JointCsitDistribution::probability(const StateTuple& tuple) const {
    const auto it = mass_.find(tuple);
    return it == mass_.end() ? Rational(0) : it->second;
}

const Rational& UserMarginal::of(CsitState state) const {
    switch (state) {
    case CsitState::P:
        return perfect;
    case CsitState::D:
        return delayed;
    case CsitState::N:
        break;
    }
    return none;
}

Marginals::Marginals(std::vector<UserMarginal> per_user) : per_user_(std::move(per_user)) {
    for (std::size_t i = 0; i < per_user_.size(); ++i) {
        const auto& m = per_user_[i];
        if (sgn(m.perfect) < 0 || sgn(m.delayed) < 0 || sgn(m.none) < 0 ||
            m.perfect + m.delayed + m.none != 1) {
            throw ValidationError("marginals of user " + std::to_string(i + 1) +
                                  " must be nonnegative and sum to 1");
        }
    }
}

Marginals Marginals::symmetric(std::size_t users, const Rational& perfect, const Rational& delayed) {
    return Marginals(std::vector<UserMarginal>(users, UserMarginal{perfect, delayed, 1 - perfect - delayed}));
}

JointCsitDistribution joint_from_pattern(const CsitPattern& pattern) {
    std::map<StateTuple, Rational> mass;
    const Rational weight(1, static_cast<unsigned long>(pattern.slots()));
    for (std::size_t t = 0; t < pattern.slots(); ++t) {
        mass[pattern.column(t)] += weight;
    }
    return JointCsitDistribution(pattern.users(), mass);
}

Marginals marginals_from_joint(const JointCsitDistribution& joint) {
    std::vector<UserMarginal> per_user(joint.users(), UserMarginal{0, 0, 0});
    for (const auto& [tuple, p] : joint.mass()) {
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            switch (tuple[i]) {
            case CsitState::P:
                per_user[i].perfect += p;
                break;
            case CsitState::D:
                per_user[i].delayed += p;
                break;
            case CsitState::N:
                per_user[i].none += p;
                break;
            }
        }
    }
    return Marginals(std::move(per_user));
}

Rational wildcard_prob(const JointCsitDistribution& joint, const StateTemplate& pattern) {
    if (pattern.size() != joint.users()) {
        throw ValidationError("template length " + std::to_string(pattern.size()) +
                              " does not match user count " + std::to_string(joint.users()));
    }
    Rational total = 0;
    for (const auto& [tuple, p] : joint.mass()) {
        bool match = true;
        for (std::size_t i = 0; i < tuple.size() && match; ++i) {
            match = !pattern[i] || *pattern[i] == tuple[i];
        }
        if (match) {
            total += p;
        }
    }
    return total;
}

Rational pairwise_perfect(const JointCsitDistribution& joint, std::size_t a, std::size_t b) {
    if (a == b) {
        throw PreconditionError("pairwise_perfect: users must differ");
    }
    if (a >= joint.users() || b >= joint.users()) {
        throw PreconditionError("pairwise_perfect: user index out of range");
    }
    StateTemplate pattern(joint.users(), std::nullopt);
    pattern[a] = CsitState::P;
    pattern[b] = CsitState::P;
    return wildcard_prob(joint, pattern);
}

bool is_symmetric(const Marginals& marginals) {
    const auto& all = marginals.all();
    return std::all_of(all.begin(), all.end(), [&](const UserMarginal& m) { return m == all.front(); });
}

JointCsitDistribution collapse_delay_to_perfect(const JointCsitDistribution& joint) {
    std::map<StateTuple, Rational> mass;
    for (const auto& [tuple, p] : joint.mass()) {
        StateTuple collapsed = tuple;
        std::replace(collapsed.begin(), collapsed.end(), CsitState::D, CsitState::P);
        mass[collapsed] += p;
    }
    return JointCsitDistribution(joint.users(), mass);
}

}  // namespace csitdof

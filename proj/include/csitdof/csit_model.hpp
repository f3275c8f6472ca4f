#pragma once

#include "csitdof/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csitdof {

// Knowledge the transmitter has about one user's channel in one slot:
// perfect instantaneous, delayed by one slot, or none.
enum class CsitState { P, D, N };

char to_char(CsitState state);
CsitState csit_state_from_char(char c);  // throws ValidationError

// Joint CSIT of all users in one slot, user 0 first.
using StateTuple = std::vector<CsitState>;

StateTuple parse_state_tuple(std::string_view text);  // "PNN" -> {P, N, N}
std::string to_string(const StateTuple& tuple);

// Per-user template where std::nullopt matches any state ("PP-").
using StateTemplate = std::vector<std::optional<CsitState>>;
StateTemplate parse_state_template(std::string_view text);

// Users x slots grid of CSIT states. Each slot (column) carries weight 1/T.
class CsitPattern {
public:
    // One string per slot, one character per user, e.g. {"PNN", "NPN"}.
    static CsitPattern from_columns(const std::vector<std::string>& columns);

    CsitPattern(std::size_t users, std::vector<StateTuple> columns);

    std::size_t users() const { return users_; }
    std::size_t slots() const { return columns_.size(); }
    const StateTuple& column(std::size_t slot) const { return columns_.at(slot); }
    CsitState at(std::size_t user, std::size_t slot) const { return columns_.at(slot).at(user); }

private:
    std::size_t users_;
    std::vector<StateTuple> columns_;
};

// Probability mass over K-tuples of CSIT states. Tuples that are absent have
// probability zero; zero-mass entries are never stored.
class JointCsitDistribution {
public:
    JointCsitDistribution(std::size_t users, const std::map<StateTuple, Rational>& mass);

    std::size_t users() const { return users_; }
    const std::map<StateTuple, Rational>& mass() const { return mass_; }
    Rational probability(const StateTuple& tuple) const;

    bool operator==(const JointCsitDistribution& other) const = default;

private:
    std::size_t users_;
    std::map<StateTuple, Rational> mass_;
};

struct UserMarginal {
    Rational perfect;
    Rational delayed;
    Rational none;

    const Rational& of(CsitState state) const;
    bool operator==(const UserMarginal&) const = default;
};

// lambda_P^i, lambda_D^i, lambda_N^i for every user.
class Marginals {
public:
    explicit Marginals(std::vector<UserMarginal> per_user);

    std::size_t users() const { return per_user_.size(); }
    const UserMarginal& user(std::size_t i) const { return per_user_.at(i); }
    const std::vector<UserMarginal>& all() const { return per_user_; }

    // Symmetric marginals with the given values for every user.
    static Marginals symmetric(std::size_t users, const Rational& perfect, const Rational& delayed);

private:
    std::vector<UserMarginal> per_user_;
};

JointCsitDistribution joint_from_pattern(const CsitPattern& pattern);

Marginals marginals_from_joint(const JointCsitDistribution& joint);

// Total mass of the tuples matching `pattern`; wildcard positions match
// every state.
Rational wildcard_prob(const JointCsitDistribution& joint, const StateTemplate& pattern);

// Probability that users a and b (0-based) both have perfect CSIT.
Rational pairwise_perfect(const JointCsitDistribution& joint, std::size_t a, std::size_t b);

bool is_symmetric(const Marginals& marginals);

// Replaces every D by P and merges the resulting tuples.
JointCsitDistribution collapse_delay_to_perfect(const JointCsitDistribution& joint);

}  // namespace csitdof

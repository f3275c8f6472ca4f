#include "csitdof/achievability.hpp"

#include "csitdof/bound_gen.hpp"
#include "csitdof/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace csitdof {

namespace {

void check_probability(const Rational& value, const char* name) {
    if (sgn(value) < 0 || value > 1) {
        throw PreconditionError(std::string(name) + " = " + to_string(value) + " is not in [0, 1]");
    }
}

void check_marginal_triple(const Rational& perfect, const Rational& delayed, const Rational& none) {
    check_probability(perfect, "lambda_P");
    check_probability(delayed, "lambda_D");
    check_probability(none, "lambda_N");
    if (perfect + delayed + none != 1) {
        throw PreconditionError("lambda_P + lambda_D + lambda_N must equal 1");
    }
}

mpz_class factorial(unsigned n) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::string subset_label(const std::vector<std::size_t>& subset) {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(subset[i] + 1);
    }
    return out + "}";
}

Rational from_size(std::size_t n) {
    return Rational(static_cast<unsigned long>(n));
}

}  // namespace

MimoScenario::MimoScenario(std::size_t n1, std::size_t n2, JointCsitDistribution joint)
    : n1_(n1), n2_(n2), joint_(std::move(joint)) {
    if (n2_ < 1 || n1_ < n2_) {
        throw PreconditionError("MIMO scenario requires N1 >= N2 >= 1");
    }
    if (joint_.users() != 2) {
        throw PreconditionError("MIMO scenario requires a two-user joint distribution");
    }
    for (const auto& [tuple, p] : joint_.mass()) {
        if (std::find(tuple.begin(), tuple.end(), CsitState::D) != tuple.end()) {
            throw PreconditionError("MIMO scenario admits only P/N states, found " + to_string(tuple));
        }
    }
    using S = CsitState;
    pp_ = joint_.probability({S::P, S::P});
    pn_ = joint_.probability({S::P, S::N});
    np_ = joint_.probability({S::N, S::P});
    nn_ = joint_.probability({S::N, S::N});
}

bool MimoScenario::interference_balanced() const {
    return from_size(n1_) * pn_ <= from_size(n2_) * np_;
}

Rational lambda_d_min(unsigned users, unsigned order) {
    if (order < 1 || order > users) {
        throw PreconditionError("lambda_d_min requires 1 <= j <= K");
    }
    return 1 - Rational(users - order + 1) / (users * harmonic_sum(order, users));
}

Rational lambda_d_min_oracle(unsigned users, unsigned order) {
    if (order < 1 || order > users || users > 10) {
        throw PreconditionError("lambda_d_min_oracle requires 1 <= j <= K <= 10");
    }
    // Phase i is repeated (i-1)!(K-i)! K times; each repetition occupies
    // C(K,i) slots and each slot needs K-i channel feedbacks.
    mpz_class feedbacks = 0;
    mpz_class slots = 0;
    for (unsigned i = order; i <= users; ++i) {
        const mpz_class repetitions = factorial(i - 1) * factorial(users - i) * users;
        const mpz_class phase_slots = repetitions * binomial(users, i);
        slots += phase_slots;
        feedbacks += phase_slots * (users - i);
    }
    Rational ratio(feedbacks, slots * users);
    ratio.canonicalize();
    return ratio;
}

Rational case_b_none_threshold(std::size_t users, const Rational& delayed) {
    const Rational h = harmonic_sum(2, static_cast<unsigned>(users));
    if (sgn(h) == 0) {
        return 1;  // a single user never needs MAT
    }
    return delayed / h;
}

std::vector<CornerPoint> case_a_corners(std::size_t users, const Rational& perfect) {
    check_probability(perfect, "lambda_P");
    std::vector<CornerPoint> out;
    std::set<RationalVector> seen;
    for (std::size_t i = 0; i < users; ++i) {
        RationalVector coords(users, perfect);
        coords[i] = 1;
        if (!seen.insert(coords).second) {
            continue;
        }
        out.push_back({std::move(coords), "caseA:" + std::to_string(i + 1),
                       {{"user", std::to_string(i + 1)}, {"zf_fraction", to_string(perfect)}}});
    }
    return out;
}

std::vector<CornerPoint> case_b_corners(std::size_t users, const Rational& perfect, const Rational& delayed,
                                        const Rational& none) {
    check_marginal_triple(perfect, delayed, none);
    const Rational threshold = case_b_none_threshold(users, delayed);
    if (none > threshold) {
        throw PreconditionError("case B requires lambda_N <= lambda_D / sum_{j=2}^K 1/j = " + to_string(threshold) +
                                ", got lambda_N = " + to_string(none));
    }
    std::vector<CornerPoint> out;
    for (unsigned mask = 1; mask < (1u << users); ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < users; ++i) {
            if (mask & (1u << i)) {
                subset.push_back(i);
            }
        }
        const unsigned j = static_cast<unsigned>(subset.size());
        const Rational value = (1 + perfect * harmonic_sum(2, j)) / harmonic_sum(1, j);
        RationalVector coords(users, perfect);
        for (std::size_t i : subset) {
            coords[i] = value;
        }
        out.push_back({std::move(coords), "caseB:" + subset_label(subset),
                       {{"subset", subset_label(subset)}, {"order", std::to_string(j)}}});
    }
    return out;
}

std::vector<CornerPoint> mimo_corners(const MimoScenario& s) {
    const Rational N1 = from_size(s.n1());
    const Rational N2 = from_size(s.n2());
    const Rational p1 = s.perfect1();
    const Rational p2 = s.perfect2();
    std::vector<CornerPoint> out;
    if (s.interference_balanced()) {
        if (N1 - N2 + N2 * p1 <= N1 * p2) {
            out.push_back({{N1, N2 * p1}, "mimo:A1", {{"branch", "A"}}});
            out.push_back({{N1 - N2 + N2 * p1, N2}, "mimo:A2", {{"branch", "A"}}});
        } else {
            if (s.n1() == s.n2()) {
                // N1 = N2 turns the branch condition into lambda_PN > lambda_NP,
                // which contradicts interference_balanced().
                throw std::logic_error("mimo_corners: B branch reached with N1 = N2");
            }
            out.push_back({{N1, N2 * p1}, "mimo:B1", {{"branch", "B"}}});
            out.push_back({{N1 * p2, N2}, "mimo:B2", {{"branch", "B"}}});
            out.push_back({{N1 - N1 * N2 * (p2 - p1) / (N1 - N2), (N1 * N2 * p2 - N2 * N2 * p1) / (N1 - N2)},
                           "mimo:B3",
                           {{"branch", "B"}}});
        }
    } else {
        out.push_back({{N1, N2 * s.pp() + N2 * N2 / N1 * s.np()}, "mimo:C1", {{"branch", "C"}}});
        out.push_back({{N1 * p2, N2}, "mimo:C2", {{"branch", "C"}}});
        out.push_back({{N1 - N2 * s.np(), N2 * p2 + N2 * N2 / N1 * s.np()}, "mimo:C3", {{"branch", "C"}}});
    }
    return out;
}

HPolytope mimo_inner_bound(const MimoScenario& s) {
    const Rational N1 = from_size(s.n1());
    const Rational N2 = from_size(s.n2());
    const Rational usable = std::min(s.pn(), Rational(N2 / N1 * s.np()));
    std::vector<Inequality> rows;
    rows.push_back({{1 / N1, 1 / N2}, 1 + s.perfect2(), "inner:antenna-weighted"});
    rows.push_back({{1, 1}, N1 + N2 * (s.pp() + usable), "inner:sum"});
    rows.push_back({{1, 0}, N1, "cap:d1"});
    rows.push_back({{0, 1}, N2, "cap:d2"});
    return HPolytope(BoundSet(2, std::move(rows)));
}

HPolytope mimo_outer_bound(const MimoScenario& s) {
    return HPolytope(theorem3_mimo(s.n1(), s.n2(), s.joint()));
}

RationalVector case_b_accounting(std::size_t users, const std::vector<std::size_t>& subset, const Rational& perfect,
                                 const Rational& delayed, const Rational& none) {
    check_marginal_triple(perfect, delayed, none);
    const unsigned j = static_cast<unsigned>(subset.size());
    if (j == 0 || j > users) {
        throw PreconditionError("case_b_accounting: subset size must be in [1, K]");
    }
    for (std::size_t u : subset) {
        if (u >= users) {
            throw PreconditionError("case_b_accounting: user index out of range");
        }
    }
    // ZF slots take a lambda_P fraction of the block; MAT runs on the rest
    // and needs lambda_D^min(j, 1) of those slots with delayed feedback.
    const Rational mat_fraction = 1 - perfect;
    const Rational needed = lambda_d_min(j, 1) * mat_fraction;
    if (delayed < needed) {
        const Rational threshold = j >= 2 ? Rational(delayed / harmonic_sum(2, j)) : Rational(1);
        throw PreconditionError("delayed-CSIT budget violated: need lambda_D >= " + to_string(needed) +
                                ", i.e. lambda_N <= " + to_string(threshold) + ", got lambda_N = " +
                                to_string(none));
    }
    const Rational per_mat_user = mat_fraction / harmonic_sum(1, j);
    RationalVector coords(users, perfect);
    for (std::size_t u : subset) {
        coords[u] = perfect + per_mat_user;
    }
    return coords;
}

RationalVector case_b_accounting(std::size_t users, std::size_t order, const Rational& perfect,
                                 const Rational& delayed, const Rational& none) {
    std::vector<std::size_t> subset(order);
    for (std::size_t i = 0; i < order; ++i) {
        subset[i] = i;
    }
    return case_b_accounting(users, subset, perfect, delayed, none);
}

bool TightnessReport::tight() const {
    return std::all_of(vertices.begin(), vertices.end(), [](const VertexVerdict& v) { return v.achievable; });
}

TightnessReport tightness_report(const HPolytope& outer, const std::vector<CornerPoint>& corners) {
    VertexSet hull{outer.dim(), {}};
    for (const auto& c : corners) {
        if (c.coords.size() != outer.dim()) {
            throw PreconditionError("corner '" + c.label + "' does not match the region dimension");
        }
        hull.points.push_back(c.coords);
    }
    TightnessReport report;
    for (const auto& v : enumerate_vertices(outer).points) {
        report.vertices.push_back({v, hull_contains(hull, v)});
    }
    return report;
}

}  // namespace csitdof

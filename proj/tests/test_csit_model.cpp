#include "csitdof/csit_model.hpp"
#include "csitdof/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace csitdof;
using testing::q;

namespace {

JointCsitDistribution joint(std::size_t users, std::initializer_list<std::pair<const char*, Rational>> entries) {
    std::map<StateTuple, Rational> mass;
    for (const auto& [state, p] : entries) {
        mass[parse_state_tuple(state)] = p;
    }
    return JointCsitDistribution(users, mass);
}

JointCsitDistribution pattern_joint(const std::vector<std::string>& columns) {
    return joint_from_pattern(CsitPattern::from_columns(columns));
}

}  // namespace

TEST_CASE("state parsing") {
    CHECK(parse_state_tuple("PDN") == StateTuple{CsitState::P, CsitState::D, CsitState::N});
    CHECK(to_string(parse_state_tuple("NPD")) == "NPD");
    CHECK_THROWS_AS(parse_state_tuple("PX"), ValidationError);
    const auto t = parse_state_template("P-N");
    REQUIRE(t.size() == 3);
    CHECK(t[0] == CsitState::P);
    CHECK_FALSE(t[1].has_value());
}

TEST_CASE("patterns validate their shape") {
    CHECK_THROWS_AS(CsitPattern::from_columns({"PN", "PNN"}), ValidationError);
    CHECK_THROWS_AS(CsitPattern::from_columns({}), ValidationError);
    const auto p = CsitPattern::from_columns({"PNN", "NPN"});
    CHECK(p.users() == 3);
    CHECK(p.slots() == 2);
    CHECK(p.at(1, 1) == CsitState::P);
}

TEST_CASE("joint distributions validate mass") {
    CHECK_THROWS_AS(joint(2, {{"PP", q(1, 2)}}), ValidationError);
    CHECK_THROWS_AS(joint(2, {{"PP", q(3, 2)}, {"NN", q(-1, 2)}}), ValidationError);
    CHECK_THROWS_AS(joint(2, {{"PPP", q(1)}}), ValidationError);
    const auto j = joint(2, {{"PP", q(1)}, {"NN", q(0)}});
    CHECK(j.mass().size() == 1);
    CHECK(j.probability(parse_state_tuple("NN")) == 0);
}

TEST_CASE("joint from pattern") {
    const auto fig3 = pattern_joint({"PNN", "NPN", "NNP"});
    CHECK(fig3.mass().size() == 3);
    for (const auto& [tuple, p] : fig3.mass()) {
        CHECK(p == q(1, 3));
    }
    CHECK(pattern_joint({"P"}).probability(parse_state_tuple("P")) == 1);
    const auto fig4 = pattern_joint({"PNNN", "NPNN", "NNPN", "NNNP"});
    for (const auto& [tuple, p] : fig4.mass()) {
        CHECK(p == q(1, 4));
    }
    CHECK(pattern_joint({"PN", "PN", "NN"}).probability(parse_state_tuple("PN")) == q(2, 3));
}

TEST_CASE("marginals") {
    const auto m3 = marginals_from_joint(pattern_joint({"PNN", "NPN", "NNP"}));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(m3.user(i).perfect == q(1, 3));
        CHECK(m3.user(i).none == q(2, 3));
        CHECK(m3.user(i).delayed == 0);
    }
    const auto m1 = marginals_from_joint(pattern_joint({"DPP", "NDP", "PNP"}));
    CHECK(m1.user(2).perfect == 1);
    CHECK(m1.user(0).perfect == q(1, 3));
    CHECK(m1.user(0).delayed == q(1, 3));
    CHECK(m1.user(0).none == q(1, 3));
    const auto mpp = marginals_from_joint(joint(2, {{"PP", q(1)}}));
    CHECK(mpp.user(0).perfect == 1);
    CHECK(mpp.user(1).perfect == 1);
    CHECK_THROWS_AS(Marginals({{q(1, 2), q(1, 2), q(1, 2)}}), ValidationError);
}

TEST_CASE("wildcard probabilities") {
    const auto fig3 = pattern_joint({"PNN", "NPN", "NNP"});
    CHECK(wildcard_prob(fig3, parse_state_template("PP-")) == 0);
    CHECK(wildcard_prob(fig3, parse_state_template("---")) == 1);
    const auto j = joint(3, {{"PPP", q(1, 2)}, {"PPN", q(1, 4)}, {"NNN", q(1, 4)}});
    CHECK(wildcard_prob(j, parse_state_template("PP-")) == q(3, 4));
    CHECK(wildcard_prob(j, parse_state_template("PPN")) == q(1, 4));
}

TEST_CASE("pairwise perfect probability") {
    const auto fig3 = pattern_joint({"PNN", "NPN", "NNP"});
    CHECK(pairwise_perfect(fig3, 0, 1) == 0);
    const auto j = joint(3, {{"PPN", q(1, 2)}, {"NPP", q(1, 2)}});
    CHECK(pairwise_perfect(j, 1, 2) == q(1, 2));
    CHECK(pairwise_perfect(j, 2, 1) == q(1, 2));
    CHECK(pairwise_perfect(j, 0, 1) == q(1, 2));
    CHECK_THROWS_AS(pairwise_perfect(j, 1, 1), PreconditionError);
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(marginals_from_joint(pattern_joint({"PPP", "DDD", "DDD"}))));
    CHECK_FALSE(is_symmetric(marginals_from_joint(pattern_joint({"DPP", "NDP", "PNP"}))));
    CHECK(is_symmetric(marginals_from_joint(pattern_joint({"D", "N"}))));
}

TEST_CASE("collapse delayed to perfect") {
    const auto c = collapse_delay_to_perfect(pattern_joint({"DPP", "NDP", "PNP"}));
    CHECK(c == joint(3, {{"PPP", q(1, 3)}, {"NPP", q(1, 3)}, {"PNP", q(1, 3)}}));
    CHECK(collapse_delay_to_perfect(pattern_joint({"DPP", "PDP", "NNP"})) ==
          joint(3, {{"PPP", q(2, 3)}, {"NNP", q(1, 3)}}));
    const auto pn = pattern_joint({"PNN", "NPN", "NNP"});
    CHECK(collapse_delay_to_perfect(pn) == pn);
    CHECK(collapse_delay_to_perfect(joint(2, {{"DD", q(1)}})) == joint(2, {{"PP", q(1)}}));
}

TEST_CASE("model properties over random joints") {
    testing::Gen gen(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t users = static_cast<std::size_t>(gen.integer(1, 4));
        const auto j = gen.joint(users, "PDN", static_cast<std::size_t>(gen.integer(1, 6)));
        const auto m = marginals_from_joint(j);
        StateTemplate any(users);
        CHECK(wildcard_prob(j, any) == 1);
        for (std::size_t i = 0; i < users; ++i) {
            CHECK(m.user(i).perfect + m.user(i).delayed + m.user(i).none == 1);
        }
        for (const auto& [tuple, p] : j.mass()) {
            StateTemplate t(tuple.begin(), tuple.end());
            CHECK(wildcard_prob(j, t) == p);
        }
        for (std::size_t a = 0; a < users; ++a) {
            for (std::size_t b = a + 1; b < users; ++b) {
                const Rational lab = pairwise_perfect(j, a, b);
                CHECK(lab == pairwise_perfect(j, b, a));
                CHECK(lab <= std::min(m.user(a).perfect, m.user(b).perfect));
            }
        }
        const auto c = collapse_delay_to_perfect(j);
        const auto mc = marginals_from_joint(c);
        CHECK(wildcard_prob(c, any) == 1);
        for (std::size_t i = 0; i < users; ++i) {
            CHECK(mc.user(i).perfect == m.user(i).perfect + m.user(i).delayed);
            CHECK(mc.user(i).delayed == 0);
        }
    }
}

TEST_CASE("pattern marginals are multiples of 1/T") {
    testing::Gen gen(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t users = static_cast<std::size_t>(gen.integer(1, 4));
        const std::size_t slots = static_cast<std::size_t>(gen.integer(1, 7));
        std::vector<std::string> cols;
        for (std::size_t t = 0; t < slots; ++t) {
            std::string col;
            for (std::size_t u = 0; u < users; ++u) {
                col += "PDN"[gen.integer(0, 2)];
            }
            cols.push_back(col);
        }
        const auto m = marginals_from_joint(pattern_joint(cols));
        for (std::size_t i = 0; i < users; ++i) {
            for (const Rational* v : {&m.user(i).perfect, &m.user(i).delayed, &m.user(i).none}) {
                const Rational scaled = *v * Rational(static_cast<long>(slots));
                CHECK(scaled.get_den() == 1);
            }
        }
    }
}

#include "csitdof/errors.hpp"
#include "csitdof/scenario.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <string>

using namespace csitdof;
using testing::q;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("pattern scenario") {
    const auto s = parse_scenario(R"({"kind": "miso", "K": 3, "M": 3, "pattern": ["PNN", "NPN", "NNP"]})");
    CHECK(s.kind == ChannelKind::Miso);
    CHECK(s.users == 3);
    CHECK(s.tx_antennas == 3);
    CHECK(s.antennas == std::vector<std::size_t>{1, 1, 1});
    REQUIRE(s.pattern);
    CHECK(s.pattern->slots() == 3);
    CHECK(s.joint.probability(parse_state_tuple("NPN")) == q(1, 3));
}

TEST_CASE("joint scenario") {
    const auto s = parse_scenario(R"({"kind": "mimo2", "K": 2, "M": 5, "antennas": [3, 2],
        "joint": [{"state": "PN", "prob": "1/6"}, {"state": "PP", "prob": "1/6"},
                  {"state": "NP", "prob": "1/3"}, {"state": "NN", "prob": "1/3"}]})");
    CHECK(s.kind == ChannelKind::Mimo2);
    CHECK(s.antennas == std::vector<std::size_t>{3, 2});
    CHECK_FALSE(s.pattern);
    CHECK(s.joint.probability(parse_state_tuple("NP")) == q(1, 3));
    const auto integer = parse_scenario(R"({"kind": "miso", "K": 1, "M": 1, "joint": [{"state": "D", "prob": 1}]})");
    CHECK(integer.joint.probability(parse_state_tuple("D")) == 1);
}

TEST_CASE("validation errors name the field") {
    CHECK(error_of("{").find("not valid JSON") != std::string::npos);
    CHECK(error_of(R"({"kind": "siso", "K": 1, "M": 1, "pattern": ["P"]})").find("'kind'") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 0, "M": 1, "pattern": ["P"]})").find("'K'") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 2, "pattern": ["PP"]})").find("'M'") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 2, "M": 1, "pattern": ["PP"]})").find("'M'") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 2, "M": 2})").find("exactly one") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 2, "M": 2, "pattern": ["PP"], "joint": []})").find("exactly one") !=
          std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 2, "M": 2, "pattern": ["PPN"]})").find("'pattern[0]'") !=
          std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 2, "M": 2, "pattern": ["PX"]})").find("'pattern[0]'") !=
          std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 1, "M": 1, "joint": [{"state": "P", "prob": "1/2"}]})")
              .find("sum") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 1, "M": 1, "joint": [{"state": "P", "prob": "x"}]})")
              .find("'joint[0].prob'") != std::string::npos);
    CHECK(error_of(R"({"kind": "miso", "K": 1, "M": 1, "joint": [{"state": "P", "prob": "1/2"},
                                                                 {"state": "P", "prob": "1/2"}]})") != "");
    CHECK(error_of(R"({"kind": "mimo2", "K": 3, "M": 5, "antennas": [3, 2], "pattern": ["PNN"]})")
              .find("'K'") != std::string::npos);
    CHECK(error_of(R"({"kind": "mimo2", "K": 2, "M": 4, "antennas": [3, 2], "pattern": ["PN"]})")
              .find("'M'") != std::string::npos);
    CHECK(error_of(R"({"kind": "mimo2", "K": 2, "M": 5, "pattern": ["PN"]})").find("'antennas'") !=
          std::string::npos);
    CHECK(error_of(R"({"kind": "mimo2", "K": 2, "M": 5, "antennas": [3, 2], "pattern": ["DN"]})") != "");
}

TEST_CASE("golden scenario files load") {
    for (const char* name : {"fig1", "fig2", "fig3", "fig4", "ppp_nnn_nnn", "k2_delayed", "fig9_mimo"}) {
        CAPTURE(name);
        CHECK_NOTHROW(load_scenario(std::string(CSITDOF_SCENARIO_DIR) + "/" + name + ".json"));
    }
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario.json"), ValidationError);
}

#include "csitdof/errors.hpp"
#include "csitdof/schedule_io.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace csitdof;
using testing::q;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_schedule(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse a schedule file") {
    const Schedule s = parse_schedule(R"({"users": 2, "tx_antennas": 2, "antennas": [1, 1],
        "slots": [
          {"csit": "DD", "streams": [{"owner": 1, "fresh": 2}]},
          {"csit": "DD", "streams": [{"owner": 2, "fresh": 2, "note": "second"}]},
          {"csit": "DD", "streams": [{"owner": 1, "overheard": [{"slot": 1, "user": 2, "antenna": 1},
                                                                {"slot": 2, "user": 1, "antenna": 1}]}]},
          {"csit": "PD", "streams": [{"owner": 2, "retransmit": [3], "precode": {"orthogonal_to": [1]}}]}]})");
    CHECK(s.users == 2);
    REQUIRE(s.slots.size() == 4);
    CHECK(std::get<FreshSymbols>(s.slots[0].streams[0].payload).count == 2);
    CHECK(s.slots[1].streams[0].owner == 1);
    CHECK(s.slots[1].streams[0].note == "second");
    const auto& obs = std::get<ResendObservations>(s.slots[2].streams[0].payload);
    CHECK(obs.terms == std::vector<ObservationRef>{{0, 1, 0}, {1, 0, 0}});
    CHECK(std::get<ResendSymbols>(s.slots[3].streams[0].payload).ids == std::vector<SymbolId>{2});
    CHECK(s.slots[3].streams[0].orthogonal_to == std::vector<std::size_t>{0});
    CHECK(validate_schedule(s).empty());
}

TEST_CASE("defaults") {
    const Schedule s = parse_schedule(R"({"tx_antennas": 3, "slots": [{"csit": "PNN", "streams": []}]})");
    CHECK(s.users == 3);
    CHECK(s.rx_antennas == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("round trip") {
    for (const Schedule& s :
         {build_mat2_schedule(2), build_zfbf_case_a_schedule(3, q(2, 3), 2),
          build_mimo_schedule(MimoScenario(3, 2,
                                           JointCsitDistribution(2, {{parse_state_tuple("PN"), q(1, 6)},
                                                                     {parse_state_tuple("PP"), q(1, 6)},
                                                                     {parse_state_tuple("NP"), q(1, 3)},
                                                                     {parse_state_tuple("NN"), q(1, 3)}})),
                              "B3", 12)}) {
        CHECK(parse_schedule(schedule_to_json(s)) == s);
    }
}

TEST_CASE("field errors") {
    CHECK(error_of("[").find("not valid JSON") != std::string::npos);
    CHECK(error_of(R"({"tx_antennas": 2})").find("'schedule.slots'") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "slots": []})").find("'tx_antennas'") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2, "slots": [{"csit": "P", "streams": []}]})")
              .find("'slots[0].csit'") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2, "slots": [{"csit": "PX", "streams": []}]})")
              .find("'slots[0].csit'") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2, "slots": [{"csit": "PP", "streams": [{"fresh": 1}]}]})")
              .find("owner") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2,
                       "slots": [{"csit": "PP", "streams": [{"owner": 3, "fresh": 1}]}]})")
              .find("'slots[0].streams[0].owner'") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2,
                       "slots": [{"csit": "PP", "streams": [{"owner": 1, "fresh": 1, "retransmit": [1]}]}]})")
              .find("exactly one") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2,
                       "slots": [{"csit": "PP", "streams": [{"owner": 1, "overheard": [{"slot": 1}]}]}]})")
              .find("overheard[0]") != std::string::npos);
    CHECK(error_of(R"({"users": 2, "tx_antennas": 2, "antennas": [1],
                       "slots": []})").find("'antennas'") != std::string::npos);
    CHECK_THROWS_AS(load_schedule("/nonexistent.json"), ValidationError);
}

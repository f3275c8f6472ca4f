#include "csitdof/cli.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = csitdof::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scenario(const std::string& name) {
    return std::string(CSITDOF_SCENARIO_DIR) + "/" + name + ".json";
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("bounds") {
    const Run r = run({"bounds", "--scenario", scenario("fig3"), "--theorem", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "tag,c_1,c_2,c_3,rhs\n"
          "\"T2:{1,2,3}/w=1\",1,2,2,8/3\n"
          "\"T2:{1,2,3}/w=2\",2,1,2,8/3\n"
          "\"T2:{1,2,3}/w=3\",2,2,1,8/3\n");
    CHECK(r.err.empty());

    const Run mimo = run({"bounds", "--scenario", scenario("fig9_mimo"), "--theorem", "3"});
    CHECK(mimo.code == 0);
    CHECK(mimo.out.find("T3:antenna-weighted,1/3,1/2,3/2\n") != std::string::npos);
    CHECK(mimo.out.find("T3:sum,1,1,11/3\n") != std::string::npos);
    CHECK(mimo.out.find("cap:d1,1,0,3\n") != std::string::npos);
    CHECK(mimo.out.find("cap:d2,0,1,2\n") != std::string::npos);

    CHECK(run({"bounds", "--scenario", scenario("fig3"), "--theorem", "3"}).code == 2);
    CHECK(run({"bounds", "--scenario", scenario("fig9_mimo"), "--theorem", "1"}).code == 2);

    const Run dec = run({"bounds", "--scenario", scenario("fig3"), "--theorem", "2", "--decimals", "3"});
    CHECK(dec.out.find("tag,c_1,c_2,c_3,rhs,display\n") == 0);
    CHECK(dec.out.find(",8/3,2.667\n") != std::string::npos);
}

TEST_CASE("asymmetric four-user joint bounds are unsupported") {
    const auto path = temp_file("csitdof_asym4.json",
                                R"({"kind": "miso", "K": 4, "M": 4, "pattern": ["PNNN", "PPNN", "NNPN", "NNNP"]})");
    const Run r = run({"bounds", "--scenario", path.string(), "--theorem", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("symmetric") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("vertices and sum DoF") {
    const Run k2 = run({"vertices", "--scenario", scenario("k2_delayed")});
    CHECK(k2.code == 0);
    CHECK(k2.out == "v_1,v_2\n0,0\n0,1\n2/3,2/3\n1,0\n");

    CHECK(run({"sumdof", "--scenario", scenario("fig3")}).out ==
          "weighted_sum,decimal,d_1,d_2,d_3\n8/5,1.600000,8/15,8/15,8/15\n");
    CHECK(run({"sumdof", "--scenario", scenario("ppp_nnn_nnn")}).out.find("\n5/3,1.666667,") != std::string::npos);
    CHECK(run({"sumdof", "--scenario", scenario("k2_delayed")}).out.find("\n4/3,1.333333,") != std::string::npos);
    CHECK(run({"sumdof", "--scenario", scenario("k2_delayed"), "--weights", "1,0"}).out.find("\n1,") !=
          std::string::npos);
    CHECK(run({"sumdof", "--scenario", scenario("k2_delayed"), "--weights", "1"}).code == 1);
}

TEST_CASE("corners and tightness") {
    const auto sym = temp_file("csitdof_caseA.json", R"({"kind": "miso", "K": 3, "M": 3, "pattern": ["PPP", "NNN", "NNN"]})");
    const Run a = run({"tightness", "--scenario", sym.string()});
    CHECK(a.code == 0);
    CHECK(a.out.find("caseA:1,1,1/3,1/3\ncaseA:2,1/3,1,1/3\ncaseA:3,1/3,1/3,1\n") != std::string::npos);
    CHECK(a.out.find("verdict,tight\n") != std::string::npos);

    const Run b = run({"tightness", "--scenario", scenario("fig2")});
    CHECK(b.code == 0);
    CHECK(b.out.find("\"caseB:{1,2,3}\",23/33,23/33,23/33\n") != std::string::npos);
    CHECK(b.out.find("verdict,tight\n") != std::string::npos);
    const Run bc = run({"corners", "--scenario", scenario("fig2")});
    CHECK(std::count(bc.out.begin(), bc.out.end(), '\n') == 8);

    const Run fig3 = run({"corners", "--scenario", scenario("fig3")});
    CHECK(fig3.code == 2);
    CHECK(fig3.err.find("no achievability scheme") != std::string::npos);
    CHECK(fig3.out.empty());
    CHECK(run({"tightness", "--scenario", scenario("fig1")}).code == 2);

    const Run mimo = run({"corners", "--scenario", scenario("fig9_mimo")});
    CHECK(mimo.out == "label,d_1,d_2\nmimo:B1,3,2/3\nmimo:B2,3/2,2\nmimo:B3,2,5/3\n");
}

TEST_CASE("simulate") {
    const Run b3 = run({"simulate", "--scenario", scenario("fig9_mimo"), "--scheme", "mimo:B3", "--n", "12",
                        "--repeats", "3"});
    CHECK(b3.code == 0);
    CHECK(b3.out == "user,intended,decodable,dof\n1,24,24,2\n2,20,20,5/3\n");

    const Run mat = run({"simulate", "--scenario", scenario("k2_delayed"), "--scheme", "mat2"});
    CHECK(mat.out == "user,intended,decodable,dof\n1,2,2,2/3\n2,2,2,2/3\n");

    const auto sym = temp_file("csitdof_zf.json", R"({"kind": "miso", "K": 3, "M": 3, "pattern": ["PPP", "NNN", "NNN"]})");
    const Run zf = run({"simulate", "--scenario", sym.string(), "--scheme", "zf:1"});
    CHECK(zf.out == "user,intended,decodable,dof\n1,3,3,1\n2,1,1,1/3\n3,1,1,1/3\n");

    CHECK(run({"simulate", "--scenario", scenario("fig9_mimo"), "--scheme", "mimo:B3", "--n", "7"}).code == 2);
    CHECK(run({"simulate", "--scenario", scenario("fig9_mimo"), "--scheme", "mimo:A1"}).code == 2);
    CHECK(run({"simulate", "--scenario", scenario("fig3"), "--scheme", "zf:1"}).code == 2);
    CHECK(run({"simulate", "--scenario", scenario("fig3"), "--scheme", "mat2"}).code == 2);
    CHECK(run({"simulate", "--scenario", scenario("fig3"), "--scheme", "bogus"}).code == 1);
}

TEST_CASE("schedule files") {
    const auto bad = temp_file("csitdof_bad_schedule.json", R"({"users": 2, "tx_antennas": 2,
        "slots": [{"csit": "PN", "streams": [{"owner": 1, "fresh": 1, "precode": {"orthogonal_to": [2]}}]}]})");
    const Run r = run({"simulate", "--scheme", "file:" + bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("slot 1") != std::string::npos);
    CHECK(r.err.find("perfect CSIT") != std::string::npos);

    const Run dump = run({"schedule", "--scenario", scenario("k2_delayed"), "--scheme", "mat2"});
    CHECK(dump.code == 0);
    const auto path = temp_file("csitdof_mat2.json", dump.out);
    const Run again = run({"simulate", "--scenario", scenario("k2_delayed"), "--scheme", "file:" + path.string()});
    CHECK(again.out == "user,intended,decodable,dof\n1,2,2,2/3\n2,2,2,2/3\n");

    CHECK(run({"simulate", "--scheme", "file:/nonexistent.json"}).code == 1);
}

TEST_CASE("exit codes and output routing") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"bounds"}).code == 1);
    CHECK(run({"bounds", "--scenario", "/nonexistent.json"}).code == 1);
    CHECK(run({"bounds", "--scenario", scenario("fig3"), "--theorem", "5"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    const auto out = std::filesystem::temp_directory_path() / "csitdof_out.csv";
    std::filesystem::remove(out);
    const Run r = run({"sumdof", "--scenario", scenario("fig3"), "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "weighted_sum,decimal,d_1,d_2,d_3\n8/5,1.600000,8/15,8/15,8/15\n");
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"simulate", "--scenario", scenario("fig9_mimo"), "--scheme", "mimo:B2",
                                        "--seed", "42"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> v{"vertices", "--scenario", scenario("fig4")};
    CHECK(run(v).out == run(v).out);
}

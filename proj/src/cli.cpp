#include "csitdof/cli.hpp"

#include "csitdof/achievability.hpp"
#include "csitdof/bound_gen.hpp"
#include "csitdof/csv.hpp"
#include "csitdof/errors.hpp"
#include "csitdof/polytope.hpp"
#include "csitdof/scenario.hpp"
#include "csitdof/schedule_io.hpp"
#include "csitdof/scheme_sim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace csitdof {

namespace {

struct Options {
    std::string scenario;
    std::string theorem = "all";
    std::string weights;
    std::string scheme;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::size_t repeats = 1;
    std::string out;
    std::optional<int> decimals;
};

enum class Support { CaseA, CaseB, Mimo, None };

struct SupportVerdict {
    Support support;
    std::string reason;  // why the case is unsupported
};

SupportVerdict classify(const Scenario& sc) {
    if (sc.kind == ChannelKind::Mimo2) {
        return {Support::Mimo, ""};
    }
    const Marginals m = marginals_from_joint(sc.joint);
    if (!is_symmetric(m)) {
        return {Support::None, "marginals differ across users"};
    }
    const UserMarginal& u = m.user(0);
    const auto all_equal = [](const StateTuple& t) {
        return std::all_of(t.begin(), t.end(), [&](CsitState s) { return s == t.front(); });
    };
    if (sgn(u.delayed) == 0) {
        for (const auto& [tuple, p] : sc.joint.mass()) {
            if (!all_equal(tuple)) {
                return {Support::None, "state " + to_string(tuple) +
                                           " mixes perfect and missing CSIT across users; the zero-forcing "
                                           "scheme needs all-P or all-N slots"};
            }
        }
        return {Support::CaseA, ""};
    }
    for (const auto& [tuple, p] : sc.joint.mass()) {
        const bool has_p = std::find(tuple.begin(), tuple.end(), CsitState::P) != tuple.end();
        if (has_p && !all_equal(tuple)) {
            return {Support::None, "state " + to_string(tuple) +
                                       " mixes perfect CSIT with other states; zero forcing needs all-P slots"};
        }
    }
    const Rational threshold = case_b_none_threshold(sc.users, u.delayed);
    if (u.none > threshold) {
        return {Support::None, "lambda_N = " + to_string(u.none) + " exceeds lambda_D / sum_{j=2}^K 1/j = " +
                                   to_string(threshold)};
    }
    return {Support::CaseB, ""};
}

Scenario require_scenario(const Options& o) {
    if (o.scenario.empty()) {
        throw ValidationError("--scenario is required");
    }
    return load_scenario(o.scenario);
}

MimoScenario mimo_of(const Scenario& sc) {
    return MimoScenario(sc.antennas.at(0), sc.antennas.at(1), sc.joint);
}

BoundSet selected_bounds(const Scenario& sc, const std::string& theorem) {
    const bool mimo = sc.kind == ChannelKind::Mimo2;
    if (theorem == "3") {
        if (!mimo) {
            throw PreconditionError("theorem 3 needs a mimo2 scenario");
        }
        return theorem3_mimo(sc.antennas.at(0), sc.antennas.at(1), sc.joint);
    }
    if (theorem == "all" && mimo) {
        return theorem3_mimo(sc.antennas.at(0), sc.antennas.at(1), sc.joint);
    }
    if (mimo) {
        throw PreconditionError("theorem " + theorem + " needs a miso scenario");
    }
    if (theorem == "1") {
        return theorem1(marginals_from_joint(sc.joint));
    }
    if (theorem == "2") {
        return theorem2(sc.joint);
    }
    return theorem1(marginals_from_joint(sc.joint)).merged(theorem2(sc.joint));
}

RationalVector parse_weights(const std::string& text, std::size_t users) {
    if (text.empty()) {
        return RationalVector(users, 1);
    }
    RationalVector w;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            w.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ValidationError("--weights: " + std::string(e.what()));
        }
    }
    if (w.size() != users) {
        throw ValidationError("--weights lists " + std::to_string(w.size()) + " values, expected " +
                              std::to_string(users));
    }
    return w;
}

std::vector<CornerPoint> scenario_corners(const Scenario& sc) {
    const SupportVerdict v = classify(sc);
    const auto m = [&] { return marginals_from_joint(sc.joint).user(0); };
    switch (v.support) {
        case Support::Mimo:
            return mimo_corners(mimo_of(sc));
        case Support::CaseA:
            return case_a_corners(sc.users, m().perfect);
        case Support::CaseB:
            return case_b_corners(sc.users, m().perfect, m().delayed, m().none);
        case Support::None:
            break;
    }
    throw PreconditionError("no achievability scheme covers this scenario: " + v.reason);
}

HPolytope tightness_outer(const Scenario& sc, const std::string& theorem) {
    return HPolytope(selected_bounds(sc, theorem));
}

struct BuiltScheme {
    Schedule schedule;
    std::string description;
};

BuiltScheme build_scheme(const Options& o) {
    const std::string& scheme = o.scheme;
    if (scheme.rfind("file:", 0) == 0) {
        Schedule s = load_schedule(scheme.substr(5));
        if (!o.scenario.empty()) {
            const Scenario sc = load_scenario(o.scenario);
            if (sc.users != s.users || sc.tx_antennas != s.tx_antennas || sc.antennas != s.rx_antennas) {
                throw PreconditionError("schedule antenna/user counts do not match the scenario");
            }
        }
        return {std::move(s), "schedule file " + scheme.substr(5)};
    }
    const Scenario sc = require_scenario(o);
    if (scheme.rfind("zf:", 0) == 0) {
        const SupportVerdict v = classify(sc);
        if (v.support != Support::CaseA) {
            throw PreconditionError("zf schemes need symmetric CSIT without delayed states and all-P or all-N "
                                    "slots" +
                                    (v.reason.empty() ? std::string() : ": " + v.reason));
        }
        std::size_t target = 0;
        try {
            target = std::stoul(scheme.substr(3));
        } catch (const std::exception&) {
            throw ValidationError("--scheme " + scheme + ": target user must be a number");
        }
        if (target < 1 || target > sc.users) {
            throw ValidationError("--scheme " + scheme + ": target user out of range");
        }
        const Rational perfect = marginals_from_joint(sc.joint).user(0).perfect;
        return {build_zfbf_case_a_schedule(sc.users, perfect, target - 1, o.n), "zero forcing"};
    }
    if (scheme == "mat2") {
        if (sc.kind != ChannelKind::Miso || sc.users != 2) {
            throw PreconditionError("mat2 needs a two-user miso scenario");
        }
        const Marginals m = marginals_from_joint(sc.joint);
        if (sgn(m.user(0).none) != 0 || sgn(m.user(1).none) != 0) {
            throw PreconditionError("mat2 needs delayed or perfect CSIT in every slot (lambda_N = 0)");
        }
        if (o.n % 3 != 0) {
            throw PreconditionError("mat2 runs in blocks of 3 slots; --n must be a multiple of 3");
        }
        return {build_mat2_schedule(o.n == 0 ? 1 : o.n / 3), "two-user MAT"};
    }
    if (scheme.rfind("mimo:", 0) == 0) {
        if (sc.kind != ChannelKind::Mimo2) {
            throw PreconditionError("mimo schemes need a mimo2 scenario");
        }
        const MimoScenario ms = mimo_of(sc);
        const std::string label = scheme.substr(5);
        const std::size_t n = o.n == 0 ? minimal_mimo_block(ms, label) : o.n;
        return {build_mimo_schedule(ms, label, n), "corner " + label};
    }
    throw ValidationError("--scheme must be zf:T, mat2, mimo:LABEL or file:PATH");
}

int simulate(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.repeats == 0) {
        throw ValidationError("--repeats must be at least 1");
    }
    const BuiltScheme built = build_scheme(o);
    std::optional<DecodeLedger> first;
    std::size_t redraws = 0;
    for (std::size_t r = 0; r < o.repeats; ++r) {
        const ChannelRealization channels = generate_channels(built.schedule, o.seed + r);
        redraws += channels.redraws;
        DecodeLedger ledger = simulate_decode(built.schedule, channels);
        if (!first) {
            first = std::move(ledger);
        } else if (!(ledger == *first)) {
            err << "decodable counts differ between seed " << o.seed << " and seed " << o.seed + r << "\n";
            return 3;
        }
    }
    out << ledger_csv(*first, o.decimals);
    err << built.description << ": " << built.schedule.slots.size() << " slots, " << o.repeats
        << (o.repeats == 1 ? " seed" : " seeds with identical counts");
    if (redraws > 0) {
        err << ", " << redraws << " rank-deficient channel draws replaced";
    }
    err << "\n";
    return 0;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
    if (command == "simulate") {
        return simulate(o, out, err);
    }
    if (command == "schedule") {
        out << schedule_to_json(build_scheme(o).schedule);
        return 0;
    }
    const Scenario sc = require_scenario(o);
    if (command == "bounds") {
        out << bounds_csv(selected_bounds(sc, o.theorem), o.decimals);
    } else if (command == "vertices") {
        out << vertices_csv(enumerate_vertices(HPolytope(selected_bounds(sc, o.theorem))), o.decimals);
    } else if (command == "sumdof") {
        const HPolytope region(selected_bounds(sc, o.theorem));
        out << sumdof_csv(max_weighted(region, parse_weights(o.weights, sc.users)), o.decimals);
    } else if (command == "corners") {
        out << corners_csv(scenario_corners(sc), o.decimals);
    } else if (command == "tightness") {
        const auto corners = scenario_corners(sc);
        const TightnessReport report = tightness_report(tightness_outer(sc, o.theorem), corners);
        out << corners_csv(corners, o.decimals) << "\n" << tightness_csv(report, o.decimals) << "\n"
            << "verdict," << (report.tight() ? "tight" : "gap") << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"DoF regions and transmission schemes for broadcast channels with alternating CSIT", "csitdof"};
    app.require_subcommand(1);
    Options o;

    const auto scenario_flag = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", o.scenario, "Scenario JSON file");
    };
    const auto theorem_flag = [&](CLI::App* cmd) {
        cmd->add_option("--theorem", o.theorem, "Bound family: 1, 2, 3 or all")
            ->check(CLI::IsMember({"1", "2", "3", "all"}));
    };
    const auto common = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "Write data to this file instead of stdout");
        cmd->add_option("--decimals", o.decimals, "Add a decimal display column")->check(CLI::Range(0, 30));
    };
    const auto scheme_flags = [&](CLI::App* cmd) {
        cmd->add_option("--scheme", o.scheme, "zf:T, mat2, mimo:LABEL or file:PATH")->required();
        cmd->add_option("--n", o.n, "Schedule length in slots (0: smallest valid)");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "Outer-bound inequalities as CSV");
    scenario_flag(bounds);
    theorem_flag(bounds);
    common(bounds);
    CLI::App* vertices = app.add_subcommand("vertices", "Vertices of the outer region");
    scenario_flag(vertices);
    theorem_flag(vertices);
    common(vertices);
    CLI::App* sumdof = app.add_subcommand("sumdof", "Maximum weighted sum DoF over the outer region");
    scenario_flag(sumdof);
    theorem_flag(sumdof);
    common(sumdof);
    sumdof->add_option("--weights", o.weights, "Comma-separated weights (default all ones)");
    CLI::App* corners = app.add_subcommand("corners", "Achievable corner points");
    scenario_flag(corners);
    common(corners);
    CLI::App* tightness = app.add_subcommand("tightness", "Check outer vertices against the achievable hull");
    scenario_flag(tightness);
    theorem_flag(tightness);
    common(tightness);
    CLI::App* sim = app.add_subcommand("simulate", "Simulate a schedule and print the decode ledger");
    scenario_flag(sim);
    scheme_flags(sim);
    common(sim);
    sim->add_option("--seed", o.seed, "Channel seed");
    sim->add_option("--repeats", o.repeats, "Number of consecutive seeds to check");
    CLI::App* sched = app.add_subcommand("schedule", "Print a generated schedule as JSON");
    scenario_flag(sched);
    scheme_flags(sched);
    sched->add_option("--out", o.out, "Write data to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    if (app.get_subcommands().front()->count("--help") > 0) {
        return 0;
    }

    std::ostringstream data;
    int code = 0;
    try {
        code = dispatch(command, o, data, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    if (code != 0) {
        return code;
    }
    if (o.out.empty()) {
        out << data.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << data.str())) {
            err << "error: cannot write " << o.out << "\n";
            return 3;
        }
    }
    return 0;
}

}  // namespace csitdof

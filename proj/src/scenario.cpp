#include "csitdof/scenario.hpp"

#include "csitdof/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace csitdof {

namespace {

using nlohmann::json;

std::size_t positive_int(const json& doc, const char* field) {
    if (!doc.contains(field)) {
        throw ValidationError(std::string("scenario: missing field '") + field + "'");
    }
    const json& v = doc.at(field);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ValidationError(std::string("scenario: field '") + field + "' must be a positive integer");
    }
    return v.get<std::size_t>();
}

Rational probability_field(const json& entry, std::size_t index) {
    const std::string where = "scenario: field 'joint[" + std::to_string(index) + "].prob'";
    if (!entry.contains("prob")) {
        throw ValidationError(where + " is missing");
    }
    const json& v = entry.at("prob");
    try {
        if (v.is_string()) {
            return parse_rational(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Rational(v.get<long>());
        }
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
    throw ValidationError(where + " must be a string \"p/q\" or an integer");
}

std::string tuple_field(const json& v, const std::string& where) {
    if (!v.is_string()) {
        throw ValidationError("scenario: field '" + where + "' must be a string over {P,D,N}");
    }
    return v.get<std::string>();
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("scenario: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("scenario: top level must be an object");
    }

    if (!doc.contains("kind") || !doc.at("kind").is_string()) {
        throw ValidationError("scenario: field 'kind' must be \"miso\" or \"mimo2\"");
    }
    const std::string kind_text = doc.at("kind").get<std::string>();
    ChannelKind kind;
    if (kind_text == "miso") {
        kind = ChannelKind::Miso;
    } else if (kind_text == "mimo2") {
        kind = ChannelKind::Mimo2;
    } else {
        throw ValidationError("scenario: field 'kind' must be \"miso\" or \"mimo2\", got \"" + kind_text + "\"");
    }

    const std::size_t users = positive_int(doc, "K");
    const std::size_t tx = positive_int(doc, "M");

    std::vector<std::size_t> antennas(users, 1);
    if (kind == ChannelKind::Mimo2) {
        if (users != 2) {
            throw ValidationError("scenario: field 'K' must be 2 for kind \"mimo2\"");
        }
        if (!doc.contains("antennas") || !doc.at("antennas").is_array() || doc.at("antennas").size() != 2) {
            throw ValidationError("scenario: field 'antennas' must be [N1, N2] for kind \"mimo2\"");
        }
        for (std::size_t k = 0; k < 2; ++k) {
            const json& a = doc.at("antennas")[k];
            if (!a.is_number_integer() || a.get<long long>() < 1) {
                throw ValidationError("scenario: field 'antennas[" + std::to_string(k) +
                                      "]' must be a positive integer");
            }
            antennas[k] = a.get<std::size_t>();
        }
        if (tx < antennas[0] + antennas[1]) {
            throw ValidationError("scenario: field 'M' must be at least N1 + N2");
        }
    } else {
        if (doc.contains("antennas")) {
            throw ValidationError("scenario: field 'antennas' is only valid for kind \"mimo2\"");
        }
        if (tx < users) {
            throw ValidationError("scenario: field 'M' must be at least K");
        }
    }

    const bool has_pattern = doc.contains("pattern");
    const bool has_joint = doc.contains("joint");
    if (has_pattern == has_joint) {
        throw ValidationError("scenario: exactly one of 'pattern' or 'joint' must be present");
    }

    std::optional<CsitPattern> pattern;
    std::map<StateTuple, Rational> mass;
    if (has_pattern) {
        const json& p = doc.at("pattern");
        if (!p.is_array() || p.empty()) {
            throw ValidationError("scenario: field 'pattern' must be a non-empty list of strings");
        }
        std::vector<StateTuple> columns;
        for (std::size_t t = 0; t < p.size(); ++t) {
            const std::string where = "pattern[" + std::to_string(t) + "]";
            const std::string text = tuple_field(p[t], where);
            if (text.size() != users) {
                throw ValidationError("scenario: field '" + where + "' must have " + std::to_string(users) +
                                      " characters");
            }
            try {
                columns.push_back(parse_state_tuple(text));
            } catch (const ValidationError& e) {
                throw ValidationError("scenario: field '" + where + "': " + e.what());
            }
        }
        pattern.emplace(users, std::move(columns));
    } else {
        const json& j = doc.at("joint");
        if (!j.is_array() || j.empty()) {
            throw ValidationError("scenario: field 'joint' must be a non-empty list");
        }
        for (std::size_t idx = 0; idx < j.size(); ++idx) {
            const json& entry = j[idx];
            const std::string where = "joint[" + std::to_string(idx) + "].state";
            if (!entry.is_object() || !entry.contains("state")) {
                throw ValidationError("scenario: field '" + where + "' is missing");
            }
            const std::string text = tuple_field(entry.at("state"), where);
            if (text.size() != users) {
                throw ValidationError("scenario: field '" + where + "' must have " + std::to_string(users) +
                                      " characters");
            }
            StateTuple tuple;
            try {
                tuple = parse_state_tuple(text);
            } catch (const ValidationError& e) {
                throw ValidationError("scenario: field '" + where + "': " + e.what());
            }
            if (mass.count(tuple) != 0) {
                throw ValidationError("scenario: field '" + where + "' repeats state " + text);
            }
            mass.emplace(std::move(tuple), probability_field(entry, idx));
        }
    }

    try {
        JointCsitDistribution joint = pattern ? joint_from_pattern(*pattern) : JointCsitDistribution(users, mass);
        if (kind == ChannelKind::Mimo2) {
            for (const auto& [tuple, p] : joint.mass()) {
                for (CsitState s : tuple) {
                    if (s == CsitState::D) {
                        throw ValidationError("kind \"mimo2\" admits only P and N states");
                    }
                }
            }
        }
        return Scenario{kind, users, tx, std::move(antennas), std::move(pattern), std::move(joint)};
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("scenario: field '") + (has_pattern ? "pattern" : "joint") +
                              "': " + e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("scenario: cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

}  // namespace csitdof

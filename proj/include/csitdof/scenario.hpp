#pragma once

#include "csitdof/csit_model.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace csitdof {

enum class ChannelKind { Miso, Mimo2 };

// A parsed scenario file:
//   {"kind": "miso", "K": 3, "M": 3, "pattern": ["PNN", "NPN", "NNP"]}
//   {"kind": "mimo2", "K": 2, "M": 5, "antennas": [3, 2],
//    "joint": [{"state": "PN", "prob": "1/6"}, ...]}
struct Scenario {
    ChannelKind kind = ChannelKind::Miso;
    std::size_t users = 0;
    std::size_t tx_antennas = 0;
    std::vector<std::size_t> antennas;  // per-user receive antennas; all 1 for MISO
    std::optional<CsitPattern> pattern;
    JointCsitDistribution joint;
};

// Throws ValidationError naming the offending field.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace csitdof

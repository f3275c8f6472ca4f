#pragma once

#include "csitdof/scheme_sim.hpp"

#include <filesystem>
#include <string>

namespace csitdof {

// Schedule files use 1-based users, antennas, slots and symbol ids:
//   {"users": 2, "tx_antennas": 2, "antennas": [1, 1],
//    "slots": [{"csit": "PN", "streams": [
//        {"owner": 1, "fresh": 3, "precode": {"orthogonal_to": [2]}},
//        {"owner": 2, "retransmit": [1, 2]},
//        {"owner": 1, "overheard": [{"slot": 1, "user": 2, "antenna": 1}]}]}]}
// "users" defaults to the length of the first CSIT string and "antennas" to
// all ones. Throws ValidationError naming the offending field.
Schedule parse_schedule(const std::string& json_text);
Schedule load_schedule(const std::filesystem::path& path);

std::string schedule_to_json(const Schedule& schedule);

}  // namespace csitdof

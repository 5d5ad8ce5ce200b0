#pragma once

#include <filesystem>
#include <string>

#include "dices/network.hpp"

namespace dices {

// Topology files are JSON:
//   { "switches": ["s1", ...],
//     "links": [ {"from": "s1", "to": "s2", "bandwidth_mbps": 100, "delay_ms": 25}, ... ] }
// Every entry in "links" is one directed link; an optional "id" overrides the
// derived "<from>-<to>" id.

Network parse_topology(const std::string& text);
Network load_topology(const std::filesystem::path& file);
std::string dump_topology(const Network& network);

}  // namespace dices

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "gmac/channel.hpp"
#include "gmac/optimizer.hpp"
#include "gmac/wiretap_sim.hpp"

// JSON (de)serialization of channels, schemes, configs and reports. Malformed
// documents raise InvalidInput; wrong shapes raise DimensionMismatch.
namespace gmac::io {

using Json = nlohmann::json;

std::string read_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& what);
Json load_json(const std::filesystem::path& path);

// {"x1","x2","y","y1","y2","p"} with p nested [x1][x2][y][y1][y2].
ChannelSpec channel_from_json(const Json& doc);
Json channel_to_json(const ChannelSpec& channel);
ChannelSpec load_channel(const std::filesystem::path& path);

// {"kind": "one-set" | "outer" | "two-set" | "degraded", <matrix fields as
// nested row arrays>}.
AnyScheme scheme_from_json(const Json& doc);
Json scheme_to_json(const AnyScheme& scheme);

// Keys mirror the field names; cardinalities as {"Q","U","V"}. Missing keys
// keep their defaults, unknown keys are rejected.
SearchConfig search_config_from_json(const Json& doc);
Json search_config_to_json(const SearchConfig& config);

struct SimConfig {
  // Path (resolved against the config file's directory) or inline document.
  Json channel;
  CodeDimensions dims;
  std::optional<InputDistribution> input;  // uniform per user when absent
  std::vector<std::uint64_t> seeds{1};
};

// {"channel", "n", "M0", "M1", "M2", "J1", "J2",
//  "input_dist": {"x1": [...], "x2": [...]}, "seeds": [...]}
SimConfig sim_config_from_json(const Json& doc);
ChannelSpec resolve_sim_channel(const SimConfig& config, const std::filesystem::path& base_dir);
InputDistribution input_or_uniform(const SimConfig& config, const ChannelSpec& channel);

Json sim_summary_to_json(const SimSummary& summary);
std::string sim_summary_csv(const SimSummary& summary);

}  // namespace gmac::io

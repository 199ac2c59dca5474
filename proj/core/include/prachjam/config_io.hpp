#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prachjam/campaign.hpp"

namespace prachjam {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Reading is strict: unknown fields and wrong types raise ConfigError with the
// dotted field path. `cell` and `prach` accept either a preset name ("full",
// "desk", "index98") or an object whose optional "preset" key names the base
// that the remaining fields override.
PrachConfig prach_from_json(const Json& j, const std::string& path = "prach");
CellConfig cell_from_json(const Json& j, const std::string& path = "cell");
JammerConfig jammer_from_json(const Json& j, const std::string& path = "spectrum");
ChannelConfig channel_from_json(const Json& j, const std::string& path = "channel");
DetectorConfig detector_from_json(const Json& j, const std::string& path = "detector");
CampaignConfig campaign_from_json(const Json& j);

Json to_json(const PrachConfig& c);
Json to_json(const CellConfig& c);
Json to_json(const JammerConfig& c);
Json to_json(const ChannelConfig& c);
Json to_json(const DetectorConfig& c);
Json to_json(const CampaignConfig& c);

// Parses a file; syntax errors become ConfigError carrying the position.
Json load_json_file(const std::filesystem::path& path);

// "a.b.c=value": value is taken as JSON when it parses, else as a string.
void apply_override(Json& doc, std::string_view assignment);

Json record_to_json(const IntervalRecord& r);
IntervalRecord record_from_json(const Json& j);

// records.jsonl: a header line {"record_type":"header", schema_version,
// seed_rule, config} followed by one IntervalRecord object per line.
void write_records(const std::filesystem::path& path, const CampaignConfig& cfg,
                   std::span<const IntervalRecord> records);
struct RecordFile {
  Json header;
  std::vector<IntervalRecord> records;
};
RecordFile read_records(const std::filesystem::path& path);

// Summary document; `timestamp` is the only field that varies between runs
// of the same input.
Json summary_to_json(const MetricsSummary& s, const CampaignConfig& cfg, const std::string& timestamp);

Json detection_to_json(double time_ms, const DetectionResult& d);

}  // namespace prachjam

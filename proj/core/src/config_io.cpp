#include "prachjam/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace prachjam {
namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

class ObjectReader {
 public:
  ObjectReader(const Json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError(path_, "expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  template <typename T>
  void get(const std::string& key, T& out) {
    seen_.insert(key);
    if (!obj_.contains(key)) return;
    const Json& v = obj_.at(key);
    const std::string where = join(path_, key);
    if constexpr (std::is_same_v<T, bool>) {
      if (!v.is_boolean()) throw ConfigError(where, "expected a boolean");
      out = v.get<bool>();
    } else if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) throw ConfigError(where, "expected an integer");
      if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_unsigned() || v.get<std::int64_t>() >= 0) out = v.get<T>();
        else throw ConfigError(where, "expected a non-negative integer");
      } else {
        out = v.get<T>();
      }
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!v.is_number()) throw ConfigError(where, "expected a number");
      out = v.get<T>();
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!v.is_string()) throw ConfigError(where, "expected a string");
      out = v.get<std::string>();
    } else if constexpr (std::is_same_v<T, std::vector<int>>) {
      if (!v.is_array()) throw ConfigError(where, "expected an array of integers");
      out.clear();
      for (const auto& e : v) {
        if (!e.is_number_integer()) throw ConfigError(where, "expected an array of integers");
        out.push_back(e.get<int>());
      }
    } else {
      static_assert(sizeof(T) == 0, "unsupported field type");
    }
  }

  const Json* sub(const std::string& key) {
    seen_.insert(key);
    return obj_.contains(key) ? &obj_.at(key) : nullptr;
  }

  void finish() const {
    for (const auto& [key, value] : obj_.items())
      if (!seen_.contains(key)) throw ConfigError(join(path_, key), "unknown field");
  }

 private:
  const Json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

PrachConfig prach_preset(const std::string& name, const std::string& path) {
  if (name == "index98") return prach_preset_index98();
  throw ConfigError(path, "unknown PRACH preset '" + name + "' (known: index98)");
}

CellConfig cell_preset(const std::string& name, const std::string& path) {
  if (name == "full") return cell_preset_full();
  if (name == "desk") return cell_preset_desk();
  throw ConfigError(path, "unknown cell preset '" + name + "' (known: full, desk)");
}

}  // namespace

PrachConfig prach_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return prach_preset(j.get<std::string>(), path);
  ObjectReader r(j, path);
  std::string preset = "index98";
  r.get("preset", preset);
  PrachConfig c = prach_preset(preset, join(path, "preset"));
  r.get("preamble_length", c.preamble_length);
  r.get("prach_prbs", c.prach_prbs);
  r.get("freq_occasions", c.freq_occasions);
  r.get("freq_offset", c.freq_offset);
  std::string format = "A2";
  r.get("preamble_format", format);
  if (format != "A2") throw ConfigError(join(path, "preamble_format"), "only format A2 is supported");
  r.get("sfn_modulus", c.sfn_modulus);
  r.get("sfn_remainder", c.sfn_remainder);
  r.get("subframe_number", c.subframe_number);
  r.get("slot_in_subframe", c.slot_in_subframe);
  r.get("start_symbol", c.start_symbol);
  r.get("slots_per_subframe_with_prach", c.slots_per_subframe_with_prach);
  r.get("occasions_per_slot", c.occasions_per_slot);
  r.get("duration_symbols", c.duration_symbols);
  r.get("prach_subframes_per_frame", c.prach_subframes_per_frame);
  r.finish();
  return c;
}

CellConfig cell_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return cell_preset(j.get<std::string>(), path);
  ObjectReader r(j, path);
  std::string preset = "full";
  r.get("preset", preset);
  CellConfig c = cell_preset(preset, join(path, "preset"));
  r.get("numerology", c.numerology);
  r.get("cell_bandwidth", c.cell_bandwidth);
  r.get("n_prb", c.n_prb);
  r.get("dft_size", c.dft_size);
  r.get("sample_rate", c.sample_rate);
  r.get("prach_root_indices", c.prach_root_indices);
  r.get("shift_step", c.shift_step);
  r.get("cp_length", c.cp_length);
  r.finish();
  return c;
}

JammerConfig jammer_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  JammerConfig c;
  std::string kind = std::string(to_string(c.kind));
  r.get("kind", kind);
  try {
    c.kind = jammer_kind_from_string(kind);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(join(path, "kind"), e.what());
  }
  r.get("snr_db", c.snr_db);
  r.get("seed", c.seed);
  r.get("enabled", c.enabled);
  r.get("s1_literal", c.s1_literal);
  r.finish();
  return c;
}

ChannelConfig channel_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  ChannelConfig c;
  r.get("noise_sigma", c.noise_sigma);
  r.get("ue_gain", c.ue_gain);
  r.get("jammer_gain", c.jammer_gain);
  r.get("ue_delay_samples", c.ue_delay_samples);
  r.finish();
  return c;
}

DetectorConfig detector_from_json(const Json& j, const std::string& path) {
  ObjectReader r(j, path);
  DetectorConfig c;
  r.get("threshold_factor", c.threshold_factor);
  r.get("shift_step", c.shift_step);
  r.get("roots", c.roots);
  r.finish();
  return c;
}

CampaignConfig campaign_from_json(const Json& j) {
  ObjectReader r(j, "");
  CampaignConfig c;
  r.get("n_intervals", c.n_intervals);
  r.get("interval_duration", c.interval_duration);
  r.get("jammer_lead", c.jammer_lead);
  r.get("jammer_lag", c.jammer_lag);
  r.get("base_seed", c.base_seed);
  r.get("ue_amplitude", c.ue_amplitude);
  if (const Json* snr = r.sub("ue_bin_snr_db"); snr && !snr->is_null()) {
    if (!snr->is_number()) throw ConfigError("ue_bin_snr_db", "expected a number or null");
    c.ue_bin_snr_db = snr->get<double>();
  }
  r.get("ue_startup_delay", c.ue_startup_delay);
  r.get("retry_period_ms", c.retry_period_ms);
  r.get("rar_window_ms", c.rar_window_ms);
  r.get("invalid_probability", c.invalid_probability);
  r.get("simulate_idle_occasions", c.simulate_idle_occasions);
  if (const Json* v = r.sub("spectrum")) c.spectrum = jammer_from_json(*v);
  if (const Json* v = r.sub("channel")) c.channel = channel_from_json(*v);
  if (const Json* v = r.sub("detector")) c.detector = detector_from_json(*v);
  if (const Json* v = r.sub("cell")) c.cell = cell_from_json(*v);
  if (const Json* v = r.sub("prach")) c.prach = prach_from_json(*v);
  r.finish();
  return c;
}

Json to_json(const PrachConfig& c) {
  return {{"preamble_length", c.preamble_length},
          {"prach_prbs", c.prach_prbs},
          {"freq_occasions", c.freq_occasions},
          {"freq_offset", c.freq_offset},
          {"preamble_format", "A2"},
          {"sfn_modulus", c.sfn_modulus},
          {"sfn_remainder", c.sfn_remainder},
          {"subframe_number", c.subframe_number},
          {"slot_in_subframe", c.slot_in_subframe},
          {"start_symbol", c.start_symbol},
          {"slots_per_subframe_with_prach", c.slots_per_subframe_with_prach},
          {"occasions_per_slot", c.occasions_per_slot},
          {"duration_symbols", c.duration_symbols},
          {"prach_subframes_per_frame", c.prach_subframes_per_frame}};
}

Json to_json(const CellConfig& c) {
  return {{"numerology", c.numerology},
          {"cell_bandwidth", c.cell_bandwidth},
          {"n_prb", c.n_prb},
          {"dft_size", c.dft_size},
          {"sample_rate", c.sample_rate},
          {"prach_root_indices", c.prach_root_indices},
          {"shift_step", c.shift_step},
          {"cp_length", c.cp_length}};
}

Json to_json(const JammerConfig& c) {
  return {{"kind", std::string(to_string(c.kind))},
          {"snr_db", c.snr_db},
          {"seed", c.seed},
          {"enabled", c.enabled},
          {"s1_literal", c.s1_literal}};
}

Json to_json(const ChannelConfig& c) {
  return {{"noise_sigma", c.noise_sigma},
          {"ue_gain", c.ue_gain},
          {"jammer_gain", c.jammer_gain},
          {"ue_delay_samples", c.ue_delay_samples}};
}

Json to_json(const DetectorConfig& c) {
  return {{"threshold_factor", c.threshold_factor}, {"shift_step", c.shift_step}, {"roots", c.roots}};
}

Json to_json(const CampaignConfig& c) {
  return {{"n_intervals", c.n_intervals},
          {"interval_duration", c.interval_duration},
          {"jammer_lead", c.jammer_lead},
          {"jammer_lag", c.jammer_lag},
          {"base_seed", c.base_seed},
          {"ue_amplitude", c.ue_amplitude},
          {"ue_bin_snr_db", c.ue_bin_snr_db ? Json(*c.ue_bin_snr_db) : Json(nullptr)},
          {"ue_startup_delay", c.ue_startup_delay},
          {"retry_period_ms", c.retry_period_ms},
          {"rar_window_ms", c.rar_window_ms},
          {"invalid_probability", c.invalid_probability},
          {"simulate_idle_occasions", c.simulate_idle_occasions},
          {"spectrum", to_json(c.spectrum)},
          {"channel", to_json(c.channel)},
          {"detector", to_json(c.detector)},
          {"cell", to_json(c.cell)},
          {"prach", to_json(c.prach)}};
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("", path.string() + ": " + e.what());
  }
}

void apply_override(Json& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw ConfigError(std::string(assignment), "override must look like key=value");
  const std::string key(assignment.substr(0, eq));
  const std::string raw(assignment.substr(eq + 1));

  Json value = Json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;

  Json* node = &doc;
  std::string path;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw ConfigError(key, "empty path component in override");
    path = join(path, part);
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    Json& child = (*node)[part];
    // A preset name becomes an object based on that preset.
    if (child.is_string()) child = Json{{"preset", child.get<std::string>()}};
    if (child.is_null()) child = Json::object();
    if (!child.is_object()) throw ConfigError(path, "cannot descend into a non-object value");
    node = &child;
    start = dot + 1;
  }
}

Json record_to_json(const IntervalRecord& r) {
  return {{"index", r.index},
          {"valid", r.valid},
          {"preambles_sent", r.preambles_sent},
          {"preambles_detected", r.preambles_detected},
          {"ra_succeeded", r.ra_succeeded},
          {"time_to_success", r.time_to_success ? Json(*r.time_to_success) : Json(nullptr)},
          {"seed", r.seed}};
}

IntervalRecord record_from_json(const Json& j) {
  ObjectReader rd(j, "record");
  IntervalRecord r;
  rd.get("index", r.index);
  rd.get("valid", r.valid);
  rd.get("preambles_sent", r.preambles_sent);
  rd.get("preambles_detected", r.preambles_detected);
  rd.get("ra_succeeded", r.ra_succeeded);
  if (const Json* t = rd.sub("time_to_success"); t && !t->is_null()) {
    if (!t->is_number()) throw ConfigError("record.time_to_success", "expected a number or null");
    r.time_to_success = t->get<double>();
  }
  rd.get("seed", r.seed);
  rd.finish();
  if (r.preambles_detected > r.preambles_sent)
    throw ConfigError("record.preambles_detected", "exceeds preambles_sent in record " + std::to_string(r.index));
  if (r.ra_succeeded && r.preambles_detected < 1)
    throw ConfigError("record.ra_succeeded", "success without a detected preamble in record " + std::to_string(r.index));
  return r;
}

void write_records(const std::filesystem::path& path, const CampaignConfig& cfg,
                   std::span<const IntervalRecord> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  const Json header{{"record_type", "header"},
                    {"schema_version", kSchemaVersion},
                    {"seed_rule", std::string(kSeedRule)},
                    {"config", to_json(cfg)}};
  out << header.dump() << '\n';
  for (const auto& r : records) out << record_to_json(r).dump() << '\n';
}

RecordFile read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open records file " + path.string());
  RecordFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw ConfigError("", path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (j.is_object() && j.value("record_type", "") == "header") {
      file.header = std::move(j);
      continue;
    }
    try {
      file.records.push_back(record_from_json(j));
    } catch (const ConfigError& e) {
      throw ConfigError(e.field(), path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return file;
}

Json summary_to_json(const MetricsSummary& s, const CampaignConfig& cfg, const std::string& timestamp) {
  const auto rational = [](const Rational& r) {
    return Json{{"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
  };
  const OccupancyBreakdown occ = occupancy_breakdown(cfg.prach, cfg.cell);
  const JammerBudget budget = jammer_resource_budget(cfg.prach, cfg.cell);
  return {{"schema_version", kSchemaVersion},
          {"seed_rule", std::string(kSeedRule)},
          {"timestamp", timestamp},
          {"n_i", s.n_i},
          {"n_ra_s", s.n_ra_s},
          {"n_ra_u", s.n_ra_u},
          {"n_e", s.n_e},
          {"n_p_j", s.n_p_j},
          {"mean_preambles_per_interval", rational(s.mean_preambles_per_interval)},
          {"mean_preambles_sent_per_interval", rational(s.mean_preambles_sent_per_interval)},
          {"e_p_j", rational(s.e_p_j)},
          {"e_p_j_ppm", s.e_p_j_ppm()},
          {"e_s", rational(s.e_s)},
          {"occupancy",
           {{"period_factor", occ.period_factor},
            {"temporal_factor", occ.temporal_factor},
            {"bandwidth_factor", occ.bandwidth_factor},
            {"ratio", occ.ratio}}},
          {"jammer_budget",
           {{"bandwidth_hz", budget.bandwidth_hz},
            {"duty_period_ms", budget.duty_period_ms},
            {"active_span_per_period_ms", budget.active_span_per_period_ms}}},
          {"cp_length", cfg.cell.effective_cp_length()}};
}

Json detection_to_json(double time_ms, const DetectionResult& d) {
  Json dets = Json::array();
  for (const auto& det : d.detected)
    dets.push_back({{"root", det.signature.root},
                    {"signature", det.signature.index},
                    {"peak_metric", det.peak_metric},
                    {"lag", det.lag}});
  return {{"time_ms", time_ms},
          {"sfn", d.occasion.sfn},
          {"slot", d.occasion.slot},
          {"occasion_index", d.occasion.occasion_index},
          {"detections", std::move(dets)},
          {"noise_floor", d.noise_floor}};
}

}  // namespace prachjam

#include "prachjam/cli.hpp"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "prachjam/campaign.hpp"
#include "prachjam/config_io.hpp"
#include "prachjam/iq_io.hpp"
#include "prachjam/zc.hpp"

namespace prachjam::cli {
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> sets;
  unsigned threads = 0;

  // zc
  int root = 1;
  int length = 139;
  int shift = 0;
  int correlate_root = 0;
  bool normalize = true;

  // simulate
  int trace_interval = -1;
  int dump_iq = 0;

  // metrics
  std::string records_path;

  // calibrate
  double far = 1e-3;
  int trials = 100000;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CampaignConfig load_config(const Options& o) {
  Json doc = o.config_path.empty() ? Json::object() : load_json_file(o.config_path);
  for (const auto& s : o.sets) apply_override(doc, s);
  CampaignConfig cfg = campaign_from_json(doc);
  validate(cfg);
  return cfg;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  return f;
}

void write_csv(std::ostream& os, std::span<const Complex> values, double scale) {
  os << "index,re,im,magnitude\n" << std::setprecision(12);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Complex v = values[k] / scale;
    os << k << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v) << '\n';
  }
}

ZcSequence checked_zc(int root, int length, const char* field) {
  try {
    return generate_zc(root, length);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
}

int cmd_zc(const Options& o, std::ostream& out) {
  if (o.shift < 0 || o.shift >= o.length) throw ConfigError("shift", "must lie in [0, length)");
  const ZcSequence seq = cyclic_shift(checked_zc(o.root, o.length, "root"), o.shift);

  std::ostringstream seq_csv, corr_csv;
  write_csv(seq_csv, seq.samples(), 1.0);
  if (o.correlate_root > 0) {
    const ZcSequence other = checked_zc(o.correlate_root, o.length, "correlate");
    const auto prof = periodic_xcorr(seq, other, o.normalize);
    write_csv(corr_csv, prof.values, 1.0);
  }

  if (o.out_dir.empty()) {
    out << (o.correlate_root > 0 ? corr_csv.str() : seq_csv.str());
    return kOk;
  }
  fs::create_directories(o.out_dir);
  open_out(fs::path(o.out_dir) / "zc.csv") << seq_csv.str();
  if (o.correlate_root > 0) open_out(fs::path(o.out_dir) / "correlation.csv") << corr_csv.str();
  return kOk;
}

int cmd_occupancy(const Options& o, std::ostream& out) {
  const CampaignConfig cfg = load_config(o);
  const OccupancyBreakdown b = occupancy_breakdown(cfg.prach, cfg.cell);
  const JammerBudget budget = jammer_resource_budget(cfg.prach, cfg.cell);
  out << std::setprecision(6);
  out << "period     10 ms / T_ra                 " << b.period_factor << '\n'
      << "temporal   N_sf N_sl N_sy / (10 2^mu 14)  " << b.temporal_factor << '\n'
      << "bandwidth  2^mu 15 kHz M K / B_cell      " << b.bandwidth_factor << '\n'
      << "ratio                                   " << std::fixed << std::setprecision(6) << b.ratio << " (" << std::setprecision(4)
      << 100.0 * b.ratio << " %)\n";
  out.unsetf(std::ios::floatfield);
  out << std::setprecision(6) << "jammer                                  " << budget.bandwidth_hz / 1e6 << " MHz, "
      << budget.active_span_per_period_ms << " ms active every " << budget.duty_period_ms << " ms\n";
  return kOk;
}

class FileTrace : public TraceSink {
 public:
  FileTrace(const fs::path& trace_path, const fs::path& iq_dir, int iq_budget)
      : trace_(open_out(trace_path)), iq_dir_(iq_dir), iq_budget_(iq_budget) {
    trace_ << Json{{"record_type", "header"}, {"schema_version", kSchemaVersion}, {"seed_rule", kSeedRule}}.dump()
           << '\n';
  }

  void on_detection(double t, const DetectionResult& r) override {
    if (r.detected.empty()) return;
    Json j = detection_to_json(t, r);
    j["event"] = "detection";
    trace_ << j.dump() << '\n';
  }

  void on_transition(double t, std::string_view who, UeState from, UeState to) override {
    trace_ << Json{{"event", "transition"}, {"time_ms", t}, {"entity", who}, {"from", to_string(from)},
                   {"to", to_string(to)}}
                  .dump()
           << '\n';
  }

  void on_frames(const PrachOccasion& occ, const IqFrame* ue, const IqFrame* jam, const IqFrame& rx) override {
    if (iq_budget_ <= 0) return;
    --iq_budget_;
    fs::create_directories(iq_dir_);
    const std::string stem = "sfn" + std::to_string(occ.sfn) + "_slot" + std::to_string(occ.slot) + "_occ" +
                             std::to_string(occ.occasion_index) + "_f" + std::to_string(occ.freq_index);
    if (ue) write_iq(iq_dir_ / (stem + "_ue.cf32"), *ue);
    if (jam) write_iq(iq_dir_ / (stem + "_jam.cf32"), *jam);
    write_iq(iq_dir_ / (stem + "_rx.cf32"), rx);
  }

 private:
  std::ofstream trace_;
  fs::path iq_dir_;
  int iq_budget_;
};

void write_summary(const fs::path& p, const MetricsSummary& s, const CampaignConfig& cfg) {
  open_out(p) << summary_to_json(s, cfg, utc_timestamp()).dump(2) << '\n';
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const CampaignConfig cfg = load_config(o);
  const fs::path dir = o.out_dir.empty() ? fs::path(".") : fs::path(o.out_dir);
  fs::create_directories(dir);

  const CampaignResult res = run_campaign(cfg, o.threads);
  write_records(dir / "records.jsonl", cfg, res.records);
  write_summary(dir / "summary.json", res.summary, cfg);

  auto csv = open_out(dir / "preambles.csv");
  csv << "# " << kSeedRule << '\n'
      << "index,valid,preambles_sent,preambles_detected,ra_succeeded,time_to_success\n";
  for (const auto& r : res.records) {
    csv << r.index << ',' << r.valid << ',' << r.preambles_sent << ',' << r.preambles_detected << ','
        << r.ra_succeeded << ',';
    if (r.time_to_success) csv << *r.time_to_success;
    csv << '\n';
  }

  if (o.trace_interval >= 0) {
    if (o.trace_interval >= cfg.n_intervals) throw ConfigError("trace-interval", "beyond n_intervals");
    FileTrace trace(dir / "trace.jsonl", dir / "iq", o.dump_iq);
    const IntervalRecord again = run_interval(cfg, o.trace_interval, &trace);
    if (!(again == res.records[static_cast<std::size_t>(o.trace_interval)]))
      throw std::runtime_error("traced rerun diverged from the campaign record");
  }

  const auto& s = res.summary;
  out << "intervals " << s.n_i << "  success " << s.n_ra_s << "  unsuccessful " << s.n_ra_u << "  invalid " << s.n_e
      << '\n'
      << "E_s " << std::setprecision(4) << 100.0 * s.e_s.to_double() << " %  E_P,j " << s.e_p_j_ppm()
      << " ppm  mean preambles " << s.mean_preambles_per_interval.to_double() << " (sent "
      << s.mean_preambles_sent_per_interval.to_double() << ")\n"
      << "wrote " << (dir / "records.jsonl").string() << '\n';
  return kOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  const RecordFile file = read_records(o.records_path);
  if (!file.header.contains("config")) throw ConfigError("header.config", "records file has no embedded config");
  const CampaignConfig cfg = campaign_from_json(file.header.at("config"));
  const MetricsSummary s = compute_metrics(file.records);
  if (o.out_dir.empty()) {
    out << summary_to_json(s, cfg, utc_timestamp()).dump(2) << '\n';
  } else {
    fs::create_directories(o.out_dir);
    write_summary(fs::path(o.out_dir) / "summary.json", s, cfg);
  }
  return kOk;
}

int cmd_calibrate(const Options& o, std::ostream& out) {
  const CampaignConfig cfg = load_config(o);
  if (!(o.far > 0.0 && o.far < 1.0)) throw ConfigError("far", "must lie in (0, 1)");
  if (o.trials < 1) throw ConfigError("trials", "must be >= 1");
  Rng rng(splitmix64(cfg.base_seed));
  const double t = calibrate_threshold(o.far, o.trials, cfg.detector, rng, cfg.prach.preamble_length);
  out << std::setprecision(6) << "threshold_factor " << t << "  (far " << o.far << ", " << o.trials << " trials)\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"PRACH jamming link-level simulator", "prachjam"};
  app.require_subcommand(1);

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "campaign JSON")->check(CLI::ExistingFile);
    sub->add_option("--set", o.sets, "override key=value, applied after --config")->take_all();
    sub->add_option("--out", o.out_dir, "output directory");
    sub->add_option("--threads", o.threads, "worker threads, 0 = auto");
  };

  auto* zc = app.add_subcommand("zc", "ZC sequence or correlation profile as CSV");
  zc->add_option("--root", o.root);
  zc->add_option("--length", o.length);
  zc->add_option("--shift", o.shift);
  zc->add_option("--correlate", o.correlate_root, "root of the second sequence; prints the periodic correlation");
  zc->add_flag("!--raw", o.normalize, "do not divide the correlation by N");
  zc->add_option("--out", o.out_dir, "write zc.csv / correlation.csv here instead of stdout");

  auto* occ = app.add_subcommand("occupancy", "PRACH resource occupancy breakdown");
  common(occ);

  auto* sim = app.add_subcommand("simulate", "run a campaign");
  common(sim);
  sim->add_option("--trace-interval", o.trace_interval, "write trace.jsonl for this interval");
  sim->add_option("--dump-iq", o.dump_iq, "with --trace-interval: dump the first N occasions as cf32");

  auto* met = app.add_subcommand("metrics", "recompute summary.json from records.jsonl");
  met->add_option("--records", o.records_path)->required()->check(CLI::ExistingFile);
  met->add_option("--out", o.out_dir, "write summary.json here instead of stdout");

  auto* cal = app.add_subcommand("calibrate", "noise-only threshold calibration");
  common(cal);
  cal->add_option("--far", o.far, "target false alarm rate per occasion");
  cal->add_option("--trials", o.trials);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*zc) return cmd_zc(o, out);
    if (*occ) return cmd_occupancy(o, out);
    if (*sim) return cmd_simulate(o, out);
    if (*met) return cmd_metrics(o, out);
    if (*cal) return cmd_calibrate(o, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kRuntimeError;
}

}  // namespace prachjam::cli

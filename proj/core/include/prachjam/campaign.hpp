#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "prachjam/channel.hpp"
#include "prachjam/detector.hpp"
#include "prachjam/jammer.hpp"
#include "prachjam/metrics.hpp"
#include "prachjam/prach_map.hpp"
#include "prachjam/ra_fsm.hpp"

namespace prachjam {

struct CampaignConfig {
  int n_intervals = 800;
  double interval_duration = 60.0;  // s, UE runtime per interval
  double jammer_lead = 10.0;        // s, jammer starts this long before the UE
  double jammer_lag = 10.0;         // s, jammer stops this long after the UE
  JammerConfig spectrum;
  ChannelConfig channel;
  DetectorConfig detector;
  CellConfig cell = cell_preset_desk();
  PrachConfig prach = prach_preset_index98();
  std::uint64_t base_seed = 1;

  double ue_amplitude = 1.0;               // A_N, per-bin preamble magnitude
  std::optional<double> ue_bin_snr_db;     // when set, replaces channel.noise_sigma
  double ue_startup_delay = 0.5;           // s between UE launch and its first attempt
  double retry_period_ms = 100.0;
  double rar_window_ms = 20.0;
  double invalid_probability = 0.0;        // injected testbed failures
  bool simulate_idle_occasions = true;     // also run occasions with no UE preamble
};

void validate(const CampaignConfig& cfg);

// Noise sigma actually used (ue_bin_snr_db wins over channel.noise_sigma).
double effective_noise_sigma(const CampaignConfig& cfg);

// seed_i = splitmix64(base_seed + 0x9E3779B97F4A7C15 * (index + 1))
inline constexpr std::string_view kSeedRule = "seed_i = splitmix64(base_seed + 0x9E3779B97F4A7C15 * (index + 1))";
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t interval_seed(std::uint64_t base_seed, int index);

// Observer for debugging output; all callbacks are optional.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_detection(double /*time_ms*/, const DetectionResult& /*result*/) {}
  virtual void on_transition(double /*time_ms*/, std::string_view /*entity*/, UeState /*from*/, UeState /*to*/) {}
  // Frames of each simulated occasion; ue/jam may be null.
  virtual void on_frames(const PrachOccasion& /*occasion*/, const IqFrame* /*ue*/, const IqFrame* /*jam*/,
                         const IqFrame& /*received*/) {}
};

IntervalRecord run_interval(const CampaignConfig& cfg, int index, TraceSink* trace = nullptr);

struct CampaignResult {
  std::vector<IntervalRecord> records;  // ordered by index
  MetricsSummary summary;
};

// threads = 0 picks hardware concurrency. Output does not depend on it.
CampaignResult run_campaign(const CampaignConfig& cfg, unsigned threads = 0);

}  // namespace prachjam

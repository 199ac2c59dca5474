#include "prachjam/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "prachjam/waveform.hpp"
#include "prachjam/zc.hpp"

namespace prachjam {
namespace {

// Message latencies inside the RAR window (ms after the occasion).
constexpr double kRarDelayMs = 4.0;
constexpr double kMsg4DelayMs = 8.0;

constexpr std::uint64_t kUeStream = 0x55455f7374726561ULL;
constexpr std::uint64_t kNoiseStream = 0x6e6f6973655f7374ULL;
constexpr std::uint64_t kJamStream = 0x6a616d5f73747265ULL;
constexpr std::uint64_t kValidityStream = 0x76616c69645f7374ULL;

std::uint64_t occasion_stream(std::uint64_t seed, std::uint64_t stream, const PrachOccasion& occ) {
  std::uint64_t h = splitmix64(seed ^ stream);
  for (int v : {occ.sfn, occ.slot, occ.occasion_index, occ.freq_index})
    h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  return h;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t interval_seed(std::uint64_t base_seed, int index) {
  return splitmix64(base_seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1));
}

void validate(const CampaignConfig& cfg) {
  if (cfg.n_intervals < 1) throw ConfigError("n_intervals", "n_intervals must be >= 1");
  if (!(cfg.interval_duration > 0.0)) throw ConfigError("interval_duration", "must be > 0");
  if (cfg.jammer_lead < 0.0) throw ConfigError("jammer_lead", "must be >= 0");
  if (cfg.jammer_lag < 0.0) throw ConfigError("jammer_lag", "must be >= 0");
  if (cfg.ue_amplitude < 0.0) throw ConfigError("ue_amplitude", "must be >= 0");
  if (cfg.ue_startup_delay < 0.0) throw ConfigError("ue_startup_delay", "must be >= 0");
  if (!(cfg.retry_period_ms > 0.0)) throw ConfigError("retry_period_ms", "must be > 0");
  if (!(cfg.rar_window_ms > kMsg4DelayMs) || cfg.rar_window_ms >= cfg.retry_period_ms)
    throw ConfigError("rar_window_ms", "must lie between the Msg4 latency (8 ms) and the retry period");
  if (cfg.invalid_probability < 0.0 || cfg.invalid_probability > 1.0)
    throw ConfigError("invalid_probability", "must be in [0, 1]");
  validate(cfg.prach, cfg.cell);
  validate(cfg.channel, cfg.cell.effective_cp_length());
  validate(cfg.detector);
  for (int root : cfg.detector.roots) {
    if (root < 1 || root >= cfg.prach.preamble_length || std::gcd(root, cfg.prach.preamble_length) != 1)
      throw ConfigError("detector.roots", "root " + std::to_string(root) + " is not a valid ZC root");
  }
  if (cfg.detector.shift_step > cfg.prach.preamble_length)
    throw ConfigError("detector.shift_step", "must not exceed the preamble length");
}

double effective_noise_sigma(const CampaignConfig& cfg) {
  if (!cfg.ue_bin_snr_db) return cfg.channel.noise_sigma;
  return noise_sigma_for_bin_snr(cfg.ue_amplitude * cfg.channel.ue_gain, *cfg.ue_bin_snr_db, cfg.cell.dft_size);
}

IntervalRecord run_interval(const CampaignConfig& cfg, int index, TraceSink* trace) {
  IntervalRecord record;
  record.index = index;
  record.seed = interval_seed(cfg.base_seed, index);

  Rng validity_rng(splitmix64(record.seed ^ kValidityStream));
  if (cfg.invalid_probability > 0.0 &&
      std::uniform_real_distribution<double>(0.0, 1.0)(validity_rng) < cfg.invalid_probability) {
    record.valid = false;
    return record;
  }

  ChannelConfig channel = cfg.channel;
  channel.noise_sigma = effective_noise_sigma(cfg);

  const PreambleDetector detector(cfg.detector, cfg.prach.preamble_length);
  UeRaParams params;
  params.retry_period_ms = cfg.retry_period_ms;
  params.rar_window_ms = cfg.rar_window_ms;
  params.roots = cfg.detector.roots;
  params.signatures_per_root = detector.signatures_per_root();

  const double a_f = amplitude_from_snr(cfg.ue_amplitude, cfg.spectrum.snr_db);
  const double total_ms = 1000.0 * (cfg.jammer_lead + cfg.interval_duration + cfg.jammer_lag);
  const double ue_start_ms = 1000.0 * (cfg.jammer_lead + cfg.ue_startup_delay);
  const double ue_end_ms = 1000.0 * (cfg.jammer_lead + cfg.interval_duration);

  Rng ue_rng(splitmix64(record.seed ^ kUeStream));
  UeRaState ue;
  ue.unique_id = record.seed;
  ue.retry_timer_ms = ue_start_ms;
  GnbRaContext gnb;

  std::vector<ZcSequence> roots;
  for (int r : cfg.detector.roots) roots.push_back(generate_zc(r, cfg.prach.preamble_length));

  const auto step_ue = [&](double now, std::span<const DownlinkEvent> events) {
    const UeState before = ue.state;
    UeStepResult res = ue_step(std::move(ue), now, events, ue_rng, params);
    ue = std::move(res.ue);
    if (trace && ue.state != before) trace->on_transition(now, "ue", before, ue.state);
    return res.action;
  };

  const int last_sfn = static_cast<int>(std::ceil(total_ms / 10.0));
  for (int sfn = 0; sfn < last_sfn; ++sfn) {
    if (!is_prach_frame(cfg.prach, sfn)) continue;
    if (!cfg.simulate_idle_occasions && (ue.state == UeState::Connected || 10.0 * sfn >= ue_end_ms)) break;

    for (const PrachOccasion& occ : occasions_in_frame(cfg.prach, cfg.cell, sfn)) {
      const double t = occasion_time_ms(occ, cfg.prach, cfg.cell);
      if (t >= total_ms) break;

      std::optional<PreambleTx> tx;
      if (t >= ue_start_ms && t < ue_end_ms && ue.state != UeState::Connected) {
        const DownlinkEvent opp = PrachOpportunity{key_of(occ)};
        if (auto action = step_ue(t, std::span(&opp, 1))) tx = std::get<PreambleTx>(*action);
      }
      if (!tx && !cfg.simulate_idle_occasions) continue;

      std::optional<PreambleWaveform> preamble;
      if (tx) {
        const std::size_t slot = static_cast<std::size_t>(
            std::find(cfg.detector.roots.begin(), cfg.detector.roots.end(), tx->signature.root) -
            cfg.detector.roots.begin());
        const ZcSequence seq = cyclic_shift(roots[slot], tx->signature.index * cfg.detector.shift_step);
        preamble = modulate_preamble(seq, occ, cfg.cell, cfg.ue_amplitude);
      }
      std::optional<IqFrame> jam;
      if (cfg.spectrum.enabled) {
        Rng jam_rng(occasion_stream(record.seed ^ cfg.spectrum.seed, kJamStream, occ));
        jam = generate_jamming_frame(cfg.spectrum, occ, cfg.cell, a_f, jam_rng);
      }
      Rng noise_rng(occasion_stream(record.seed, kNoiseStream, occ));
      const IqFrame rx = superpose(preamble ? &preamble->frame : nullptr, jam ? &*jam : nullptr, channel, noise_rng,
                                   static_cast<std::size_t>(occasion_length(cfg.cell)), cfg.cell.sample_rate);
      if (trace) trace->on_frames(occ, preamble ? &preamble->frame : nullptr, jam ? &*jam : nullptr, rx);

      const DemappedBins bins = demap_prach(rx, occ, cfg.cell);
      const DetectionResult detection = detector.detect(bins.average, occ);
      if (trace) trace->on_detection(t, detection);

      if (tx && std::any_of(detection.detected.begin(), detection.detected.end(),
                            [&](const Detection& d) { return d.signature == tx->signature; }))
        ++record.preambles_detected;

      GnbStepResult rar = gnb_step(std::move(gnb), detection, {});
      gnb = std::move(rar.ctx);
      if (ue.state != UeState::WaitRar) continue;

      std::vector<Msg3Arrival> msg3s;
      if (auto action = step_ue(t + kRarDelayMs, rar.events)) {
        const auto& m = std::get<Msg3Tx>(*action);
        msg3s.push_back({m.temp_id, m.unique_id, m.time_ms});
      }
      GnbStepResult msg4 = gnb_step(std::move(gnb), DetectionResult{}, msg3s);
      gnb = std::move(msg4.ctx);
      step_ue(t + kMsg4DelayMs, msg4.events);
      if (ue.state == UeState::Connected && !record.ra_succeeded) {
        record.ra_succeeded = true;
        record.time_to_success = (t + kMsg4DelayMs - 1000.0 * cfg.jammer_lead) / 1000.0;
      }
    }
  }
  record.preambles_sent = ue.preambles_sent;
  return record;
}

CampaignResult run_campaign(const CampaignConfig& cfg, unsigned threads) {
  validate(cfg);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.n_intervals));

  CampaignResult result;
  result.records.resize(static_cast<std::size_t>(cfg.n_intervals));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto worker = [&] {
    for (int i = next++; i < cfg.n_intervals; i = next++) {
      try {
        result.records[static_cast<std::size_t>(i)] = run_interval(cfg, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cfg.n_intervals;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  result.summary = compute_metrics(result.records);
  return result;
}

}  // namespace prachjam

#include "doctest.h"
#include "prachjam/campaign.hpp"

using namespace prachjam;

namespace {

CampaignConfig quick(double seconds) {
  CampaignConfig cfg;
  cfg.n_intervals = 4;
  cfg.interval_duration = seconds;
  cfg.jammer_lead = 0.2;
  cfg.jammer_lag = 0.2;
  cfg.ue_bin_snr_db = 0.0;
  cfg.base_seed = 17;
  return cfg;
}

}  // namespace

TEST_CASE("splitmix seeding rule") {
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(interval_seed(5, 0) != interval_seed(5, 1));
  CHECK(interval_seed(5, 3) == splitmix64(5 + 0x9E3779B97F4A7C15ULL * 4));
}

TEST_CASE("no jammer: every interval succeeds quickly") {
  auto cfg = quick(2.0);
  cfg.spectrum.enabled = false;
  cfg.n_intervals = 10;
  const auto res = run_campaign(cfg, 1);
  CHECK(res.summary.e_s == Rational(1, 1));
  for (const auto& r : res.records) {
    CHECK(r.ra_succeeded);
    CHECK(r.preambles_detected >= 1);
    CHECK(r.preambles_sent <= 2);
    REQUIRE(r.time_to_success);
    CHECK(*r.time_to_success >= cfg.ue_startup_delay);
  }
}

TEST_CASE("strong jamming: preambles are capped by the retry cadence") {
  auto cfg = quick(3.0);
  cfg.spectrum.snr_db = -30.0;
  cfg.ue_startup_delay = 0.0;
  cfg.n_intervals = 2;
  const auto res = run_campaign(cfg, 1);
  for (const auto& r : res.records) {
    CHECK(r.preambles_sent <= 31);
    CHECK(r.preambles_sent >= 28);
    CHECK_FALSE(r.ra_succeeded);
  }
}

TEST_CASE("records are deterministic and independent of thread count") {
  auto cfg = quick(1.0);
  cfg.spectrum.snr_db = -12.0;
  const auto a = run_campaign(cfg, 1);
  const auto b = run_campaign(cfg, 3);
  CHECK(a.records == b.records);
}

TEST_CASE("skipping idle occasions does not change the records") {
  auto cfg = quick(1.5);
  cfg.spectrum.snr_db = -12.0;
  cfg.simulate_idle_occasions = true;
  const auto full = run_campaign(cfg, 1);
  cfg.simulate_idle_occasions = false;
  const auto lean = run_campaign(cfg, 1);
  CHECK(full.records == lean.records);
}

TEST_CASE("injected invalid intervals feed N_e") {
  auto cfg = quick(0.5);
  cfg.spectrum.enabled = false;
  cfg.n_intervals = 40;
  cfg.invalid_probability = 0.5;
  const auto res = run_campaign(cfg, 1);
  CHECK(res.summary.n_e > 0);
  CHECK(res.summary.n_e < 40);
  CHECK(res.summary.n_ra_s + res.summary.n_ra_u + res.summary.n_e == 40);
}

TEST_CASE("interval invariants") {
  auto cfg = quick(2.0);
  cfg.spectrum.snr_db = -10.0;
  cfg.n_intervals = 6;
  for (const auto& r : run_campaign(cfg, 1).records) {
    if (r.ra_succeeded) CHECK(r.preambles_detected >= 1);
    CHECK(r.preambles_detected <= r.preambles_sent);
  }
}

TEST_CASE("trace sink sees detections and transitions") {
  struct Counter : TraceSink {
    int detections = 0, transitions = 0, frames = 0;
    void on_detection(double, const DetectionResult&) override { ++detections; }
    void on_transition(double, std::string_view, UeState, UeState) override { ++transitions; }
    void on_frames(const PrachOccasion&, const IqFrame*, const IqFrame*, const IqFrame&) override { ++frames; }
  } counter;
  auto cfg = quick(0.5);
  cfg.spectrum.enabled = false;
  cfg.ue_startup_delay = 0.1;
  run_interval(cfg, 0, &counter);
  // 0.9 s of jammer window -> 45 PRACH frames of 3 occasions
  CHECK(counter.detections == 135);
  CHECK(counter.frames == 135);
  CHECK(counter.transitions >= 3);
}

TEST_CASE("validation") {
  CampaignConfig cfg;
  cfg.n_intervals = 0;
  CHECK_THROWS_WITH_AS(validate(cfg), "n_intervals: n_intervals must be >= 1", ConfigError);
  cfg = CampaignConfig{};
  cfg.rar_window_ms = 150;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = CampaignConfig{};
  cfg.channel.ue_delay_samples = 18;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = CampaignConfig{};
  cfg.detector.roots = {2};
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("success ratio does not grow with jammer amplitude") {
  auto cfg = quick(0.3);
  cfg.n_intervals = 200;
  cfg.ue_startup_delay = 0.0;
  cfg.simulate_idle_occasions = false;
  double previous = 1.1;
  for (double snr : {-8.0, -12.0, -15.0, -18.0}) {
    cfg.spectrum.snr_db = snr;
    const double e_s = run_campaign(cfg, 1).summary.e_s.to_double();
    CHECK(e_s <= previous);
    previous = e_s;
  }
  CHECK(previous < 0.2);
}

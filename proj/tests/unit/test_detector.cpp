#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "prachjam/channel.hpp"
#include "prachjam/detector.hpp"
#include "prachjam/waveform.hpp"

using namespace prachjam;

namespace {

const CellConfig kCell = cell_preset_desk();
PrachOccasion occasion() { return occasions_in_frame(prach_preset_index98(), kCell, 1).front(); }

ComplexVec loopback_bins(int root, int shift, double amplitude = 1.0, int delay = 0, double sigma = 0.0,
                         std::uint64_t seed = 1) {
  const auto wf = modulate_preamble(cyclic_shift(generate_zc(root, 139), shift), occasion(), kCell, amplitude);
  ChannelConfig ch;
  ch.ue_delay_samples = delay;
  ch.noise_sigma = sigma;
  Rng rng(seed);
  return demap_prach(superpose(&wf.frame, nullptr, ch, rng), occasion(), kCell).average;
}

}  // namespace

TEST_CASE("noiseless loopback gives exactly one detection") {
  const auto res = detect_preambles(loopback_bins(1, 0), DetectorConfig{});
  REQUIRE(res.detected.size() == 1);
  CHECK(res.detected[0].signature == Signature{1, 0});
  CHECK(res.detected[0].lag == 0);
  CHECK(res.detected[0].peak_metric == doctest::Approx(1.0));
  for (const auto& d : res.detected) CHECK(d.peak_metric >= DetectorConfig{}.threshold_factor * res.noise_floor);
}

TEST_CASE("zero input gives no detections") {
  const auto res = detect_preambles(ComplexVec(139), DetectorConfig{});
  CHECK(res.detected.empty());
}

TEST_CASE("shift 13 lands in signature window 1") {
  const auto bins = loopback_bins(1, 13);
  const auto res = detect_preambles(bins, DetectorConfig{});
  REQUIRE(res.detected.size() == 1);
  CHECK(res.detected[0].signature.index == 1);

  // Brute force: correlate the recovered sequence against the root at all 139
  // lags; the only peak sits where the shifted root lines up.
  const auto root = generate_zc(1, 139);
  std::vector<Complex> rx = oracle::naive_dft(bins, +1);
  for (auto& v : rx) v /= 139.0;
  const auto corr = oracle::naive_xcorr(rx, {root.samples().begin(), root.samples().end()});
  int best = 0;
  for (int l = 0; l < 139; ++l)
    if (std::abs(corr[l]) > std::abs(corr[best])) best = l;
  CHECK(best == 13);
  CHECK(res.detected[0].lag == (139 - best) % 139);
}

TEST_CASE("every signature of every root is recognised") {
  DetectorConfig cfg;
  cfg.roots = {1, 2};
  const PreambleDetector det(cfg, 139);
  CHECK(det.signatures_per_root() == 10);
  for (int root : {1, 2})
    for (int i = 0; i < 10; ++i) {
      const auto res = det.detect(loopback_bins(root, 13 * i));
      REQUIRE(res.detected.size() == 1);
      CHECK(res.detected[0].signature == Signature{root, i});
    }
}

TEST_CASE("delay inside the CP stays in the right window") {
  const PreambleDetector det(DetectorConfig{}, 139);
  for (int delay = 0; delay < kCell.effective_cp_length(); ++delay) {
    for (int sig : {0, 3, 9}) {
      const auto res = det.detect(loopback_bins(1, 13 * sig, 1.0, delay));
      REQUIRE(res.detected.size() == 1);
      CHECK(res.detected[0].signature.index == sig);
      const int spread = delay * 139 / kCell.dft_size;
      const int offset = (res.detected[0].lag + 13 * sig) % 139;
      CHECK(offset <= spread + 1);
    }
  }
}

TEST_CASE("detection ignores a common phase rotation") {
  const PreambleDetector det(DetectorConfig{}, 139);
  auto bins = loopback_bins(1, 26, 1.0, 0, noise_sigma_for_bin_snr(1.0, -3.0, kCell.dft_size), 42);
  const auto base = det.detect(bins);
  for (auto& b : bins) b *= std::polar(1.0, 1.234);
  const auto rotated = det.detect(bins);
  REQUIRE(base.detected.size() == rotated.detected.size());
  for (std::size_t i = 0; i < base.detected.size(); ++i) {
    CHECK(base.detected[i].signature == rotated.detected[i].signature);
    CHECK(base.detected[i].peak_metric == doctest::Approx(rotated.detected[i].peak_metric).epsilon(1e-9));
  }
}

TEST_CASE("miss rate without jamming at 0 dB per-bin SNR is below 1%") {
  const PreambleDetector det(DetectorConfig{}, 139);
  const auto wf = modulate_preamble(cyclic_shift(generate_zc(1, 139), 39), occasion(), kCell, 1.0);
  ChannelConfig ch;
  ch.noise_sigma = noise_sigma_for_bin_snr(1.0, 0.0, kCell.dft_size);
  Rng rng(99);
  int misses = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const auto bins = demap_prach(superpose(&wf.frame, nullptr, ch, rng), occasion(), kCell).average;
    const auto res = det.detect(bins);
    const bool hit = std::any_of(res.detected.begin(), res.detected.end(),
                                 [](const Detection& d) { return d.signature == Signature{1, 3}; });
    misses += hit ? 0 : 1;
  }
  CHECK(misses < trials / 100);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(detect_preambles(ComplexVec(138), DetectorConfig{}), std::invalid_argument);
  DetectorConfig none;
  none.roots.clear();
  CHECK_THROWS_AS(detect_preambles(ComplexVec(139), none), std::invalid_argument);
  CHECK_THROWS_AS(validate(none), ConfigError);
  DetectorConfig low;
  low.threshold_factor = 1.0;
  CHECK_THROWS_AS(validate(low), ConfigError);
}

TEST_CASE("threshold calibration") {
  DetectorConfig cfg;
  Rng rng(5);
  const double half = calibrate_threshold(0.5, 1000, cfg, rng);
  CHECK(half > 1.0);

  Rng rng2(6);
  const double t2 = calibrate_threshold(1e-2, 20000, cfg, rng2);
  Rng rng3(7);
  const double t3 = calibrate_threshold(1e-3, 20000, cfg, rng3);
  CHECK(t2 <= t3);
  CHECK(half <= t2);

  CHECK_THROWS_AS(calibrate_threshold(1e-3, 9999, cfg, rng), std::invalid_argument);
  CHECK_THROWS_AS(calibrate_threshold(0.0, 1000, cfg, rng), std::invalid_argument);
  CHECK_THROWS_AS(calibrate_threshold(1.0, 1000, cfg, rng), std::invalid_argument);
}

TEST_CASE("calibrated threshold holds its false-alarm rate on fresh noise") {
  DetectorConfig cfg;
  Rng rng(100);
  cfg.threshold_factor = calibrate_threshold(1e-3, 20000, cfg, rng);
  const PreambleDetector det(cfg, 139);

  // fresh noise through the full receive chain
  ChannelConfig ch;
  ch.noise_sigma = 0.01;
  Rng fresh(101);
  int alarms = 0;
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    const auto rx = superpose(nullptr, nullptr, ch, fresh, static_cast<std::size_t>(occasion_length(kCell)),
                              kCell.sample_rate);
    alarms += det.detect(demap_prach(rx, occasion(), kCell).average).detected.empty() ? 0 : 1;
  }
  CHECK(static_cast<double>(alarms) / trials <= 1.5e-3);
}

TEST_CASE("default threshold is the calibrated value for one root") {
  DetectorConfig cfg;
  Rng rng(7);
  const double t = calibrate_threshold(1e-3, 100000, cfg, rng);
  CHECK(t <= kDefaultThresholdFactor);
  CHECK(t > 0.9 * kDefaultThresholdFactor);
}

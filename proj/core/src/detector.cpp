#include "prachjam/detector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "prachjam/fft.hpp"
#include "prachjam/zc.hpp"

namespace prachjam {
namespace {

// Keeps numerical residue of a noiseless profile from looking like signal.
constexpr double kFloorGuard = 1e-12;

struct FloorEstimate {
  double peak = 0.0;
  double floor = 0.0;
};

FloorEstimate estimate_floor(const std::vector<double>& power) {
  const auto max_it = std::max_element(power.begin(), power.end());
  FloorEstimate est;
  est.peak = *max_it;
  double sum = 0.0;
  for (auto it = power.begin(); it != power.end(); ++it)
    if (it != max_it) sum += *it;
  const double mean = power.size() > 1 ? sum / static_cast<double>(power.size() - 1) : 0.0;
  est.floor = std::max(mean, kFloorGuard * est.peak);
  return est;
}

}  // namespace

void validate(const DetectorConfig& cfg) {
  if (!(cfg.threshold_factor > 1.0)) throw ConfigError("detector.threshold_factor", "must be > 1");
  if (cfg.shift_step < 1) throw ConfigError("detector.shift_step", "must be >= 1");
  if (cfg.roots.empty()) throw ConfigError("detector.roots", "must not be empty");
}

PreambleDetector::PreambleDetector(DetectorConfig cfg, int preamble_length)
    : cfg_(std::move(cfg)), length_(preamble_length) {
  if (cfg_.roots.empty()) throw std::invalid_argument("detector needs at least one root");
  if (cfg_.shift_step < 1 || cfg_.shift_step > length_)
    throw std::invalid_argument("detector shift_step must be in [1, L_RA]");
  const double scale = 1.0 / std::sqrt(static_cast<double>(length_));
  for (int root : cfg_.roots) {
    ComplexVec spec = dft(generate_zc(root, length_).samples());
    for (auto& v : spec) v = std::conj(v) * scale;
    root_conj_.push_back(std::move(spec));
  }
}

std::vector<double> PreambleDetector::delay_profile(std::span<const Complex> bins, std::size_t root_slot) const {
  if (bins.size() != static_cast<std::size_t>(length_))
    throw std::invalid_argument("detector expects " + std::to_string(length_) + " bins, got " +
                                std::to_string(bins.size()));
  const ComplexVec& ref = root_conj_.at(root_slot);
  ComplexVec prod(bins.size());
  for (std::size_t m = 0; m < bins.size(); ++m) prod[m] = bins[m] * ref[m];
  const ComplexVec profile = fft::backward(prod);
  std::vector<double> power(profile.size());
  const double inv_l = 1.0 / static_cast<double>(length_);
  for (std::size_t l = 0; l < profile.size(); ++l) power[l] = std::norm(profile[l] * inv_l);
  return power;
}

DetectionResult PreambleDetector::detect(std::span<const Complex> bins, const PrachOccasion& occasion) const {
  DetectionResult result;
  result.occasion = occasion;
  result.noise_floor = 0.0;
  const int step = cfg_.shift_step;
  const int windows = signatures_per_root();
  bool first_floor = true;

  for (std::size_t r = 0; r < root_conj_.size(); ++r) {
    const std::vector<double> power = delay_profile(bins, r);
    const FloorEstimate est = estimate_floor(power);
    if (first_floor || est.floor < result.noise_floor) result.noise_floor = est.floor;
    first_floor = false;
    if (est.peak <= 0.0) continue;

    const double threshold = cfg_.threshold_factor * est.floor;
    for (int i = 0; i < windows; ++i) {
      const int base = ((length_ - (i * step) % length_) % length_);
      int best_lag = base;
      double best = -1.0;
      for (int t = 0; t < step; ++t) {
        const int lag = (base + t) % length_;
        if (power[lag] > best) {
          best = power[lag];
          best_lag = lag;
        }
      }
      if (best > threshold) result.detected.push_back({{cfg_.roots[r], i}, best, best_lag});
    }
  }
  return result;
}

double PreambleDetector::peak_to_floor(std::span<const Complex> bins) const {
  double worst = 0.0;
  for (std::size_t r = 0; r < root_conj_.size(); ++r) {
    const FloorEstimate est = estimate_floor(delay_profile(bins, r));
    if (est.floor > 0.0) worst = std::max(worst, est.peak / est.floor);
  }
  return worst;
}

DetectionResult detect_preambles(std::span<const Complex> bins, const DetectorConfig& cfg,
                                 const PrachOccasion& occasion) {
  return PreambleDetector(cfg, static_cast<int>(bins.size())).detect(bins, occasion);
}

double calibrate_threshold(double target_far, int trials, const DetectorConfig& cfg, Rng& rng,
                           int preamble_length) {
  if (!(target_far > 0.0 && target_far < 1.0))
    throw std::invalid_argument("target false-alarm rate must be in (0, 1)");
  if (static_cast<double>(trials) < 10.0 / target_far)
    throw std::invalid_argument("calibration needs at least " + std::to_string(static_cast<long long>(std::ceil(10.0 / target_far))) +
                                " trials for target " + std::to_string(target_far) + ", got " +
                                std::to_string(trials));

  const PreambleDetector detector(cfg, preamble_length);
  std::vector<double> stats(static_cast<std::size_t>(trials));
  ComplexVec bins(static_cast<std::size_t>(preamble_length));
  for (auto& s : stats) {
    for (auto& b : bins) b = complex_gaussian(rng, std::sqrt(0.5));
    s = detector.peak_to_floor(bins);
  }
  std::sort(stats.begin(), stats.end());

  const auto far_at = [&](double t) {
    const auto above = stats.end() - std::upper_bound(stats.begin(), stats.end(), t);
    return static_cast<double>(above) / static_cast<double>(stats.size());
  };

  double lo = 1.0;
  double hi = std::max(2.0, stats.back() * 1.01);
  while (hi / lo > 1.01) {
    const double mid = std::sqrt(lo * hi);
    if (far_at(mid) <= target_far) hi = mid;
    else lo = mid;
  }
  return hi;
}

}  // namespace prachjam

#pragma once

#include <span>
#include <vector>

#include "prachjam/prach_map.hpp"
#include "prachjam/types.hpp"

namespace prachjam {

// Default factor is the output of calibrate_threshold(1e-3, 10^5 trials) for
// one root at L_RA = 139 and shift_step 13, rounded up.
inline constexpr double kDefaultThresholdFactor = 12.5;

struct DetectorConfig {
  double threshold_factor = kDefaultThresholdFactor;  // peak / noise floor, on profile power
  int shift_step = 13;
  std::vector<int> roots{1};

  friend bool operator==(const DetectorConfig&, const DetectorConfig&) = default;
};

void validate(const DetectorConfig& cfg);

struct Signature {
  int root = 0;
  int index = 0;  // cyclic shift = index * shift_step

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct Detection {
  Signature signature;
  double peak_metric = 0.0;  // profile power at the window peak
  int lag = 0;               // profile lag of the peak
};

struct DetectionResult {
  std::vector<Detection> detected;
  double noise_floor = 0.0;  // smallest per-root floor
  PrachOccasion occasion;
};

// Correlation receiver over averaged PRACH bins. For each root the bins are
// multiplied by the conjugate unit-magnitude root spectrum and taken back to
// a power delay profile of L_RA lags. A preamble with cyclic shift C and a
// d-sample delay peaks at lag (d * L_RA / N_DFT - C) mod L_RA, so signature
// window i covers lags l with (l + i * shift_step) mod L_RA < shift_step.
class PreambleDetector {
 public:
  PreambleDetector(DetectorConfig cfg, int preamble_length);

  const DetectorConfig& config() const noexcept { return cfg_; }
  int preamble_length() const noexcept { return length_; }
  int signatures_per_root() const noexcept { return length_ / cfg_.shift_step; }

  DetectionResult detect(std::span<const Complex> bins, const PrachOccasion& occasion = {}) const;

  // Power delay profile |p[l]|^2 for one configured root.
  std::vector<double> delay_profile(std::span<const Complex> bins, std::size_t root_slot) const;

  // Largest (window peak / floor) over roots; the occasion raises a false
  // alarm at threshold T iff this exceeds T.
  double peak_to_floor(std::span<const Complex> bins) const;

 private:
  DetectorConfig cfg_;
  int length_;
  std::vector<ComplexVec> root_conj_;  // conj(DFT(root)) / sqrt(L)
};

DetectionResult detect_preambles(std::span<const Complex> bins, const DetectorConfig& cfg,
                                 const PrachOccasion& occasion = {});

// Smallest threshold factor (1 % bisection tolerance) whose false-alarm rate
// per occasion on noise-only bins is <= target_far.
double calibrate_threshold(double target_far, int trials, const DetectorConfig& cfg, Rng& rng,
                           int preamble_length = 139);

}  // namespace prachjam

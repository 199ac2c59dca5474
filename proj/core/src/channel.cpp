#include "prachjam/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace prachjam {

void validate(const ChannelConfig& cfg, int cp_length) {
  if (cfg.noise_sigma < 0.0) throw ConfigError("channel.noise_sigma", "must be >= 0");
  if (cfg.ue_gain < 0.0) throw ConfigError("channel.ue_gain", "must be >= 0");
  if (cfg.jammer_gain < 0.0) throw ConfigError("channel.jammer_gain", "must be >= 0");
  if (cfg.ue_delay_samples < 0 || cfg.ue_delay_samples >= cp_length)
    throw ConfigError("channel.ue_delay_samples",
                      "must be in [0, " + std::to_string(cp_length) + ") (shorter than the CP)");
}

double noise_sigma_for_bin_snr(double bin_amplitude, double snr_db, int dft_size) {
  // An N-point forward DFT of white noise with per-component sigma has
  // E|bin|^2 = 2 sigma^2 N.
  const double noise_bin_power = bin_amplitude * bin_amplitude / std::pow(10.0, snr_db / 10.0);
  return std::sqrt(noise_bin_power / (2.0 * dft_size));
}

IqFrame superpose(const IqFrame* ue, const IqFrame* jam, const ChannelConfig& cfg, Rng& rng,
                  std::size_t length, double sample_rate) {
  if (ue != nullptr && jam != nullptr) {
    if (ue->sample_rate != jam->sample_rate)
      throw std::invalid_argument("sample-rate mismatch between UE (" + std::to_string(ue->sample_rate) +
                                  " Hz) and jammer (" + std::to_string(jam->sample_rate) + " Hz)");
    if (ue->start_offset != jam->start_offset)
      throw std::invalid_argument("UE and jammer frames are not aligned to the same occasion");
  }

  IqFrame out;
  out.sample_rate = ue ? ue->sample_rate : jam ? jam->sample_rate : sample_rate;
  out.start_offset = ue ? ue->start_offset : jam ? jam->start_offset : 0;
  std::size_t n = length;
  if (ue) n = std::max(n, ue->samples.size());
  if (jam) n = std::max(n, jam->samples.size());
  out.samples.assign(n, Complex{});

  if (ue && cfg.ue_gain != 0.0) {
    const auto delay = static_cast<std::size_t>(cfg.ue_delay_samples);
    for (std::size_t k = delay; k < n && k - delay < ue->samples.size(); ++k)
      out.samples[k] += cfg.ue_gain * ue->samples[k - delay];
  }
  if (jam && cfg.jammer_gain != 0.0) {
    for (std::size_t k = 0; k < jam->samples.size(); ++k) out.samples[k] += cfg.jammer_gain * jam->samples[k];
  }
  if (cfg.noise_sigma > 0.0) {
    for (auto& s : out.samples) s += complex_gaussian(rng, cfg.noise_sigma);
  }
  return out;
}

}  // namespace prachjam

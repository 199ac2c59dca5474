#include "prachjam/jammer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "prachjam/fft.hpp"

namespace prachjam {

std::string_view to_string(JammerKind kind) { return kind == JammerKind::S1 ? "S1" : "S2"; }

JammerKind jammer_kind_from_string(std::string_view name) {
  if (name == "S1") return JammerKind::S1;
  if (name == "S2") return JammerKind::S2;
  throw std::invalid_argument("unknown jammer kind '" + std::string(name) + "' (expected S1 or S2)");
}

double amplitude_from_snr(double a_n, double snr_db) {
  if (a_n < 0.0) throw std::invalid_argument("a_n must be >= 0");
  return a_n * std::pow(10.0, -snr_db / 20.0);
}

double s1_time_amplitude(double a_f, int occupied_bins, int dft_size) {
  // Parseval over one N_DFT block with the 1/N synthesis scaling:
  // sum |t|^2 = sum |bin|^2 / N  =>  A_t^2 = L a_f^2 / N^2.
  return a_f * std::sqrt(static_cast<double>(occupied_bins)) / static_cast<double>(dft_size);
}

ComplexVec jamming_bins(const JammerConfig& config, int occupied_bins, int dft_size, double a_f, Rng& rng) {
  if (a_f < 0.0) throw std::invalid_argument("jamming amplitude must be >= 0");
  const auto width = static_cast<std::size_t>(occupied_bins);
  ComplexVec bins(width);

  if (config.kind == JammerKind::S2) {
    for (auto& b : bins) b = a_f * complex_gaussian(rng, std::sqrt(0.5));
    return bins;
  }
  if (config.s1_literal) {
    for (auto& b : bins) b = Complex(a_f, 0.0);
    return bins;
  }
  // Unit-variance white noise over one block; only the occupied band is kept.
  ComplexVec time(static_cast<std::size_t>(dft_size));
  for (auto& t : time) t = complex_gaussian(rng, std::sqrt(0.5));
  const ComplexVec spectrum = fft::forward(time);
  const double scale = a_f / std::sqrt(static_cast<double>(dft_size));
  for (std::size_t m = 0; m < width; ++m) bins[m] = spectrum[m] * scale;
  return bins;
}

IqFrame generate_jamming_frame(const JammerConfig& config, const PrachOccasion& occasion,
                               const CellConfig& cell, double a_f, Rng& rng) {
  const ComplexVec bins = jamming_bins(config, occasion.num_subcarriers, cell.dft_size, a_f, rng);
  return synthesize_occasion(bins, occasion, cell);
}

}  // namespace prachjam

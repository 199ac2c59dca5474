#pragma once

#include "prachjam/types.hpp"
#include "prachjam/waveform.hpp"

namespace prachjam {

// Flat AWGN channel. The UE path may be delayed; the jammer is slot aligned.
struct ChannelConfig {
  double noise_sigma = 0.0;  // per real/imag component
  double ue_gain = 1.0;
  double jammer_gain = 1.0;
  int ue_delay_samples = 0;

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

void validate(const ChannelConfig& cfg, int cp_length);

// Noise sigma that gives the requested per-bin SNR for a preamble whose
// occupied bins have magnitude `bin_amplitude` after an N-point forward DFT.
double noise_sigma_for_bin_snr(double bin_amplitude, double snr_db, int dft_size);

// out[k] = ue_gain * ue[k - delay] + jammer_gain * jam[k] + n[k].
// Either input may be null; `length` and `sample_rate` size the output when
// both are. Non-null inputs must share sample_rate and start_offset.
IqFrame superpose(const IqFrame* ue, const IqFrame* jam, const ChannelConfig& cfg, Rng& rng,
                  std::size_t length = 0, double sample_rate = 0.0);

}  // namespace prachjam

#pragma once

#include <cstdint>
#include <string_view>

#include "prachjam/prach_map.hpp"
#include "prachjam/types.hpp"
#include "prachjam/waveform.hpp"

namespace prachjam {

enum class JammerKind { S1, S2 };

std::string_view to_string(JammerKind kind);
JammerKind jammer_kind_from_string(std::string_view name);

struct JammerConfig {
  JammerKind kind = JammerKind::S1;
  double snr_db = -6.0;
  std::uint64_t seed = 0;
  bool enabled = true;
  // S1 as a literal constant real spectrum A_f on every occupied bin instead
  // of band-limited time-domain noise.
  bool s1_literal = false;

  friend bool operator==(const JammerConfig&, const JammerConfig&) = default;
};

// A_f = a_n * 10^(-snr_db / 20).
double amplitude_from_snr(double a_n, double snr_db);

// Time-domain RMS amplitude A_t of S1 (per complex sample) that delivers a
// mean per-occupied-bin power of a_f^2 through the synthesis transform.
double s1_time_amplitude(double a_f, int occupied_bins, int dft_size);

// One occasion of jamming (CP + 4 repetitions of one N_DFT block), confined
// to the occasion's L_RA subcarriers.
//   S1: white Gaussian time samples, band-limited to the PRACH bins and
//       scaled so E|bin|^2 = a_f^2 (constant a_f on every bin if s1_literal).
//   S2: every occupied bin a_f * z with z standard complex normal.
IqFrame generate_jamming_frame(const JammerConfig& config, const PrachOccasion& occasion,
                               const CellConfig& cell, double a_f, Rng& rng);

// The occupied-bin values that generate_jamming_frame synthesizes.
ComplexVec jamming_bins(const JammerConfig& config, int occupied_bins, int dft_size, double a_f, Rng& rng);

}  // namespace prachjam

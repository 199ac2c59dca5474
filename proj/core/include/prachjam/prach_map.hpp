#pragma once

#include <vector>

namespace prachjam {

enum class PreambleFormat { A2 };

// Expanded PRACH configuration (one row of the TS 38.211 configuration table
// plus the frequency-domain parameters).
struct PrachConfig {
  int preamble_length = 139;         // L_RA, also the preamble bandwidth M in subcarriers
  int prach_prbs = 12;               // M_PRB
  int freq_occasions = 1;            // K
  int freq_offset = 0;               // PRBs from point A
  PreambleFormat preamble_format = PreambleFormat::A2;
  int sfn_modulus = 2;               // x in  sfn mod x == y
  int sfn_remainder = 1;             // y
  int subframe_number = 9;
  int slot_in_subframe = 1;          // n_slot_RA
  int start_symbol = 0;
  int slots_per_subframe_with_prach = 1;  // N_sl
  int occasions_per_slot = 3;
  int duration_symbols = 4;
  int prach_subframes_per_frame = 1;      // N_sf

  friend bool operator==(const PrachConfig&, const PrachConfig&) = default;
};

struct CellConfig {
  int numerology = 1;                // mu
  double cell_bandwidth = 40e6;      // Hz
  int n_prb = 106;
  int dft_size = 2048;
  double sample_rate = 61.44e6;      // Hz
  std::vector<int> prach_root_indices{1};
  int shift_step = 13;
  int cp_length = 0;                 // samples; 0 derives 144 * dft_size / 2048

  double subcarrier_spacing() const noexcept { return 15e3 * static_cast<double>(1 << numerology); }
  int slots_per_frame() const noexcept { return 10 << numerology; }
  int effective_cp_length() const noexcept { return cp_length > 0 ? cp_length : 144 * dft_size / 2048; }

  friend bool operator==(const CellConfig&, const CellConfig&) = default;
};

struct PrachOccasion {
  int sfn = 0;
  int subframe = 0;
  int slot = 0;                      // slot within the frame
  int start_symbol = 0;
  int occasion_index = 0;            // time-domain occasion within the slot
  int freq_index = 0;                // frequency occasion, < K
  int first_subcarrier = 0;
  int num_subcarriers = 139;

  friend bool operator==(const PrachOccasion&, const PrachOccasion&) = default;
};

struct JammerBudget {
  double bandwidth_hz = 0.0;
  double duty_period_ms = 0.0;
  double active_span_per_period_ms = 0.0;
};

struct OccupancyBreakdown {
  double period_factor = 0.0;        // 10 ms / T_ra
  double temporal_factor = 0.0;      // N_sf N_sl N_sy / (10 2^mu 14)
  double bandwidth_factor = 0.0;     // 2^mu 15 kHz M K / B_cell
  double ratio = 0.0;
};

// Presets: configuration index 98 (format A2, odd SFNs, last subframe) and two
// cell grids at 30 kHz SCS. The full grid covers 106 PRBs with a 2048-point
// transform; the desk grid keeps only the 256-bin PRACH subband.
PrachConfig prach_preset_index98();
CellConfig cell_preset_full();
CellConfig cell_preset_desk();

// Throw ConfigError naming the violated field.
void validate(const PrachConfig& config);
void validate(const CellConfig& cell);
void validate(const PrachConfig& config, const CellConfig& cell);

bool is_prach_frame(const PrachConfig& config, int sfn);

// PRACH occasions of one frame ordered by (subframe, slot, occasion, freq).
// N_sf subframes are consecutive starting at subframe_number; N_sl slots are
// consecutive starting at slot_in_subframe.
std::vector<PrachOccasion> occasions_in_frame(const PrachConfig& config, const CellConfig& cell,
                                              int sfn);

double prach_period_ms(const PrachConfig& config);
double symbol_duration_ms(int numerology);

// Start time of an occasion in ms, counted from SFN 0.
double occasion_time_ms(const PrachOccasion& occasion, const PrachConfig& config,
                        const CellConfig& cell);

OccupancyBreakdown occupancy_breakdown(const PrachConfig& config, const CellConfig& cell);
double occupancy_ratio(const PrachConfig& config, const CellConfig& cell);

JammerBudget jammer_resource_budget(const PrachConfig& config, const CellConfig& cell);

}  // namespace prachjam

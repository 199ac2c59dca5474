#include "prachjam/prach_map.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "prachjam/types.hpp"

namespace prachjam {

PrachConfig prach_preset_index98() { return PrachConfig{}; }

CellConfig cell_preset_full() { return CellConfig{}; }

CellConfig cell_preset_desk() {
  CellConfig cell;
  cell.n_prb = 12;
  cell.dft_size = 256;
  cell.sample_rate = 7.68e6;
  return cell;
}

void validate(const PrachConfig& c) {
  if (c.preamble_length != 139 && c.preamble_length != 839)
    throw ConfigError("prach.preamble_length", "must be 139 or 839");
  if (c.prach_prbs < 1) throw ConfigError("prach.prach_prbs", "must be >= 1");
  if (c.freq_occasions < 1) throw ConfigError("prach.freq_occasions", "must be >= 1");
  if (c.freq_offset < 0) throw ConfigError("prach.freq_offset", "must be >= 0");
  if (c.sfn_modulus < 1) throw ConfigError("prach.sfn_modulus", "must be >= 1");
  if (c.sfn_remainder < 0 || c.sfn_remainder >= c.sfn_modulus)
    throw ConfigError("prach.sfn_remainder", "must satisfy 0 <= y < x");
  if (c.subframe_number < 0 || c.subframe_number >= 10)
    throw ConfigError("prach.subframe_number", "must be in [0, 10)");
  if (c.prach_subframes_per_frame < 1 || c.subframe_number + c.prach_subframes_per_frame > 10)
    throw ConfigError("prach.prach_subframes_per_frame", "subframes run past the end of the frame");
  if (c.slot_in_subframe < 0) throw ConfigError("prach.slot_in_subframe", "must be >= 0");
  if (c.slots_per_subframe_with_prach < 1)
    throw ConfigError("prach.slots_per_subframe_with_prach", "must be >= 1");
  if (c.start_symbol < 0 || c.start_symbol >= 14)
    throw ConfigError("prach.start_symbol", "must be in [0, 14)");
  if (c.occasions_per_slot < 1) throw ConfigError("prach.occasions_per_slot", "must be >= 1");
  if (c.preamble_format == PreambleFormat::A2 && c.duration_symbols != 4)
    throw ConfigError("prach.duration_symbols", "format A2 spans 4 symbols");
  if (c.occasions_per_slot * c.duration_symbols > 14 - c.start_symbol)
    throw ConfigError("prach.occasions_per_slot", "occasions do not fit in the slot");
}

void validate(const CellConfig& cell) {
  if (cell.numerology < 0 || cell.numerology > 2)
    throw ConfigError("cell.numerology", "supported range is 0..2");
  if (!(cell.cell_bandwidth > 0.0)) throw ConfigError("cell.cell_bandwidth", "must be > 0");
  if (cell.n_prb < 1) throw ConfigError("cell.n_prb", "must be >= 1");
  if (cell.dft_size < 1 || (cell.dft_size & (cell.dft_size - 1)) != 0)
    throw ConfigError("cell.dft_size", "must be a power of two");
  if (cell.dft_size < cell.n_prb * 12) throw ConfigError("cell.dft_size", "must be >= 12 * n_prb");
  const double expected_rate = cell.dft_size * cell.subcarrier_spacing();
  if (std::abs(cell.sample_rate - expected_rate) > 1e-6 * expected_rate)
    throw ConfigError("cell.sample_rate",
                      "must equal dft_size * subcarrier spacing (" + std::to_string(expected_rate) + " Hz)");
  if (cell.prach_root_indices.empty()) throw ConfigError("cell.prach_root_indices", "must not be empty");
  if (cell.shift_step < 1) throw ConfigError("cell.shift_step", "must be >= 1");
  if (cell.cp_length < 0) throw ConfigError("cell.cp_length", "must be >= 0");
  if (cell.effective_cp_length() >= cell.dft_size)
    throw ConfigError("cell.cp_length", "must be shorter than dft_size");
}

void validate(const PrachConfig& config, const CellConfig& cell) {
  validate(config);
  validate(cell);
  if (config.slot_in_subframe + config.slots_per_subframe_with_prach > (1 << cell.numerology))
    throw ConfigError("prach.slot_in_subframe", "PRACH slots exceed the slots of a subframe at this numerology");
  const int last_first_sc = (config.freq_offset + (config.freq_occasions - 1) * config.prach_prbs) * 12;
  if (last_first_sc + config.preamble_length > cell.dft_size)
    throw ConfigError("prach.freq_offset", "PRACH subcarriers exceed the transform size");
  if (cell.shift_step > config.preamble_length)
    throw ConfigError("cell.shift_step", "must not exceed the preamble length");
  for (int root : cell.prach_root_indices) {
    if (root < 1 || root >= config.preamble_length || std::gcd(root, config.preamble_length) != 1)
      throw ConfigError("cell.prach_root_indices",
                        "root " + std::to_string(root) + " is not a valid ZC root for length " +
                            std::to_string(config.preamble_length));
  }
}

bool is_prach_frame(const PrachConfig& config, int sfn) {
  return sfn % config.sfn_modulus == config.sfn_remainder;
}

std::vector<PrachOccasion> occasions_in_frame(const PrachConfig& config, const CellConfig& cell,
                                              int sfn) {
  std::vector<PrachOccasion> out;
  if (!is_prach_frame(config, sfn)) return out;
  const int slots_per_subframe = 1 << cell.numerology;
  out.reserve(static_cast<std::size_t>(config.prach_subframes_per_frame *
                                       config.slots_per_subframe_with_prach *
                                       config.occasions_per_slot * config.freq_occasions));
  for (int sf = 0; sf < config.prach_subframes_per_frame; ++sf) {
    const int subframe = config.subframe_number + sf;
    for (int sl = 0; sl < config.slots_per_subframe_with_prach; ++sl) {
      const int slot = subframe * slots_per_subframe + config.slot_in_subframe + sl;
      for (int t = 0; t < config.occasions_per_slot; ++t) {
        for (int f = 0; f < config.freq_occasions; ++f) {
          PrachOccasion occ;
          occ.sfn = sfn;
          occ.subframe = subframe;
          occ.slot = slot;
          occ.start_symbol = config.start_symbol + t * config.duration_symbols;
          occ.occasion_index = t;
          occ.freq_index = f;
          occ.first_subcarrier = (config.freq_offset + f * config.prach_prbs) * 12;
          occ.num_subcarriers = config.preamble_length;
          out.push_back(occ);
        }
      }
    }
  }
  return out;
}

double prach_period_ms(const PrachConfig& config) { return 10.0 * config.sfn_modulus; }

double symbol_duration_ms(int numerology) { return 1.0 / (14.0 * static_cast<double>(1 << numerology)); }

double occasion_time_ms(const PrachOccasion& occasion, const PrachConfig&, const CellConfig& cell) {
  const double slot_ms = 1.0 / static_cast<double>(1 << cell.numerology);
  return 10.0 * occasion.sfn + slot_ms * occasion.slot +
         symbol_duration_ms(cell.numerology) * occasion.start_symbol;
}

OccupancyBreakdown occupancy_breakdown(const PrachConfig& config, const CellConfig& cell) {
  if (!(cell.cell_bandwidth > 0.0)) throw ConfigError("cell.cell_bandwidth", "must be > 0");
  const double mu_scale = static_cast<double>(1 << cell.numerology);
  const double n_sy = static_cast<double>(config.occasions_per_slot * config.duration_symbols);
  OccupancyBreakdown b;
  b.period_factor = 10.0 / prach_period_ms(config);
  b.temporal_factor = config.prach_subframes_per_frame * config.slots_per_subframe_with_prach * n_sy /
                      (10.0 * mu_scale * 14.0);
  b.bandwidth_factor = mu_scale * 15e3 * config.preamble_length * config.freq_occasions / cell.cell_bandwidth;
  b.ratio = b.period_factor * b.temporal_factor * b.bandwidth_factor;
  return b;
}

double occupancy_ratio(const PrachConfig& config, const CellConfig& cell) {
  return occupancy_breakdown(config, cell).ratio;
}

JammerBudget jammer_resource_budget(const PrachConfig& config, const CellConfig& cell) {
  JammerBudget b;
  b.bandwidth_hz = static_cast<double>(config.preamble_length) * config.freq_occasions * cell.subcarrier_spacing();
  b.duty_period_ms = prach_period_ms(config);
  b.active_span_per_period_ms =
      config.occasions_per_slot * config.duration_symbols * symbol_duration_ms(cell.numerology);
  return b;
}

}  // namespace prachjam

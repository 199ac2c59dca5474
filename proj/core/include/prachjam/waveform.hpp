#pragma once

#include <span>
#include <vector>

#include "prachjam/prach_map.hpp"
#include "prachjam/types.hpp"
#include "prachjam/zc.hpp"

namespace prachjam {

// Complex baseband samples. start_offset is the index of samples[0] relative
// to the start of the occasion (the first cyclic prefix sample).
struct IqFrame {
  ComplexVec samples;
  double sample_rate = 0.0;
  int start_offset = 0;
};

struct PreambleWaveform {
  IqFrame frame;
  ZcSequence sequence;
  PrachOccasion occasion;
  double amplitude = 0.0;
};

struct DemappedBins {
  std::vector<ComplexVec> repetitions;  // one L_RA vector per repetition
  ComplexVec average;                   // coherent mean over repetitions
};

inline constexpr int kA2Repetitions = 4;

// Samples spanned by one format A2 occasion: CP plus four N_DFT blocks.
int occasion_length(const CellConfig& cell);

// Places `occupied` on subcarriers [first_subcarrier, first_subcarrier + size)
// and builds the CP + 4-repetition time signal. Demapping the result gives
// back `occupied` exactly.
IqFrame synthesize_occasion(std::span<const Complex> occupied, const PrachOccasion& occasion,
                            const CellConfig& cell);

// Occupied bins carry amplitude * DFT(seq) / sqrt(L_RA), so every bin has
// magnitude `amplitude`.
PreambleWaveform modulate_preamble(const ZcSequence& seq, const PrachOccasion& occasion,
                                   const CellConfig& cell, double amplitude);

DemappedBins demap_prach(const IqFrame& frame, const PrachOccasion& occasion, const CellConfig& cell);

}  // namespace prachjam

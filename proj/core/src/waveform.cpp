#include "prachjam/waveform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "prachjam/fft.hpp"

namespace prachjam {

int occasion_length(const CellConfig& cell) {
  return cell.effective_cp_length() + kA2Repetitions * cell.dft_size;
}

IqFrame synthesize_occasion(std::span<const Complex> occupied, const PrachOccasion& occasion,
                            const CellConfig& cell) {
  const auto n_dft = static_cast<std::size_t>(cell.dft_size);
  if (occupied.size() > n_dft)
    throw std::invalid_argument("preamble length " + std::to_string(occupied.size()) +
                                " exceeds dft_size " + std::to_string(n_dft));
  if (occasion.first_subcarrier < 0 || occasion.first_subcarrier + occupied.size() > n_dft)
    throw std::invalid_argument("occasion subcarriers fall outside the transform");

  ComplexVec grid(n_dft);
  for (std::size_t m = 0; m < occupied.size(); ++m) grid[occasion.first_subcarrier + m] = occupied[m];
  const ComplexVec block = fft::inverse(grid);

  const auto cp = static_cast<std::size_t>(cell.effective_cp_length());
  IqFrame frame;
  frame.sample_rate = cell.sample_rate;
  frame.samples.reserve(cp + kA2Repetitions * n_dft);
  frame.samples.insert(frame.samples.end(), block.end() - static_cast<std::ptrdiff_t>(cp), block.end());
  for (int r = 0; r < kA2Repetitions; ++r) frame.samples.insert(frame.samples.end(), block.begin(), block.end());
  return frame;
}

PreambleWaveform modulate_preamble(const ZcSequence& seq, const PrachOccasion& occasion,
                                   const CellConfig& cell, double amplitude) {
  if (seq.length() != occasion.num_subcarriers)
    throw std::invalid_argument("sequence length " + std::to_string(seq.length()) +
                                " does not match occasion width " + std::to_string(occasion.num_subcarriers));
  if (seq.length() > cell.dft_size)
    throw std::invalid_argument("L_RA " + std::to_string(seq.length()) + " exceeds dft_size " +
                                std::to_string(cell.dft_size));

  ComplexVec spectrum = dft(seq.samples());
  const double scale = amplitude / std::sqrt(static_cast<double>(seq.length()));
  for (auto& v : spectrum) v *= scale;
  return PreambleWaveform{synthesize_occasion(spectrum, occasion, cell), seq, occasion, amplitude};
}

DemappedBins demap_prach(const IqFrame& frame, const PrachOccasion& occasion, const CellConfig& cell) {
  const int cp = cell.effective_cp_length();
  if (frame.start_offset < -cp || frame.start_offset > cp)
    throw std::invalid_argument("frame start_offset " + std::to_string(frame.start_offset) +
                                " misaligned beyond CP tolerance " + std::to_string(cp));
  const auto n_dft = static_cast<std::size_t>(cell.dft_size);
  const auto width = static_cast<std::size_t>(occasion.num_subcarriers);
  if (occasion.first_subcarrier < 0 || occasion.first_subcarrier + width > n_dft)
    throw std::invalid_argument("occasion subcarriers fall outside the transform");

  const std::ptrdiff_t first = cp - frame.start_offset;
  const std::ptrdiff_t end = first + static_cast<std::ptrdiff_t>(kA2Repetitions * n_dft);
  if (first < 0 || end > static_cast<std::ptrdiff_t>(frame.samples.size()))
    throw std::invalid_argument("frame too short for the occasion: need samples [" + std::to_string(first) +
                                ", " + std::to_string(end) + "), have " + std::to_string(frame.samples.size()));

  DemappedBins out;
  out.average.assign(width, Complex{});
  out.repetitions.reserve(kA2Repetitions);
  for (int r = 0; r < kA2Repetitions; ++r) {
    const std::span<const Complex> window(frame.samples.data() + first + r * n_dft, n_dft);
    const ComplexVec spectrum = fft::forward(window);
    ComplexVec bins(spectrum.begin() + occasion.first_subcarrier,
                    spectrum.begin() + occasion.first_subcarrier + static_cast<std::ptrdiff_t>(width));
    for (std::size_t m = 0; m < width; ++m) out.average[m] += bins[m];
    out.repetitions.push_back(std::move(bins));
  }
  for (auto& v : out.average) v /= static_cast<double>(kA2Repetitions);
  return out;
}

}  // namespace prachjam

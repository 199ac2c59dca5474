#pragma once

// Reference implementations used only by tests. They share no code with the
// library paths they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "prachjam/metrics.hpp"
#include "prachjam/prach_map.hpp"

namespace oracle {

using C = std::complex<double>;
using LC = std::complex<long double>;

// ZC sample evaluated in long double straight from the defining formula.
inline C zc_sample(int root, int length, int k) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double phase = pi * root * static_cast<long double>(k) * (k + 1) / length;
  return {static_cast<double>(std::cos(phase)), static_cast<double>(std::sin(phase))};
}

// O(N^2) forward DFT accumulated in long double.
inline std::vector<C> naive_dft(const std::vector<C>& x, int sign = -1) {
  const std::size_t n = x.size();
  const long double pi = 3.141592653589793238462643383279502884L;
  std::vector<C> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    LC acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const long double a = sign * 2.0L * pi * static_cast<long double>((m * k) % n) / n;
      acc += LC(x[k].real(), x[k].imag()) * LC(std::cos(a), std::sin(a));
    }
    out[m] = C(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

// Direct periodic cross-correlation sum.
inline std::vector<C> naive_xcorr(const std::vector<C>& a, const std::vector<C>& b) {
  const std::size_t n = a.size();
  std::vector<C> out(n);
  for (std::size_t l = 0; l < n; ++l) {
    C acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += a[k] * std::conj(b[(k + l) % n]);
    out[l] = acc;
  }
  return out;
}

// Occupied / total resource elements over one PRACH period, counted on a grid
// of (frames * slots * 14) symbols. The bandwidth side uses the fractional
// subcarrier count B_cell / SCS.
inline double brute_force_occupancy(const prachjam::PrachConfig& p, const prachjam::CellConfig& c) {
  const int slots_per_subframe = 1 << c.numerology;
  const int symbols_per_frame = 10 * slots_per_subframe * 14;
  std::int64_t occupied = 0;
  for (int sfn = 0; sfn < p.sfn_modulus; ++sfn) {
    if (sfn % p.sfn_modulus != p.sfn_remainder) continue;
    std::vector<int> grid(static_cast<std::size_t>(symbols_per_frame), 0);
    for (int sf = p.subframe_number; sf < p.subframe_number + p.prach_subframes_per_frame; ++sf)
      for (int sl = 0; sl < p.slots_per_subframe_with_prach; ++sl)
        for (int o = 0; o < p.occasions_per_slot; ++o)
          for (int s = 0; s < p.duration_symbols; ++s) {
            const int slot = sf * slots_per_subframe + p.slot_in_subframe + sl;
            grid[static_cast<std::size_t>(slot * 14 + p.start_symbol + o * p.duration_symbols + s)] += 1;
          }
    for (int v : grid) occupied += static_cast<std::int64_t>(v) * p.preamble_length * p.freq_occasions;
  }
  const double scs = 15e3 * slots_per_subframe;
  const double total = static_cast<double>(p.sfn_modulus) * symbols_per_frame * (c.cell_bandwidth / scs);
  return static_cast<double>(occupied) / total;
}

struct MetricsByHand {
  double n_bar = 0, e_p_j = 0, e_s = 0;
  std::int64_t n_ra_s = 0, n_e = 0, n_p_j = 0;
};

inline MetricsByHand metrics_by_summation(const std::vector<prachjam::IntervalRecord>& rs) {
  MetricsByHand m;
  std::int64_t valid = 0;
  for (const auto& r : rs) {
    if (!r.valid) {
      ++m.n_e;
      continue;
    }
    ++valid;
    for (int i = 0; i < r.preambles_sent - r.preambles_detected; ++i) ++m.n_p_j;
    if (r.ra_succeeded) ++m.n_ra_s;
  }
  m.n_bar = static_cast<double>(m.n_p_j + m.n_ra_s) / static_cast<double>(valid);
  m.e_p_j = m.n_p_j + m.n_ra_s ? static_cast<double>(m.n_ra_s) / static_cast<double>(m.n_p_j + m.n_ra_s) : 0.0;
  m.e_s = static_cast<double>(m.n_ra_s) / static_cast<double>(valid);
  return m;
}

}  // namespace oracle

#include <benchmark/benchmark.h>

#include "prachjam/campaign.hpp"
#include "prachjam/fft.hpp"
#include "prachjam/waveform.hpp"
#include "prachjam/zc.hpp"

using namespace prachjam;

static void BM_GenerateZc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_zc(1, n));
}
BENCHMARK(BM_GenerateZc)->Arg(139)->Arg(839);

static void BM_Fft(benchmark::State& state) {
  ComplexVec x(static_cast<std::size_t>(state.range(0)), Complex(1.0, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(fft::forward(x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fft)->Arg(139)->Arg(256)->Arg(2048);

static void BM_Detect(benchmark::State& state) {
  Rng rng(1);
  ComplexVec bins(139);
  for (auto& b : bins) b = complex_gaussian(rng, 1.0);
  const PreambleDetector det(DetectorConfig{}, 139);
  for (auto _ : state) benchmark::DoNotOptimize(det.detect(bins, PrachOccasion{}));
}
BENCHMARK(BM_Detect);

// modulate + jam + channel + demap + detect for one occasion
static void BM_Occasion(benchmark::State& state) {
  const CellConfig cell = state.range(0) ? cell_preset_full() : cell_preset_desk();
  const PrachOccasion occ = occasions_in_frame(prach_preset_index98(), cell, 1).front();
  const PreambleDetector det(DetectorConfig{}, 139);
  const ZcSequence seq = cyclic_shift(generate_zc(1, 139), 26);
  JammerConfig jam_cfg;
  ChannelConfig ch;
  ch.noise_sigma = noise_sigma_for_bin_snr(1.0, 0.0, cell.dft_size);
  Rng rng(3);
  for (auto _ : state) {
    const auto wf = modulate_preamble(seq, occ, cell, 1.0);
    const IqFrame jam = generate_jamming_frame(jam_cfg, occ, cell, amplitude_from_snr(1.0, -6.0), rng);
    const IqFrame rx = superpose(&wf.frame, &jam, ch, rng);
    benchmark::DoNotOptimize(det.detect(demap_prach(rx, occ, cell).average, occ));
  }
}
BENCHMARK(BM_Occasion)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_Interval60s(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.interval_duration = 60.0;
  cfg.simulate_idle_occasions = state.range(0) != 0;
  int i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_interval(cfg, i++));
}
BENCHMARK(BM_Interval60s)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

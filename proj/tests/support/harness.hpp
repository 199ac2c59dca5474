#pragma once

// Shared scaffolding for unit and acceptance tests.

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prachjam/prach_map.hpp"
#include "prachjam/ra_fsm.hpp"

namespace harness {

using namespace prachjam;

// Random but valid PRACH/cell pair for the occupancy equivalence checks.
inline std::pair<PrachConfig, CellConfig> random_prach_setup(std::mt19937& rng) {
  const auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  CellConfig cell = cell_preset_full();
  cell.numerology = uniform(0, 2);
  cell.cell_bandwidth = 5e6 * uniform(1, 20);
  PrachConfig c;
  c.preamble_length = uniform(0, 3) == 0 ? 839 : 139;
  c.freq_occasions = uniform(1, 4);
  c.sfn_modulus = 1 << uniform(0, 4);
  c.sfn_remainder = uniform(0, c.sfn_modulus - 1);
  c.prach_subframes_per_frame = uniform(1, 4);
  c.subframe_number = uniform(0, 10 - c.prach_subframes_per_frame);
  const int slots = 1 << cell.numerology;
  c.slots_per_subframe_with_prach = uniform(1, slots);
  c.slot_in_subframe = uniform(0, slots - c.slots_per_subframe_with_prach);
  c.start_symbol = uniform(0, 2);
  c.occasions_per_slot = uniform(1, (14 - c.start_symbol) / 4);
  c.duration_symbols = 4;
  validate(c);
  return {c, cell};
}

inline const OccasionKey kOcc{1, 19, 0, 0};

inline UeRaParams params_for(std::optional<Signature> sig = std::nullopt) {
  UeRaParams p;
  p.fixed_signature = sig;
  return p;
}

inline DetectionResult detections_of(const std::vector<Signature>& sigs) {
  DetectionResult r;
  r.occasion.sfn = kOcc.sfn;
  r.occasion.slot = kOcc.slot;
  for (const auto& s : sigs) r.detected.push_back({s, 1.0, 0});
  return r;
}

struct Exchange {
  std::vector<UeRaState> ues;
  GnbRaContext gnb;
  std::map<std::size_t, TempId> connected_with;
};

// All UEs send in the same occasion; the gNB hears every distinct signature.
// RAR at +4 ms, Msg4 at +8 ms.
inline Exchange run_exchange(const std::vector<Signature>& choice) {
  Exchange ex;
  Rng rng(1);
  std::vector<Signature> sent;
  for (std::size_t u = 0; u < choice.size(); ++u) {
    UeRaState ue;
    ue.unique_id = 100 + u;
    const DownlinkEvent opp = PrachOpportunity{kOcc};
    auto res = ue_step(ue, 0.0, std::span(&opp, 1), rng, params_for(choice[u]));
    if (!res.action) throw std::logic_error("UE did not transmit in its occasion");
    sent.push_back(std::get<PreambleTx>(*res.action).signature);
    ex.ues.push_back(res.ue);
  }
  std::sort(sent.begin(), sent.end());
  sent.erase(std::unique(sent.begin(), sent.end()), sent.end());

  auto rar = gnb_step(ex.gnb, detections_of(sent), {});
  ex.gnb = rar.ctx;
  std::vector<Msg3Arrival> msg3s;
  for (std::size_t u = 0; u < ex.ues.size(); ++u) {
    auto res = ue_step(ex.ues[u], 4.0, rar.events, rng, params_for(choice[u]));
    ex.ues[u] = res.ue;
    if (res.action) {
      const auto& m = std::get<Msg3Tx>(*res.action);
      msg3s.push_back({m.temp_id, m.unique_id, m.time_ms});
    }
  }
  auto msg4 = gnb_step(ex.gnb, DetectionResult{}, msg3s);
  ex.gnb = msg4.ctx;
  for (std::size_t u = 0; u < ex.ues.size(); ++u) {
    const TempId tid = ex.ues[u].temp_id.value_or(0);
    ex.ues[u] = ue_step(ex.ues[u], 8.0, msg4.events, rng, params_for(choice[u])).ue;
    if (ex.ues[u].state == UeState::Connected) ex.connected_with[u] = tid;
  }
  return ex;
}

}  // namespace harness

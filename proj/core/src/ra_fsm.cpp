#include "prachjam/ra_fsm.hpp"

#include <algorithm>

namespace prachjam {

OccasionKey key_of(const PrachOccasion& occasion) {
  return {occasion.sfn, occasion.slot, occasion.occasion_index, occasion.freq_index};
}

std::string_view to_string(UeState state) {
  switch (state) {
    case UeState::Idle: return "IDLE";
    case UeState::WaitRar: return "WAIT_RAR";
    case UeState::WaitMsg4: return "WAIT_MSG4";
    case UeState::Connected: return "CONNECTED";
    case UeState::Backoff: return "BACKOFF";
  }
  return "?";
}

namespace {

Signature draw_signature(Rng& rng, const UeRaParams& params) {
  if (params.fixed_signature) return *params.fixed_signature;
  const int total = static_cast<int>(params.roots.size()) * params.signatures_per_root;
  std::uniform_int_distribution<int> pick(0, total - 1);
  const int s = pick(rng);
  return {params.roots[static_cast<std::size_t>(s / params.signatures_per_root)], s % params.signatures_per_root};
}

void fall_back(UeRaState& ue, double now_ms) {
  ue.chosen_signature.reset();
  ue.temp_id.reset();
  ue.state = now_ms >= ue.retry_timer_ms ? UeState::Idle : UeState::Backoff;
}

}  // namespace

UeStepResult ue_step(UeRaState ue, double now_ms, std::span<const DownlinkEvent> events, Rng& rng,
                     const UeRaParams& params) {
  std::optional<UplinkAction> action;

  if ((ue.state == UeState::WaitRar || ue.state == UeState::WaitMsg4) && now_ms >= ue.response_deadline_ms)
    fall_back(ue, now_ms);
  if (ue.state == UeState::Backoff && now_ms >= ue.retry_timer_ms) ue.state = UeState::Idle;

  for (const auto& event : events) {
    if (const auto* opp = std::get_if<PrachOpportunity>(&event)) {
      if (ue.state != UeState::Idle || now_ms < ue.retry_timer_ms || action) continue;
      const Signature sig = draw_signature(rng, params);
      ue.state = UeState::WaitRar;
      ue.chosen_signature = sig;
      ue.tx_occasion = opp->occasion;
      ue.retry_timer_ms = now_ms + params.retry_period_ms;
      ue.response_deadline_ms = now_ms + params.rar_window_ms;
      ++ue.preambles_sent;
      action = PreambleTx{opp->occasion, sig};
    } else if (const auto* rar = std::get_if<RandomAccessResponse>(&event)) {
      if (ue.state != UeState::WaitRar) continue;  // not waiting; someone else's RAR
      if (rar->occasion != ue.tx_occasion || rar->signature != *ue.chosen_signature) continue;
      ue.state = UeState::WaitMsg4;
      ue.temp_id = rar->temp_id;
      ue.response_deadline_ms = now_ms + params.rar_window_ms;
      if (!action) action = Msg3Tx{rar->temp_id, ue.unique_id, now_ms};
    } else if (const auto* msg4 = std::get_if<ContentionResolution>(&event)) {
      if (ue.state != UeState::WaitMsg4) {
        if (ue.state == UeState::Connected || ue.state == UeState::Idle) ++ue.ignored_events;
        continue;
      }
      if (msg4->temp_id != *ue.temp_id) continue;
      if (msg4->winner == ue.unique_id) {
        ue.state = UeState::Connected;
        ue.chosen_signature.reset();
      } else {
        fall_back(ue, now_ms);
      }
    }
  }
  return {std::move(ue), action};
}

GnbStepResult gnb_step(GnbRaContext ctx, const DetectionResult& detections, std::span<const Msg3Arrival> msg3s) {
  std::vector<DownlinkEvent> events;
  const OccasionKey occasion = key_of(detections.occasion);
  for (const auto& det : detections.detected) {
    const auto key = std::make_pair(occasion, det.signature);
    if (ctx.pending_rar.contains(key)) continue;
    const TempId id = ctx.next_temp_id++;
    ctx.pending_rar.emplace(key, id);
    events.emplace_back(RandomAccessResponse{occasion, det.signature, id});
  }

  std::map<TempId, const Msg3Arrival*> winners;
  for (const auto& m : msg3s) {
    ctx.msg3_received[m.temp_id].push_back(m.unique_id);
    auto [it, inserted] = winners.emplace(m.temp_id, &m);
    if (inserted) continue;
    const Msg3Arrival& cur = *it->second;
    if (m.time_ms < cur.time_ms || (m.time_ms == cur.time_ms && m.unique_id < cur.unique_id)) it->second = &m;
  }
  for (const auto& [id, m] : winners) events.emplace_back(ContentionResolution{id, m->unique_id});
  return {std::move(ctx), std::move(events)};
}

}  // namespace prachjam

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "prachjam/detector.hpp"
#include "prachjam/prach_map.hpp"
#include "prachjam/types.hpp"

namespace prachjam {

// Identifies one PRACH occasion; RARs are addressed to the occasion the
// preamble was sent in (the RA-RNTI role), so a UE never reacts to responses
// for another occasion.
struct OccasionKey {
  int sfn = 0;
  int slot = 0;
  int occasion_index = 0;
  int freq_index = 0;

  friend auto operator<=>(const OccasionKey&, const OccasionKey&) = default;
};

OccasionKey key_of(const PrachOccasion& occasion);

enum class UeState { Idle, WaitRar, WaitMsg4, Connected, Backoff };

std::string_view to_string(UeState state);

using TempId = std::uint32_t;
using UniqueId = std::uint64_t;

// Downlink events seen by a UE.
struct PrachOpportunity {
  OccasionKey occasion;
};
struct RandomAccessResponse {
  OccasionKey occasion;
  Signature signature;
  TempId temp_id = 0;
};
struct ContentionResolution {
  TempId temp_id = 0;
  UniqueId winner = 0;
};
using DownlinkEvent = std::variant<PrachOpportunity, RandomAccessResponse, ContentionResolution>;

// Uplink actions produced by a UE.
struct PreambleTx {
  OccasionKey occasion;
  Signature signature;
};
struct Msg3Tx {
  TempId temp_id = 0;
  UniqueId unique_id = 0;
  double time_ms = 0.0;
};
using UplinkAction = std::variant<PreambleTx, Msg3Tx>;

struct UeRaParams {
  double retry_period_ms = 100.0;
  double rar_window_ms = 20.0;
  std::vector<int> roots{1};
  int signatures_per_root = 10;
  // Replaces the uniform draw; used for exhaustive contention checks.
  std::optional<Signature> fixed_signature;
};

struct UeRaState {
  UeState state = UeState::Idle;
  std::optional<Signature> chosen_signature;  // set iff WaitRar or WaitMsg4
  double retry_timer_ms = 0.0;                // virtual time the next preamble is allowed
  double response_deadline_ms = 0.0;          // RAR or Msg4 wait ends
  OccasionKey tx_occasion;
  std::optional<TempId> temp_id;
  int preambles_sent = 0;
  int ignored_events = 0;
  UniqueId unique_id = 0;
};

struct UeStepResult {
  UeRaState ue;
  std::optional<UplinkAction> action;
};

// Advances one UE to time `now_ms` and applies `events` in order.
//   Idle + PrachOpportunity, retry timer elapsed -> WaitRar, preamble sent
//   WaitRar + RAR for (tx occasion, chosen signature) -> WaitMsg4, Msg3 sent
//   WaitMsg4 + resolution naming this UE -> Connected (terminal)
//   WaitMsg4 + resolution naming another UE -> Idle/Backoff
//   response deadline passed -> Backoff until the retry timer elapses -> Idle
UeStepResult ue_step(UeRaState ue, double now_ms, std::span<const DownlinkEvent> events, Rng& rng,
                     const UeRaParams& params);

struct Msg3Arrival {
  TempId temp_id = 0;
  UniqueId unique_id = 0;
  double time_ms = 0.0;
};

struct GnbRaContext {
  std::map<std::pair<OccasionKey, Signature>, TempId> pending_rar;
  std::map<TempId, std::vector<UniqueId>> msg3_received;
  TempId next_temp_id = 1;
};

struct GnbStepResult {
  GnbRaContext ctx;
  std::vector<DownlinkEvent> events;
};

// One RAR with a fresh temporary identifier per detected signature; for each
// temporary identifier in `msg3s`, one Msg4 naming the earliest arrival (ties
// to the lowest unique id).
GnbStepResult gnb_step(GnbRaContext ctx, const DetectionResult& detections, std::span<const Msg3Arrival> msg3s);

}  // namespace prachjam

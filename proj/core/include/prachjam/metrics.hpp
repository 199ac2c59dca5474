#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace prachjam {

// Exact non-negative fraction, always stored reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct IntervalRecord {
  int index = 0;
  bool valid = true;
  int preambles_sent = 0;
  int preambles_detected = 0;
  bool ra_succeeded = false;
  std::optional<double> time_to_success;  // seconds after the UE started
  std::uint64_t seed = 0;

  friend bool operator==(const IntervalRecord&, const IntervalRecord&) = default;
};

// Aggregated interval outcomes.
struct MetricCounts {
  std::int64_t n_i = 0;
  std::int64_t n_ra_s = 0;
  std::int64_t n_e = 0;
  std::int64_t n_p_j = 0;
  std::int64_t preambles_sent_valid = 0;  // sum of preambles_sent over valid intervals
};

struct MetricsSummary {
  std::int64_t n_i = 0;
  std::int64_t n_ra_s = 0;
  std::int64_t n_ra_u = 0;  // valid, unsuccessful
  std::int64_t n_e = 0;
  std::int64_t n_p_j = 0;
  Rational mean_preambles_per_interval;        // (N_P,j + N_RA,s) / (N_i - N_e)
  Rational mean_preambles_sent_per_interval;   // sum(sent) / (N_i - N_e)
  Rational e_p_j;                              // N_RA,s / (N_P,j + N_RA,s)
  Rational e_s;                                // N_RA,s / (N_i - N_e)

  double e_p_j_ppm() const noexcept { return e_p_j.to_double() * 1e6; }
};

// Throws std::invalid_argument when every interval is invalid.
MetricsSummary compute_metrics(const MetricCounts& counts);

// N_P,j sums (sent - detected) over valid intervals. Throws on empty input.
MetricsSummary compute_metrics(std::span<const IntervalRecord> records);

MetricCounts tally(std::span<const IntervalRecord> records);

}  // namespace prachjam

#include "prachjam/metrics.hpp"

#include <numeric>
#include <stdexcept>

namespace prachjam {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

MetricCounts tally(std::span<const IntervalRecord> records) {
  MetricCounts c;
  c.n_i = static_cast<std::int64_t>(records.size());
  for (const auto& r : records) {
    if (!r.valid) {
      ++c.n_e;
      continue;
    }
    if (r.ra_succeeded) ++c.n_ra_s;
    c.n_p_j += r.preambles_sent - r.preambles_detected;
    c.preambles_sent_valid += r.preambles_sent;
  }
  return c;
}

MetricsSummary compute_metrics(const MetricCounts& c) {
  const std::int64_t valid = c.n_i - c.n_e;
  if (valid <= 0) throw std::invalid_argument("no valid intervals; metrics are undefined");
  MetricsSummary s;
  s.n_i = c.n_i;
  s.n_ra_s = c.n_ra_s;
  s.n_e = c.n_e;
  s.n_ra_u = valid - c.n_ra_s;
  s.n_p_j = c.n_p_j;
  s.mean_preambles_per_interval = Rational(c.n_p_j + c.n_ra_s, valid);
  s.mean_preambles_sent_per_interval = Rational(c.preambles_sent_valid, valid);
  const std::int64_t total = c.n_p_j + c.n_ra_s;
  s.e_p_j = total > 0 ? Rational(c.n_ra_s, total) : Rational(0, 1);
  s.e_s = Rational(c.n_ra_s, valid);
  return s;
}

MetricsSummary compute_metrics(std::span<const IntervalRecord> records) {
  if (records.empty()) throw std::invalid_argument("no interval records");
  return compute_metrics(tally(records));
}

}  // namespace prachjam

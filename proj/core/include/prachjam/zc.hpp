#pragma once

#include <span>

#include "prachjam/types.hpp"

namespace prachjam {

// Zadoff-Chu sequence x_U(k) = exp(j pi U k (k+1) / N), optionally cyclically
// shifted: samples[k] = x_U((k + shift) mod N).
class ZcSequence {
 public:
  int root() const noexcept { return root_; }
  int length() const noexcept { return static_cast<int>(samples_.size()); }
  int shift() const noexcept { return shift_; }
  std::span<const Complex> samples() const noexcept { return samples_; }
  const Complex& operator[](std::size_t k) const { return samples_[k]; }

  friend bool operator==(const ZcSequence&, const ZcSequence&) = default;

 private:
  friend ZcSequence generate_zc(int root, int length);
  friend ZcSequence cyclic_shift(const ZcSequence& seq, int shift);

  ZcSequence() = default;

  int root_ = 0;
  int shift_ = 0;
  ComplexVec samples_;
};

struct CorrelationProfile {
  ComplexVec values;
  double normalization = 1.0;
};

// Throws std::invalid_argument for an even or too short length, a root outside
// [1, length) and a root sharing a factor with length.
ZcSequence generate_zc(int root, int length);

// Requires 0 <= shift < length.
ZcSequence cyclic_shift(const ZcSequence& seq, int shift);

// values[l] = sum_k a[k] * conj(b[(k + l) mod N]), divided by N when normalize.
CorrelationProfile periodic_xcorr(std::span<const Complex> a, std::span<const Complex> b,
                                  bool normalize);
CorrelationProfile periodic_xcorr(const ZcSequence& a, const ZcSequence& b, bool normalize);

// Unnormalized forward DFT and its inverse (scaled by 1/N).
ComplexVec dft(std::span<const Complex> seq);
ComplexVec idft(std::span<const Complex> spectrum);

}  // namespace prachjam

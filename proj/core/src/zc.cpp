#include "prachjam/zc.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "prachjam/fft.hpp"

namespace prachjam {

ZcSequence generate_zc(int root, int length) {
  if (length < 3) throw std::invalid_argument("zc length must be >= 3, got " + std::to_string(length));
  if (length % 2 == 0) throw std::invalid_argument("zc length must be odd, got " + std::to_string(length));
  if (root < 1 || root >= length)
    throw std::invalid_argument("zc root " + std::to_string(root) + " outside [1, " +
                                std::to_string(length) + ")");
  if (std::gcd(root, length) != 1)
    throw std::invalid_argument("zc root " + std::to_string(root) + " is not coprime with length " +
                                std::to_string(length));

  ZcSequence seq;
  seq.root_ = root;
  seq.samples_.resize(static_cast<std::size_t>(length));
  // Reduce the phase argument mod 2N in integers before going to floating
  // point; u*k*(k+1) overflows double precision long before int64.
  const std::int64_t two_n = 2LL * length;
  for (std::int64_t k = 0; k < length; ++k) {
    const std::int64_t p = (static_cast<std::int64_t>(root) * ((k * (k + 1)) % two_n)) % two_n;
    const double phase = kPi * static_cast<double>(p) / static_cast<double>(length);
    seq.samples_[static_cast<std::size_t>(k)] = std::polar(1.0, phase);
  }
  return seq;
}

ZcSequence cyclic_shift(const ZcSequence& seq, int shift) {
  const int n = seq.length();
  if (shift < 0 || shift >= n)
    throw std::invalid_argument("cyclic shift " + std::to_string(shift) + " outside [0, " +
                                std::to_string(n) + ")");
  ZcSequence out;
  out.root_ = seq.root_;
  out.shift_ = (seq.shift_ + shift) % n;
  out.samples_.resize(seq.samples_.size());
  for (int k = 0; k < n; ++k) out.samples_[k] = seq.samples_[(k + shift) % n];
  return out;
}

CorrelationProfile periodic_xcorr(std::span<const Complex> a, std::span<const Complex> b,
                                  bool normalize) {
  if (a.size() != b.size())
    throw std::invalid_argument("periodic_xcorr length mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  const std::size_t n = a.size();
  CorrelationProfile out;
  out.values.assign(n, Complex{});
  if (n == 0) return out;
  out.normalization = normalize ? static_cast<double>(n) : 1.0;

  // sum_k a[k] conj(b[k+l]) = (1/N) * DFT(A . conj(B))[l]
  const ComplexVec fa = fft::forward(a);
  const ComplexVec fb = fft::forward(b);
  ComplexVec prod(n);
  for (std::size_t m = 0; m < n; ++m) prod[m] = fa[m] * std::conj(fb[m]);
  const ComplexVec raw = fft::forward(prod);
  const double scale = 1.0 / (static_cast<double>(n) * out.normalization);
  for (std::size_t l = 0; l < n; ++l) out.values[l] = raw[l] * scale;
  return out;
}

CorrelationProfile periodic_xcorr(const ZcSequence& a, const ZcSequence& b, bool normalize) {
  return periodic_xcorr(a.samples(), b.samples(), normalize);
}

ComplexVec dft(std::span<const Complex> seq) { return fft::forward(seq); }

ComplexVec idft(std::span<const Complex> spectrum) { return fft::inverse(spectrum); }

}  // namespace prachjam

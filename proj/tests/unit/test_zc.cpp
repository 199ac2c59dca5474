#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prachjam/zc.hpp"

using namespace prachjam;

namespace {
std::vector<Complex> as_vec(const ZcSequence& s) { return {s.samples().begin(), s.samples().end()}; }
}  // namespace

TEST_CASE("generate_zc first samples") {
  const auto seq = generate_zc(1, 139);
  CHECK(seq.length() == 139);
  CHECK(seq.shift() == 0);
  CHECK(seq[0].real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(seq[0].imag()) < 1e-15);

  // exp(j 2 pi / 139)
  const Complex expected = oracle::zc_sample(1, 139, 1);
  CHECK(std::abs(seq[1] - expected) < 1e-12);
  CHECK(std::arg(seq[1]) == doctest::Approx(0.0452027).epsilon(1e-5));
}

TEST_CASE("generate_zc matches the long-double formula for every sample") {
  for (int root : {1, 2, 25, 138}) {
    const auto seq = generate_zc(root, 139);
    for (int k = 0; k < 139; ++k) CHECK(std::abs(seq[k] - oracle::zc_sample(root, 139, k)) < 1e-12);
  }
  const auto long_seq = generate_zc(129, 839);
  for (int k = 0; k < 839; k += 7) CHECK(std::abs(long_seq[k] - oracle::zc_sample(129, 839, k)) < 1e-12);
}

TEST_CASE("generate_zc is unit magnitude") {
  for (int root = 1; root < 139; ++root) {
    const auto seq = generate_zc(root, 139);
    for (const auto& s : seq.samples()) REQUIRE(std::abs(std::abs(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("generate_zc rejects invalid parameters with distinct messages") {
  std::string even, range, coprime;
  try { generate_zc(1, 140); } catch (const std::invalid_argument& e) { even = e.what(); }
  try { generate_zc(139, 139); } catch (const std::invalid_argument& e) { range = e.what(); }
  try { generate_zc(3, 21); } catch (const std::invalid_argument& e) { coprime = e.what(); }
  CHECK(even.find("odd") != std::string::npos);
  CHECK(range.find("outside") != std::string::npos);
  CHECK(coprime.find("coprime") != std::string::npos);
  CHECK(even != range);
  CHECK(range != coprime);
  CHECK_THROWS_AS(generate_zc(0, 139), std::invalid_argument);
  CHECK_THROWS_AS(generate_zc(1, 1), std::invalid_argument);
}

TEST_CASE("cyclic_shift") {
  const auto seq = generate_zc(1, 139);
  CHECK(cyclic_shift(seq, 0) == seq);
  CHECK_THROWS_AS(cyclic_shift(seq, 139), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_shift(seq, -1), std::invalid_argument);

  const auto shifted = cyclic_shift(seq, 5);
  CHECK(shifted.shift() == 5);
  CHECK(shifted[0] == seq[5]);
  CHECK(shifted[138] == seq[4]);
  CHECK(cyclic_shift(shifted, 134) == seq);
}

TEST_CASE("cyclic_shift composes additively mod N") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 138);
  const auto seq = generate_zc(7, 139);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = pick(rng), b = pick(rng);
    const auto twice = cyclic_shift(cyclic_shift(seq, a), b);
    const auto once = cyclic_shift(seq, (a + b) % 139);
    REQUIRE(twice == once);
  }
}

TEST_CASE("periodic_xcorr autocorrelation") {
  const auto seq = generate_zc(1, 139);
  const auto prof = periodic_xcorr(seq, seq, true);
  CHECK(prof.normalization == 139.0);
  CHECK(std::abs(prof.values[0]) == doctest::Approx(1.0).epsilon(1e-12));
  for (int l = 1; l < 139; ++l) CHECK(std::abs(prof.values[l]) < 1e-9);
}

TEST_CASE("periodic_xcorr cross-correlation is 1/sqrt(N)") {
  const auto a = generate_zc(1, 139);
  const auto b = generate_zc(2, 139);
  const auto prof = periodic_xcorr(a, b, true);
  for (const auto& v : prof.values) CHECK(std::abs(std::abs(v) - 1.0 / std::sqrt(139.0)) < 1e-9);
}

TEST_CASE("periodic_xcorr agrees with the direct sum") {
  const auto a = as_vec(generate_zc(3, 139));
  const auto b = as_vec(cyclic_shift(generate_zc(5, 139), 17));
  const auto fast = periodic_xcorr(a, b, false);
  const auto slow = oracle::naive_xcorr(a, b);
  for (std::size_t l = 0; l < a.size(); ++l) CHECK(std::abs(fast.values[l] - slow[l]) < 1e-9);
}

TEST_CASE("periodic_xcorr of zeros and mismatched lengths") {
  const ComplexVec zeros(139);
  const auto seq = generate_zc(1, 139);
  const auto prof = periodic_xcorr(zeros, seq.samples(), true);
  for (const auto& v : prof.values) CHECK(v == Complex{});
  const ComplexVec shorter(138);
  CHECK_THROWS_AS(periodic_xcorr(shorter, seq.samples(), false), std::invalid_argument);
}

TEST_CASE("dft of an impulse is flat") {
  ComplexVec impulse(139);
  impulse[0] = 1.0;
  for (const auto& v : dft(impulse)) CHECK(std::abs(v - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("dft of a ZC sequence matches the O(N^2) oracle and has flat magnitude") {
  const auto seq = as_vec(generate_zc(1, 139));
  const auto fast = dft(seq);
  const auto slow = oracle::naive_dft(seq);
  for (std::size_t m = 0; m < seq.size(); ++m) {
    CHECK(std::abs(fast[m] - slow[m]) < 1e-9);
    CHECK(std::abs(std::abs(fast[m]) - std::sqrt(139.0)) < 1e-9);
  }
}

TEST_CASE("dft round trip and empty input") {
  std::mt19937 rng(5);
  std::normal_distribution<double> n;
  ComplexVec x(139);
  for (auto& v : x) v = {n(rng), n(rng)};
  const auto back = idft(dft(x));
  for (std::size_t k = 0; k < x.size(); ++k) CHECK(std::abs(back[k] - x[k]) < 1e-9);
  CHECK_THROWS_AS(dft(ComplexVec{}), std::invalid_argument);
}

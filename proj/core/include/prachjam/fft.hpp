#pragma once

#include <span>

#include "prachjam/types.hpp"

// Thin wrapper over FFTW. Plans are created once per (size, direction) and
// shared; execution uses the new-array interface and is safe to call from
// several threads at once.
namespace prachjam::fft {

// Unnormalized forward transform: X[m] = sum_k x[k] exp(-j 2 pi m k / N).
ComplexVec forward(std::span<const Complex> in);

// Inverse transform scaled by 1/N, so inverse(forward(x)) == x.
ComplexVec inverse(std::span<const Complex> in);

// Unnormalized inverse transform: x[k] = sum_m X[m] exp(+j 2 pi m k / N).
ComplexVec backward(std::span<const Complex> in);

}  // namespace prachjam::fft

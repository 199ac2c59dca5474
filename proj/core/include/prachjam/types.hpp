#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace prachjam {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

// Every random draw in the simulator goes through an explicitly seeded
// engine of this type.
using Rng = std::mt19937_64;

// Circularly symmetric complex Gaussian with E|z|^2 = 2 sigma^2.
inline Complex complex_gaussian(Rng& rng, double sigma) {
  std::normal_distribution<double> n(0.0, sigma);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

// Raised for malformed or out-of-range configuration. `field` carries the
// dotted path of the offending entry when it is known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace prachjam

#include "prachjam/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace prachjam::fft {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    // Planner calls are not thread safe; they only happen under the lock.
    ComplexVec scratch_in(n), scratch_out(n);
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(n), reinterpret_cast<fftw_complex*>(scratch_in.data()),
        reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

ComplexVec execute(std::span<const Complex> in, int sign) {
  if (in.empty()) throw std::invalid_argument("dft input must be nonempty");
  ComplexVec src(in.begin(), in.end());
  ComplexVec out(in.size());
  fftw_execute_dft(cache().get(in.size(), sign),
                   reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

ComplexVec forward(std::span<const Complex> in) { return execute(in, FFTW_FORWARD); }

ComplexVec backward(std::span<const Complex> in) { return execute(in, FFTW_BACKWARD); }

ComplexVec inverse(std::span<const Complex> in) {
  ComplexVec out = execute(in, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace prachjam::fft

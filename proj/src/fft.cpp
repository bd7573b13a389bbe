#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tidfd::detail {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    // Planning with FFTW_ESTIMATE leaves the scratch buffers untouched; the
    // plan is then reused on arbitrary (unaligned) arrays.
    std::vector<fftw_complex> a(n), b(n);
    fftw_plan plan = fftw_plan_dft_1d(n, a.data(), b.data(), sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw planning failed");
    plans_.emplace(std::pair{n, sign}, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(std::span<const std::complex<double>> in, std::span<std::complex<double>> out, int sign) {
  if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
  const int n = static_cast<int>(in.size());
  fftw_plan plan = cache().get(n, sign);
  // fftw_execute_dft does not modify the input for out-of-place plans.
  std::vector<std::complex<double>> scratch(in.begin(), in.end());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(scratch.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void fft_forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  execute(in, out, FFTW_FORWARD);
}

void fft_backward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  execute(in, out, FFTW_BACKWARD);
}

}  // namespace tidfd::detail

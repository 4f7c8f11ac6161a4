#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace stable_info::detail {

namespace {

std::mutex plan_mutex;

fftw_plan plan_for(std::size_t n, bool backward) {
  static std::map<std::pair<std::size_t, bool>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, backward);
  auto it = plans.find(key);
  if (it != plans.end()) return it->second;
  fftw_complex* buf = fftw_alloc_complex(n);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, backward ? FFTW_BACKWARD : FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  plans.emplace(key, p);
  return p;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a, bool backward) {
  if (a.size() < 2) return;
  auto* data = reinterpret_cast<fftw_complex*>(a.data());
  fftw_execute_dft(plan_for(a.size(), backward), data, data);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace stable_info::detail

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace stable_info::detail {

// In-place unnormalized DFT, sign -1 (forward) or +1 (backward).
void fft_inplace(std::vector<std::complex<double>>& a, bool backward = false);

std::size_t next_pow2(std::size_t n);

}  // namespace stable_info::detail

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace stable_info::detail {

// mt19937_64 seeded from (seed, stream); uniforms built from the top 53 bits
// so draws do not depend on the standard library's distributions.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    eng_.seed(seq);
  }
  // Open interval (0, 1).
  double uniform() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53; }
  double exponential() { return -std::log(uniform()); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace stable_info::detail

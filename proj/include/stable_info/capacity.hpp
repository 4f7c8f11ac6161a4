#pragma once

#include <cstddef>
#include <cstdint>

#include "stable_info/density.hpp"

namespace stable_info {

// Additive S(alpha, gamma_N) noise channel with output alpha-power at most A.
struct ChannelSpec {
  double alpha = 1.5;
  double gamma_N = 1.0;
  double A = 3.0;
  int d = 1;

  /// P_alpha(N) = alpha^(1/alpha) gamma_N.
  double noise_power() const;
  /// Throws DomainError on bad parameters or A < P_alpha(N).
  void validate() const;
};

/// d ln(A / P_alpha(N)).
double capacity_stable(const ChannelSpec& spec);

/// Scale of the capacity-achieving stable input; 0 when A = P_alpha(N).
double optimal_input_scale(const ChannelSpec& spec);

/// C(x, P) = -E_N ln p_Z~((x + N) / P), N ~ S(alpha, gamma_N).
double cost_function(double x, double P, double alpha, double gamma_N);

// Average divergence E_X D(p_N(. - X) || p_{P Z~}) for the optimal input at P = A,
// against ln(A / P_alpha(N)).
struct CostCheck {
  double P = 0.0;
  double mean_divergence = 0.0;
  double target = 0.0;
  double std_error = 0.0;
  double rel_error = 0.0;
  std::size_t samples = 0;
};

CostCheck cost_constraint_check(const ChannelSpec& spec, std::size_t samples = 20000, std::uint64_t seed = 1);

// Realized optimal output S(alpha, gamma_X*) + N on a grid.
struct OutputCheck {
  double alpha_power = 0.0;  // numeric root on the realized density
  double entropy = 0.0;
  double entropy_target = 0.0;  // h(Z~) + ln A
};

OutputCheck optimal_output_check(const ChannelSpec& spec, const GridOptions& opt = {});

}  // namespace stable_info

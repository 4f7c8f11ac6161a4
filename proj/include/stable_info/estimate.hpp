#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stable_info/stable.hpp"

namespace stable_info {

/// (d kappa_alpha / J)^(1/alpha), 1 < alpha <= 2.
double crb_general(double j_alpha_n, double alpha, int d = 1);

/// (alpha kappa_alpha)^(1/alpha) gamma_N.
double crb_stable(double alpha, double gamma_N, int d = 1);

enum class Estimator { ml_identity, sample_mean, sample_median, myriad };

std::string to_string(Estimator e);
/// "ml", "ml_identity", "mean", "sample_mean", "median", "sample_median", "myriad".
Estimator parse_estimator(const std::string& s);

struct EstimatorConfig {
  Estimator estimator = Estimator::ml_identity;
  double theta_true = 0.0;
  StableParams noise = StableParams::symmetric(1.8, 1.0);
  std::size_t trials = 10000;
  std::size_t samples_per_trial = 1;
  std::uint64_t seed = 1;
  double K = 0.0;  // myriad tuning; 0 means gamma_N
};

struct EstimatorRun {
  EstimatorConfig config;
  std::vector<double> errors;  // one per kept trial
  double error_alpha_power = 0.0;
  double error_alpha_power_se = 0.0;
  double crb = 0.0;  // crb_stable scaled by n^(-1/alpha)
  std::size_t flagged = 0;  // trials whose optimizer did not converge
};

/// Monte Carlo run; trial i draws its noise from stream i of `seed`.
EstimatorRun run_estimator(const EstimatorConfig& cfg);

/// argmin over theta of sum ln(K^2 + (x_i - theta)^2).
double myriad_estimate(const std::vector<double>& samples, double K);

/// argmax over theta of sum ln p(x_i - theta) for S(alpha, gamma) noise.
double ml_location(const std::vector<double>& samples, double alpha, double gamma);

}  // namespace stable_info

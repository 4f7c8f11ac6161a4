#include "stable_info/estimate.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>

#include "stable_info/alphapower.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/law.hpp"
#include "stable_info/specfun.hpp"

namespace stable_info {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError(std::string(who) + ": alpha must lie in (1, 2]");
}

struct Located {
  double theta;
  bool converged;
};

// Seed at every distinct sample point, scan the two gaps next to the best
// seed, then polish the scan minimum with Brent.
template <class F>
Located locate(const std::vector<double>& xs, F&& cost, double pad) {
  if (xs.empty()) throw DomainError("location estimate of an empty sample");
  std::vector<double> s = xs;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::size_t best = 0;
  double fbest = cost(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double f = cost(s[i]);
    if (f < fbest) {
      fbest = f;
      best = i;
    }
  }
  double theta = s[best];
  const double lo = best > 0 ? s[best - 1] : s[best] - pad;
  const double hi = best + 1 < s.size() ? s[best + 1] : s[best] + pad;
  constexpr int scan = 64;
  const double step = (hi - lo) / scan;
  for (int k = 0; k <= scan; ++k) {
    const double t = lo + k * step;
    const double f = cost(t);
    if (f < fbest) {
      fbest = f;
      theta = t;
    }
  }
  constexpr boost::uintmax_t max_iter = 200;
  boost::uintmax_t iter = max_iter;
  const auto r = boost::math::tools::brent_find_minima(cost, std::max(lo, theta - step), std::min(hi, theta + step),
                                                       std::numeric_limits<double>::digits / 2, iter);
  return {r.second < fbest ? r.first : theta, iter < max_iter};
}

double median(std::vector<double> v) {
  const std::size_t m = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
  if (v.size() % 2 == 1) return v[m];
  const double upper = v[m];
  return 0.5 * (upper + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)));
}

double myriad_cost(const std::vector<double>& xs, double K, double t) {
  double c = 0.0;
  for (double x : xs) c += std::log(K * K + (x - t) * (x - t));
  return c;
}

double ml_cost(const std::vector<double>& xs, double alpha, double gamma, double t) {
  double c = 0.0;
  for (double x : xs) c -= logpdf_sas(alpha, gamma, x - t);
  return c;
}

}  // namespace

double crb_general(double j, double alpha, int d) {
  check_alpha(alpha, "crb_general");
  if (!(j > 0.0)) throw DomainError("crb_general: J must be positive");
  if (d < 1) throw DomainError("crb_general: d must be positive");
  return std::pow(d * kappa_alpha(alpha) / j, 1.0 / alpha);
}

double crb_stable(double alpha, double gamma_N, int d) {
  check_alpha(alpha, "crb_stable");
  if (!(gamma_N > 0.0)) throw DomainError("crb_stable: gamma_N must be positive");
  (void)d;
  return std::pow(alpha * kappa_alpha(alpha), 1.0 / alpha) * gamma_N;
}

std::string to_string(Estimator e) {
  switch (e) {
    case Estimator::ml_identity: return "ml_identity";
    case Estimator::sample_mean: return "sample_mean";
    case Estimator::sample_median: return "sample_median";
    case Estimator::myriad: return "myriad";
  }
  return "unknown";
}

Estimator parse_estimator(const std::string& s) {
  if (s == "ml" || s == "ml_identity") return Estimator::ml_identity;
  if (s == "mean" || s == "sample_mean") return Estimator::sample_mean;
  if (s == "median" || s == "sample_median") return Estimator::sample_median;
  if (s == "myriad") return Estimator::myriad;
  throw ConfigError("unknown estimator '" + s + "'");
}

double myriad_estimate(const std::vector<double>& samples, double K) {
  if (!(K > 0.0)) throw DomainError("myriad_estimate: K must be positive");
  return locate(samples, [&](double t) { return myriad_cost(samples, K, t); }, K).theta;
}

double ml_location(const std::vector<double>& samples, double alpha, double gamma) {
  StableParams::symmetric(alpha, gamma).validate();
  if (samples.size() == 1) return samples.front();
  return locate(samples, [&](double t) { return ml_cost(samples, alpha, gamma, t); }, gamma).theta;
}

EstimatorRun run_estimator(const EstimatorConfig& cfg) {
  cfg.noise.validate();
  if (cfg.noise.beta != 0.0) throw DomainError("run_estimator: only symmetric noise is supported");
  const double alpha = cfg.noise.alpha, gamma = cfg.noise.gamma;
  check_alpha(alpha, "run_estimator");
  if (cfg.trials < 10) throw DomainError("run_estimator: need at least 10 trials");
  if (cfg.samples_per_trial < 1) throw DomainError("run_estimator: samples_per_trial must be positive");
  const double K = cfg.K > 0.0 ? cfg.K : gamma;

  EstimatorRun run;
  run.config = cfg;
  run.config.K = K;
  run.errors.reserve(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    std::vector<double> xs = sample_sas(alpha, gamma, cfg.samples_per_trial, cfg.seed, t);
    for (double& x : xs) x += cfg.theta_true + cfg.noise.delta;
    double est = 0.0;
    bool ok = true;
    switch (cfg.estimator) {
      case Estimator::ml_identity:
        if (xs.size() == 1) {
          est = xs.front();
        } else {
          const Located l = locate(xs, [&](double th) { return ml_cost(xs, alpha, gamma, th); }, gamma);
          est = l.theta;
          ok = l.converged;
        }
        break;
      case Estimator::sample_mean: {
        double s = 0.0;
        for (double x : xs) s += x;
        est = s / static_cast<double>(xs.size());
        break;
      }
      case Estimator::sample_median: est = median(xs); break;
      case Estimator::myriad: {
        const Located l = locate(xs, [&](double th) { return myriad_cost(xs, K, th); }, K);
        est = l.theta;
        ok = l.converged;
        break;
      }
    }
    if (!ok || !std::isfinite(est)) {
      ++run.flagged;
      continue;
    }
    run.errors.push_back(est - cfg.theta_true);
  }
  const AlphaPowerResult p = alpha_power(RandomLaw::empirical(run.errors), alpha);
  run.error_alpha_power = p.value;
  run.error_alpha_power_se = p.std_error;
  run.crb = crb_stable(alpha, gamma) * std::pow(static_cast<double>(cfg.samples_per_trial), -1.0 / alpha);
  return run;
}

}  // namespace stable_info

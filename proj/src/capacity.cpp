#include "stable_info/capacity.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "stable_info/alphapower.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/law.hpp"
#include "stable_info/stable.hpp"

namespace stable_info {

namespace {

std::shared_ptr<const GriddedDensity> noise_grid(double alpha, double gamma) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, std::shared_ptr<const GriddedDensity>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{alpha, gamma}];
  if (!slot) slot = std::make_shared<const GriddedDensity>(pdf_grid_sas(alpha, gamma));
  return slot;
}

void need_scalar(const ChannelSpec& s, const char* who) {
  if (s.d != 1) throw DomainError(std::string(who) + ": numerics are univariate (d = 1)");
}

}  // namespace

double ChannelSpec::noise_power() const { return std::pow(alpha, 1.0 / alpha) * gamma_N; }

void ChannelSpec::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("channel: alpha must lie in (0, 2]");
  if (!(gamma_N > 0.0)) throw DomainError("channel: gamma_N must be positive");
  if (d < 1) throw DomainError("channel: d must be positive");
  if (!(A >= noise_power() * (1.0 - 1e-12)))
    throw DomainError("channel: A must be at least the noise alpha-power " + std::to_string(noise_power()));
}

double capacity_stable(const ChannelSpec& spec) {
  spec.validate();
  return std::max(0.0, spec.d * std::log(spec.A / spec.noise_power()));
}

double optimal_input_scale(const ChannelSpec& spec) {
  spec.validate();
  const double a = spec.alpha;
  const double diff = std::pow(spec.A, a) - std::pow(spec.noise_power(), a);
  if (diff <= 0.0) return 0.0;
  return std::pow(1.0 / a, 1.0 / a) * std::pow(diff, 1.0 / a);
}

double cost_function(double x, double P, double alpha, double gamma_N) {
  if (!(P > 0.0)) throw DomainError("cost_function: P must be positive");
  StableParams::symmetric(alpha, gamma_N).validate();
  const auto f = noise_grid(alpha, gamma_N);
  const double gr = reference_gamma(alpha);
  return expect(*f, [&](double n) { return -logpdf_sas(alpha, gr, (x + n) / P); });
}

CostCheck cost_constraint_check(const ChannelSpec& spec, std::size_t samples, std::uint64_t seed) {
  spec.validate();
  need_scalar(spec, "cost_constraint_check");
  if (samples < 2) throw DomainError("cost_constraint_check: need at least two samples");
  const double a = spec.alpha, PN = spec.noise_power(), P = spec.A;
  const double gx = optimal_input_scale(spec);
  const double offset = reference_entropy(a) + std::log(PN / P);

  CostCheck c;
  c.P = P;
  c.target = std::log(P / PN);
  c.samples = samples;
  std::vector<double> xs(samples, 0.0);
  if (gx > 0.0) xs = sample_sas(a, gx, samples, seed);

  // C(x, P) is even in x; tabulate it on x = s sinh(u).
  const double s = PN;
  double xmax = 0.0;
  for (double v : xs) xmax = std::max(xmax, std::abs(v));
  const double U = std::asinh(xmax / s) + 1e-6;
  constexpr std::size_t M = 400;
  const double du = U / (M - 1);
  std::vector<double> tab(M);
  for (std::size_t i = 0; i < M; ++i) tab[i] = cost_function(s * std::sinh(du * i), P, a, spec.gamma_N);
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline(tab.begin(), tab.end(), 0.0, du, 0.0);

  double sum = 0.0, sum2 = 0.0;
  for (double v : xs) {
    const double D = spline(std::asinh(std::abs(v) / s)) - offset;
    sum += D;
    sum2 += D * D;
  }
  const double n = static_cast<double>(samples);
  c.mean_divergence = sum / n;
  c.std_error = std::sqrt(std::max(0.0, sum2 / n - c.mean_divergence * c.mean_divergence) / (n - 1.0));
  c.rel_error = c.target > 0.0 ? std::abs(c.mean_divergence - c.target) / c.target
                               : std::abs(c.mean_divergence - c.target);
  return c;
}

OutputCheck optimal_output_check(const ChannelSpec& spec, const GridOptions& opt) {
  spec.validate();
  need_scalar(spec, "optimal_output_check");
  const double gx = optimal_input_scale(spec);
  const RandomLaw noise = RandomLaw::sas(spec.alpha, spec.gamma_N);
  const RandomLaw y = gx > 0.0 ? RandomLaw::sum(RandomLaw::sas(spec.alpha, gx), noise) : noise;
  const GriddedDensity f = realize(y, opt);
  OutputCheck o;
  AlphaPowerOptions po;
  po.grid = opt;
  o.alpha_power = alpha_power(f, spec.alpha, po).value;
  o.entropy = entropy(f);
  o.entropy_target = reference_entropy(spec.alpha) + std::log(spec.A);
  return o;
}

}  // namespace stable_info

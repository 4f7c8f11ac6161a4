#include "stable_info/stable.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "rng.hpp"
#include "spectral.hpp"
#include "stable_info/errors.hpp"

namespace stable_info {

using std::numbers::pi;

StableParams StableParams::symmetric(double alpha, double gamma) {
  StableParams p{alpha, 0.0, gamma, 0.0};
  p.validate();
  return p;
}

void StableParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("stable alpha must lie in (0, 2]");
  if (!(beta >= -1.0 && beta <= 1.0)) throw DomainError("stable beta must lie in [-1, 1]");
  if (!(gamma > 0.0)) throw DomainError("stable gamma must be positive");
  if (!std::isfinite(delta)) throw DomainError("stable delta must be finite");
}

ReferenceStable::ReferenceStable(double a) : alpha(a), gamma_ref(reference_gamma(a)) {
  if (!(a > 0.0 && a <= 2.0)) throw DomainError("reference alpha must lie in (0, 2]");
}

double ReferenceStable::entropy() const { return reference_entropy(alpha); }

std::complex<double> cf_sas(const StableParams& p, double omega) {
  p.validate();
  if (p.beta != 0.0) throw DomainError("cf_sas: only the symmetric case is supported");
  const double mod = std::exp(-std::pow(p.gamma * std::abs(omega), p.alpha));
  return std::polar(mod, p.delta * omega);
}

double tail_constant_k1(double alpha, int d) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("tail_constant_k1: alpha must lie in (0, 2)");
  if (d < 1) throw DomainError("tail_constant_k1: d must be positive");
  const double half = 0.5 * pi * alpha;
  return std::pow(2.0, alpha) * (std::sin(half) / half) * std::tgamma((2.0 + alpha) / 2.0) *
         std::tgamma((d + alpha) / 2.0) / std::tgamma(d / 2.0);
}

namespace {

void warn_small_alpha(double alpha) {
  if (alpha >= 0.3) return;
  static std::once_flag once;
  std::call_once(once, [] { std::cerr << "warning: alpha < 0.3 needs very large grids\n"; });
}

detail::SpectralModel sas_model(double alpha, double gamma) {
  return detail::SpectralModel{{detail::Atom{detail::Atom::Kind::stable, gamma, alpha}}, 0.0};
}

// ln p of S(alpha, 1) on |x| < radius, and the tail series beyond.
struct LogTable {
  double radius = 0.0;
  double x_first = 0.0;
  std::unique_ptr<boost::math::interpolators::cardinal_cubic_b_spline<double>> spline;
  TailLaw tail;
};

std::shared_ptr<const LogTable> build_table(double alpha) {
  warn_small_alpha(alpha);
  const auto m = sas_model(alpha, 1.0);
  const GridSpec g = detail::grid_for(m, GridOptions{});
  const GriddedDensity f = detail::realize_model(m, g.n, g.h);
  auto t = std::make_shared<LogTable>();
  t->tail = *f.tail;
  const std::size_t n = f.size(), mid = n / 2;
  // Handoff: first point from which grid and series agree to the tolerance
  // all the way out to the grid edge.
  std::size_t hand = n - 1;
  for (double tol : {1e-6, 1e-5, 1e-4, 1e-3}) {
    std::size_t j = n - 1;
    while (j > mid) {
      const double x = f.x(j), p = f.values[j];
      if (!(p > 0.0) || std::abs(t->tail.value(x) / p - 1.0) >= tol) break;
      --j;
    }
    if (j < n - 1 - n / 64) {
      hand = j + 1;
      break;
    }
  }
  t->radius = f.x(hand);
  const std::size_t first = mid - 4;
  std::vector<double> lp;
  for (std::size_t j = first; j <= std::min(hand + 4, n - 1); ++j) lp.push_back(std::log(std::max(f.values[j], 1e-300)));
  t->x_first = f.x(first);
  t->spline = std::make_unique<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
      lp.data(), lp.size(), t->x_first, f.h);
  return t;
}

std::shared_ptr<const LogTable> table_for(double alpha) {
  static std::mutex mu;
  static std::map<double, std::shared_ptr<const LogTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(alpha);
  if (it != cache.end()) return it->second;
  auto t = build_table(alpha);
  cache.emplace(alpha, t);
  return t;
}

}  // namespace

GriddedDensity pdf_grid_sas(double alpha, double gamma, const GridSpec& grid) {
  StableParams::symmetric(alpha, gamma);
  warn_small_alpha(alpha);
  const auto m = sas_model(alpha, gamma);
  GridSpec g = grid;
  if (g.n == 0)
    g = detail::grid_for(m, GridOptions{});
  else
    detail::check_grid(m, g.n, g.h);
  GriddedDensity f = detail::realize_model(m, g.n, g.h);
  // the grid is symmetric about 0; remove round-off asymmetry from the FFT
  auto& v = f.values;
  for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j) v[i] = v[j] = 0.5 * (v[i] + v[j]);
  return f;
}

double logpdf_sas(double alpha, double gamma, double x) {
  if (!(alpha > 0.0 && alpha <= 2.0) || !(gamma > 0.0)) throw DomainError("logpdf_sas: invalid parameters");
  const double u = std::abs(x) / gamma;
  if (alpha == 2.0) return -std::log(2.0 * std::sqrt(pi)) - 0.25 * u * u - std::log(gamma);
  if (alpha == 1.0) return -std::log(pi) - std::log1p(u * u) - std::log(gamma);
  const auto t = table_for(alpha);
  const double lp = u < t->radius ? (*t->spline)(u) : std::log(t->tail.value(u));
  return lp - std::log(gamma);
}

double logpdf_handoff_radius(double alpha) {
  if (alpha == 1.0 || alpha == 2.0) return std::numeric_limits<double>::infinity();
  return table_for(alpha)->radius;
}

std::vector<double> sample_sas(double alpha, double gamma, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  StableParams::symmetric(alpha, gamma);
  detail::Rng rng(seed, stream);
  std::vector<double> out(n);
  for (auto& x : out) {
    const double V = pi * (rng.uniform() - 0.5);
    const double W = rng.exponential();
    double z;
    if (alpha == 1.0) {
      z = std::tan(V);
    } else {
      z = std::sin(alpha * V) / std::pow(std::cos(V), 1.0 / alpha) *
          std::pow(std::cos((1.0 - alpha) * V) / W, (1.0 - alpha) / alpha);
    }
    x = gamma * z;
  }
  return out;
}

double reference_entropy(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("reference_entropy: alpha must lie in (0, 2]");
  if (alpha == 2.0) return 0.5 * std::log(2.0 * pi * std::numbers::e);
  if (alpha == 1.0) return std::log(4.0 * pi);
  static std::mutex mu;
  static std::map<double, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;
  }
  const double h = entropy(pdf_grid_sas(alpha, reference_gamma(alpha)));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(alpha, h);
  return h;
}

}  // namespace stable_info

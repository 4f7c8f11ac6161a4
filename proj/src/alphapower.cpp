#include "stable_info/alphapower.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <functional>
#include <limits>

#include "spectral.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/stable.hpp"

namespace stable_info {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double neg_log_ref(double alpha, double y) { return -logpdf_sas(alpha, reference_gamma(alpha), y); }

// -E ln p_Z~(X/P) over a gridded density.
double g_grid(const GriddedDensity& f, double alpha, double P) {
  if (alpha == 2.0 && f.tail && f.tail->exponent() <= 3.0) return kInf;
  return expect(f, [&](double x) { return neg_log_ref(alpha, x / P); });
}

double g_samples(const std::vector<double>& xs, double alpha, double P, std::size_t lo, std::size_t hi) {
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += neg_log_ref(alpha, xs[i] / P);
  return s / static_cast<double>(hi - lo);
}

// Hill estimate of the tail index from the largest sqrt(n) magnitudes.
double hill_index(const std::vector<double>& xs) {
  std::vector<double> a;
  a.reserve(xs.size());
  for (double v : xs) a.push_back(std::abs(v));
  std::sort(a.begin(), a.end(), std::greater<>());
  const std::size_t k = std::max<std::size_t>(10, static_cast<std::size_t>(std::sqrt(static_cast<double>(a.size()))));
  if (a.size() <= k || !(a[k] > 0.0)) return kInf;
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += std::log(a[i] / a[k]);
  s /= static_cast<double>(k);
  return s > 0.0 ? 1.0 / s : kInf;
}

struct Moments {
  double mean = 0.0;
  double var = 0.0;
};

Moments sample_moments(const std::vector<double>& xs) {
  Moments m;
  for (double v : xs) m.mean += v;
  m.mean /= static_cast<double>(xs.size());
  for (double v : xs) m.var += (v - m.mean) * (v - m.mean);
  m.var /= static_cast<double>(xs.size());
  return m;
}

// E X^2 of a flattened law; +inf when a component has no second moment.
double second_moment(const detail::FlatLaw& fl) {
  double mean = fl.shift, var = 0.0;
  for (const auto& a : fl.atoms) {
    switch (a.kind) {
      case detail::Atom::Kind::gauss: var += a.scale * a.scale; break;
      case detail::Atom::Kind::uniform: var += a.scale * a.scale / 3.0; break;
      case detail::Atom::Kind::laplace: var += 2.0 * a.scale * a.scale; break;
      case detail::Atom::Kind::stable:
        if (a.alpha < 2.0) return kInf;
        var += 2.0 * a.scale * a.scale;
        break;
    }
  }
  for (const auto& e : fl.empirical) {
    if (hill_index(e) < 2.0) return kInf;
    const Moments m = sample_moments(e);
    mean += m.mean;
    var += m.var;
  }
  return var + mean * mean;
}

double robust_scale(const std::vector<double>& xs) {
  std::vector<double> s = xs;
  std::sort(s.begin(), s.end());
  const double iqr = s[s.size() * 3 / 4] - s[s.size() / 4];
  if (iqr > 0.0) return iqr / 2.0;
  double m = 0.0;
  for (double v : s) m += std::abs(v);
  return m > 0.0 ? m / static_cast<double>(s.size()) : 1.0;
}

AlphaPowerResult solve(const std::function<double(double)>& g, double alpha, double scale, double tol) {
  const double target = reference_entropy(alpha);
  auto f = [&](double P) { return g(P) - target; };
  double lo = scale / 50.0, hi = scale * 50.0;
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < 60 && !(flo > 0.0); ++i) {
    hi = lo;
    fhi = flo;
    lo /= 10.0;
    flo = f(lo);
  }
  for (int i = 0; i < 60 && !(fhi < 0.0); ++i) {
    lo = hi;
    flo = fhi;
    hi *= 10.0;
    fhi = f(hi);
  }
  if (!(flo > 0.0) || !(fhi < 0.0)) throw NumericError("alpha_power: could not bracket the root of g(P) - h(Z~)");
  AlphaPowerResult r;
  r.alpha = alpha;
  r.method = PowerMethod::numeric_root;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  boost::uintmax_t iters = 200;
  auto stop = [tol](double a, double b) { return std::abs(b - a) <= tol * std::min(std::abs(a), std::abs(b)); };
  const auto root = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, stop, iters);
  r.value = 0.5 * (root.first + root.second);
  r.residual = std::abs(f(r.value));
  return r;
}

}  // namespace

std::string to_string(PowerMethod m) {
  switch (m) {
    case PowerMethod::closed_form_alpha2: return "closed_form_alpha2";
    case PowerMethod::closed_form_stable: return "closed_form_stable";
    case PowerMethod::numeric_root: return "numeric_root";
    case PowerMethod::point_mass: return "point_mass";
  }
  return "unknown";
}

bool AlphaPowerResult::infinite() const { return std::isinf(value); }

double g_of_P(const RandomLaw& law, double alpha, double P, const GridOptions& opt) {
  if (!(P > 0.0)) throw DomainError("g_of_P: P must be positive");
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("g_of_P: alpha must lie in (0, 2]");
  const detail::FlatLaw fl = detail::flatten(law);
  if (fl.point_mass()) return neg_log_ref(alpha, fl.shift / P);
  if (fl.atoms.empty() && fl.empirical.size() == 1) {
    std::vector<double> xs = fl.empirical.front();
    for (double& v : xs) v += fl.shift;
    return g_samples(xs, alpha, P, 0, xs.size());
  }
  return g_grid(realize(law, opt), alpha, P);
}

AlphaPowerResult alpha_power(const GriddedDensity& f, double alpha, const AlphaPowerOptions& opt) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("alpha_power: alpha must lie in (0, 2]");
  double scale = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) scale += f.values[j] * std::abs(f.x(j));
  scale = std::max(scale * f.h, 1e-300);
  return solve([&](double P) { return g_grid(f, alpha, P); }, alpha, scale, opt.root_tol);
}

AlphaPowerResult alpha_power(const RandomLaw& law, double alpha, const AlphaPowerOptions& opt) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("alpha_power: alpha must lie in (0, 2]");
  const detail::FlatLaw fl = detail::flatten(law);
  AlphaPowerResult r;
  r.alpha = alpha;

  const bool degenerate_samples =
      fl.atoms.empty() && fl.empirical.size() == 1 &&
      std::all_of(fl.empirical.front().begin(), fl.empirical.front().end(),
                  [&](double v) { return v + fl.shift == 0.0; });
  if ((fl.point_mass() && fl.shift == 0.0) || degenerate_samples) {
    r.method = PowerMethod::point_mass;
    return r;
  }
  if (alpha == 2.0) {
    r.method = PowerMethod::closed_form_alpha2;
    r.value = std::sqrt(second_moment(fl));
    return r;
  }
  if (fl.empirical.empty() && fl.shift == 0.0 && fl.atoms.size() == 1 &&
      fl.atoms[0].kind == detail::Atom::Kind::stable && fl.atoms[0].alpha == alpha) {
    r.method = PowerMethod::closed_form_stable;
    r.value = std::pow(alpha, 1.0 / alpha) * fl.atoms[0].scale;
    return r;
  }
  if (fl.point_mass()) {
    return solve([&](double P) { return neg_log_ref(alpha, fl.shift / P); }, alpha, std::abs(fl.shift),
                 opt.root_tol);
  }
  if (fl.atoms.empty() && fl.empirical.size() == 1) {
    std::vector<double> xs = fl.empirical.front();
    for (double& v : xs) v += fl.shift;
    const double s = robust_scale(xs);
    r = solve([&](double P) { return g_samples(xs, alpha, P, 0, xs.size()); }, alpha, s, opt.root_tol);
    // Batch-split standard error.
    constexpr std::size_t B = 10;
    if (xs.size() >= 20 * B) {
      std::vector<double> est;
      const std::size_t m = xs.size() / B;
      for (std::size_t b = 0; b < B; ++b)
        est.push_back(solve([&](double P) { return g_samples(xs, alpha, P, b * m, (b + 1) * m); }, alpha, r.value,
                            opt.root_tol)
                          .value);
      const Moments mm = sample_moments(est);
      r.std_error = std::sqrt(mm.var * B / (B - 1.0) / B);
    }
    return r;
  }
  double scale = std::abs(fl.shift);
  for (const auto& a : fl.atoms) scale += a.scale;
  for (const auto& e : fl.empirical) scale += robust_scale(e);
  const GriddedDensity f = realize(law, opt.grid);
  return solve([&](double P) { return g_grid(f, alpha, P); }, alpha, scale, opt.root_tol);
}

}  // namespace stable_info

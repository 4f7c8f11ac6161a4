#include "stable_info/jalpha.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <utility>

#include "fft.hpp"
#include "spectral.hpp"
#include "stable_info/errors.hpp"

namespace stable_info {

namespace {

using detail::Atom;
using detail::SpectralModel;
using std::numbers::pi;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPresmooth = 1e-3;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("alpha must lie in (0, 2]");
}

SpectralModel with_noise(SpectralModel m, double alpha, double gamma) {
  m.atoms.push_back(Atom{Atom::Kind::stable, gamma, alpha});
  return m;
}

// Finest structural scale of the law.
double finest_scale(const SpectralModel& m) {
  double s = kInf;
  for (const auto& a : m.atoms) s = std::min(s, a.scale);
  return s;
}

// One grid fine enough for every model and wide enough for the widest.
GridSpec common_grid(const std::vector<SpectralModel>& ms, const GridOptions& opt) {
  double h = kInf, L = 0.0, Lmin = 0.0;
  for (const auto& m : ms) {
    const double w = m.omega_max();
    if (std::isfinite(w)) h = std::min(h, pi / w);
    L = std::max(L, m.extent(opt.extent_factor));
    Lmin = std::max(Lmin, m.min_extent());
  }
  if (!std::isfinite(h)) h = 2.0 * L / static_cast<double>(opt.n_min);
  std::size_t n = std::max(opt.n_min, detail::next_pow2(static_cast<std::size_t>(std::ceil(2.0 * L / h))));
  if (n > opt.n_max) {
    n = opt.n_max;
    L = 0.5 * static_cast<double>(n) * h;
    if (L < Lmin) throw ConfigError("grid too coarse for the finite-difference sequence");
  }
  return GridSpec{n, 2.0 * L / static_cast<double>(n), ms.front().shift};
}

double model_entropy(const SpectralModel& m, const GridSpec& g) {
  return entropy(detail::realize_model(m, g.n, g.h));
}

// ln p with the noise-dominated far field of an exponential tail replaced by
// its linear asymptote; returns the two asymptotes (value, slope at each edge).
struct LinearTail {
  double r = 0.0;  // distance from the center where the asymptote starts
  double value = 0.0;
  double slope = 0.0;
};

std::pair<LinearTail, LinearTail> straighten_log_tail(const GriddedDensity& f, double center,
                                                      std::vector<double>& lp) {
  const std::size_t n = f.size();
  const auto top = static_cast<std::size_t>(std::max_element(f.values.begin(), f.values.end()) - f.values.begin());
  const double pmax = f.values[top];
  auto side = [&](int dir) {
    const auto step = [&](std::size_t j) { return dir > 0 ? j + 1 : j - 1; };
    const auto inside = [&](std::size_t j) { return dir > 0 ? j + 1 < n : j > 0; };
    std::size_t a = top;
    while (inside(a) && f.values[a] > 1e-7 * pmax) a = step(a);
    std::size_t b = a;
    while (inside(b) && f.values[b] > 1e-9 * pmax) b = step(b);
    LinearTail t;
    if (a == b) return t;
    t.r = std::abs(f.x(b) - center);
    t.value = lp[b];
    t.slope = (lp[b] - lp[a]) / (std::abs(f.x(b) - center) - std::abs(f.x(a) - center));
    for (std::size_t j = b; inside(j); j = step(j)) lp[step(j)] = t.value + t.slope * (std::abs(f.x(step(j)) - center) - t.r);
    return t;
  };
  const LinearTail right = side(+1);
  const LinearTail left = side(-1);
  return {left, right};
}

// Spectral J for a density realized from `m` on its own centered grid.
JAlphaEstimate spectral_from_model(const GriddedDensity& f, const SpectralModel& m, double alpha) {
  const std::size_t n = f.size();
  std::vector<detail::CfTerm> terms{{1.0, 0.0}};
  for (const auto& t : m.expansion()) terms.push_back(t);
  const auto qtail = detail::tail_terms(terms, alpha);
  const std::vector<double> q = detail::invert(
      n, f.h, [&](double w) { return w == 0.0 ? 0.0 : std::pow(w, alpha) * m.cf(w); }, qtail);
  std::vector<double> lp(n);
  for (std::size_t j = 0; j < n; ++j) lp[j] = std::log(std::max(f.values[j], 1e-300));
  const bool expo = m.tail_class() == TailClass::exponential;
  std::pair<LinearTail, LinearTail> asym;
  if (expo) asym = straighten_log_tail(f, m.shift, lp);
  double J = 0.0;
  for (std::size_t j = 0; j < n; ++j) J += lp[j] * q[j];
  J *= f.h;
  if (f.tail && !qtail.empty()) {
    const TailLaw& t = *f.tail;
    J += detail::tail_integral(t.radius, [&](double r) {
      double qv = 0.0;
      for (const auto& tt : qtail) qv += tt.coef * std::pow(r, -tt.exponent);
      const double pv = t.value(r);
      return pv > 0.0 ? 2.0 * std::log(pv) * qv : 0.0;
    });
  } else if (expo) {
    // Integral of (v + s (r - r0)) c r^-e over r > R, both sides.
    const double R = 0.5 * static_cast<double>(n) * f.h;
    for (const LinearTail& a : {asym.first, asym.second})
      for (const auto& tt : qtail) {
        const double e = tt.exponent;
        J += tt.coef * ((a.value - a.slope * a.r) * std::pow(R, 1.0 - e) / (e - 1.0) +
                        a.slope * std::pow(R, 2.0 - e) / (e - 2.0));
      }
  }
  JAlphaEstimate e;
  e.value = J;
  e.alpha = alpha;
  e.method = JMethod::spectral;
  e.diagnostics.n_points = n;
  e.diagnostics.h = f.h;
  e.diagnostics.omega_cutoff = pi / f.h;
  e.diagnostics.tail_mass = f.tail_mass();
  return e;
}

// Spectral J from the grid values alone (characteristic function by FFT).
JAlphaEstimate spectral_from_grid(const GriddedDensity& f, double alpha) {
  const std::size_t n = detail::next_pow2(2 * f.size());
  const double h = f.h;
  std::vector<std::complex<double>> a(n);
  for (std::size_t j = 0; j < f.size(); ++j) a[j] = f.values[j];
  detail::fft_inplace(a);
  const double dw = 2.0 * pi / (static_cast<double>(n) * h);
  double peak = 0.0, edge = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kp = k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
    const double w = std::abs(kp) * dw;
    const double mag = std::pow(w, alpha) * std::abs(a[k]) * h;
    peak = std::max(peak, mag);
    if (std::abs(kp) > 0.45 * static_cast<double>(n)) edge = std::max(edge, mag);
    a[k] *= std::pow(w, alpha);
  }
  if (edge > 1e-6 * peak)
    throw MethodError("|w|^alpha phi is not integrable on this grid; use jalpha_finite_diff instead");
  detail::fft_inplace(a, true);
  double J = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j)
    J += std::log(std::max(f.values[j], 1e-300)) * a[j].real() / static_cast<double>(n);
  JAlphaEstimate e;
  e.value = J;
  e.alpha = alpha;
  e.method = JMethod::spectral;
  e.diagnostics.n_points = f.size();
  e.diagnostics.h = h;
  e.diagnostics.omega_cutoff = pi / h;
  e.diagnostics.tail_mass = f.tail_mass();
  return e;
}

void check_sign(const JAlphaEstimate& e) {
  if (e.value < -1e-6 * std::max(1.0, std::abs(e.value)))
    throw NumericError("spectral J_alpha came out negative (" + std::to_string(e.value) + ")");
}

std::string infinite_reason(TailClass c, double alpha) {
  if (c == TailClass::compact) return "compact support: J_alpha diverges";
  if (c == TailClass::gaussian && alpha < 2.0) return "tails lighter than |x|^(-1-alpha) force ln p -> -inf: J_alpha diverges";
  if (c == TailClass::exponential && alpha <= 1.0) return "exponential tails with alpha <= 1: J_alpha diverges";
  return {};
}

}  // namespace

std::string to_string(JMethod m) {
  switch (m) {
    case JMethod::closed_form_stable: return "closed_form_stable";
    case JMethod::spectral: return "spectral";
    case JMethod::finite_difference: return "finite_difference";
  }
  return "unknown";
}

double jalpha_closed_stable(double alpha, double gamma, int d) {
  check_alpha(alpha);
  if (!(gamma > 0.0)) throw DomainError("jalpha_closed_stable: gamma must be positive");
  if (d < 1) throw DomainError("jalpha_closed_stable: d must be positive");
  return d / (alpha * std::pow(gamma, alpha));
}

JAlphaEstimate jalpha_spectral(const GriddedDensity& f, double alpha) {
  check_alpha(alpha);
  if (f.values.size() < 16) throw DomainError("jalpha_spectral: grid too small");
  JAlphaEstimate e;
  const auto* m = f.source.get();
  const bool own_grid = m && (f.size() & (f.size() - 1)) == 0 &&
                        std::abs(f.x0 - (m->shift - (0.5 * static_cast<double>(f.size()) - 0.5) * f.h)) < 1e-9 * f.h;
  e = own_grid ? spectral_from_model(f, *m, alpha) : spectral_from_grid(f, alpha);
  check_sign(e);
  return e;
}

JAlphaEstimate jalpha(const RandomLaw& law, double alpha, const GridOptions& opt) {
  check_alpha(alpha);
  const detail::FlatLaw fl = detail::flatten(law);
  if (fl.point_mass()) throw DomainError("jalpha: a point mass has no density");
  if (!fl.empirical.empty()) return jalpha_spectral(realize(law, opt), alpha);

  SpectralModel m{fl.atoms, fl.shift};
  if (m.atoms.size() == 1 && m.atoms[0].kind == Atom::Kind::stable && m.atoms[0].alpha == alpha) {
    JAlphaEstimate e;
    e.value = jalpha_closed_stable(alpha, m.atoms[0].scale, 1);
    e.alpha = alpha;
    e.method = JMethod::closed_form_stable;
    return e;
  }
  const TailClass tc = m.tail_class();
  if (auto why = infinite_reason(tc, alpha); !why.empty()) {
    JAlphaEstimate e;
    e.value = kInf;
    e.alpha = alpha;
    e.diagnostics.note = why;
    return e;
  }
  double gs = 0.0;
  const bool smooth = m.decays();
  if (!smooth) {
    gs = kPresmooth * finest_scale(m);
    m.atoms.push_back(Atom{Atom::Kind::gauss, gs});
  }
  const GridSpec g = detail::grid_for(m, opt);
  JAlphaEstimate e = spectral_from_model(detail::realize_model(m, g.n, g.h), m, alpha);
  check_sign(e);
  if (!smooth) {
    e.diagnostics.presmoothed = true;
    e.diagnostics.presmooth_gamma = gs;
    e.diagnostics.note = "presmoothed with N(0, " + std::to_string(gs) + "^2)";
  }
  return e;
}

JAlphaEstimate jalpha_finite_diff(const RandomLaw& law, double alpha, std::vector<double> ts, const GridOptions& opt) {
  check_alpha(alpha);
  const detail::FlatLaw fl = detail::flatten(law);
  if (fl.point_mass()) throw DomainError("jalpha_finite_diff: a point mass has no density");
  if (!fl.empirical.empty()) throw MethodError("jalpha_finite_diff needs an analytic law");
  const SpectralModel base{fl.atoms, fl.shift};
  if (ts.empty()) {
    const double s = std::pow(finest_scale(base), alpha);
    ts = {0.2 * s, 0.1 * s, 0.05 * s, 0.025 * s};
  }
  if (ts.size() < 2) throw DomainError("jalpha_finite_diff: need at least two steps");
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (!(ts[i] > 0.0) || (i > 0 && !(ts[i] < ts[i - 1])))
      throw DomainError("jalpha_finite_diff: t_sequence must be positive and decreasing");

  std::vector<SpectralModel> ms{base};
  for (double t : ts) ms.push_back(with_noise(base, alpha, std::pow(t, 1.0 / alpha)));
  const GridSpec g = common_grid(ms, opt);
  const double h0 = model_entropy(base, g);

  JAlphaEstimate e;
  e.alpha = alpha;
  e.method = JMethod::finite_difference;
  e.steps = ts;
  for (std::size_t i = 0; i < ts.size(); ++i) e.quotients.push_back((model_entropy(ms[i + 1], g) - h0) / ts[i]);
  const std::size_t k = ts.size() - 1;
  const double ta = ts[k], tb = ts[k - 1], qa = e.quotients[k], qb = e.quotients[k - 1];
  e.value = qa - ta * (qb - qa) / (tb - ta);
  e.step = ta;
  e.diagnostics.n_points = g.n;
  e.diagnostics.h = g.h;
  e.diagnostics.omega_cutoff = pi / g.h;
  for (std::size_t i = 1; i < e.quotients.size(); ++i)
    if (e.quotients[i] < e.quotients[i - 1] * (1.0 - 1e-6))
      e.diagnostics.note = "warning: difference quotients not monotone in t";
  return e;
}

BoundReport debruijn_check(const RandomLaw& law, double alpha, double gamma, double eta, const GridOptions& opt) {
  check_alpha(alpha);
  if (!(eta > 0.0)) throw DomainError("debruijn_check: eta must be positive");
  if (!(gamma > 0.0)) throw DomainError("debruijn_check: gamma must be positive");
  const detail::FlatLaw fl = detail::flatten(law);
  if (fl.point_mass() || !fl.empirical.empty()) throw MethodError("debruijn_check needs an analytic law with a density");
  const SpectralModel base{fl.atoms, fl.shift};
  auto at = [&](double e) { return with_noise(base, alpha, gamma * std::pow(e, 1.0 / alpha)); };

  const double d = 0.1 * eta;
  const std::vector<SpectralModel> ms{at(eta), at(eta - d), at(eta + d), at(eta - 0.5 * d), at(eta + 0.5 * d)};
  const GridSpec g = common_grid(ms, opt);
  const double D1 = (model_entropy(ms[2], g) - model_entropy(ms[1], g)) / (2.0 * d);
  const double D2 = (model_entropy(ms[4], g) - model_entropy(ms[3], g)) / d;
  const double lhs = (4.0 * D2 - D1) / 3.0;
  const JAlphaEstimate J = spectral_from_model(detail::realize_model(ms[0], g.n, g.h), ms[0], alpha);
  const double rhs = std::pow(gamma, alpha) * J.value;

  BoundReport r;
  r.name = "debruijn";
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = -std::abs(lhs - rhs);
  r.rel_error = std::abs(lhs - rhs) / std::abs(rhs);
  r.inputs = {{"alpha", alpha}, {"gamma", gamma}, {"eta", eta}};
  r.method = "centered difference (Richardson) vs spectral J";
  return r;
}

}  // namespace stable_info

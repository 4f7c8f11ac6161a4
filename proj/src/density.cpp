#include "stable_info/density.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fft.hpp"
#include "spectral.hpp"
#include "stable_info/errors.hpp"

namespace stable_info {

namespace detail {

double tail_integral(double radius, const std::function<double(double)>& fn) {
  // r = R e^u, u in [0, 80] on unit panels.
  constexpr int kPanels = 80;
  double s = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    s += boost::math::quadrature::gauss<double, 15>::integrate(
        [&](double u) {
          const double r = radius * std::exp(u);
          return fn(r) * r;
        },
        static_cast<double>(k), static_cast<double>(k + 1));
  }
  return s;
}

GridSpec grid_for(const SpectralModel& m, const GridOptions& opt) {
  double L = m.extent(opt.extent_factor);
  if (!(L > 0.0)) throw DomainError("law has no spread");
  const double wmax = m.omega_max();
  const double hmax = std::isfinite(wmax) ? std::numbers::pi / wmax : 2.0 * L / static_cast<double>(opt.n_min);
  std::size_t n = std::max(opt.n_min, next_pow2(static_cast<std::size_t>(std::ceil(2.0 * L / hmax))));
  if (n > opt.n_max) {
    n = opt.n_max;
    L = 0.5 * static_cast<double>(n) * hmax;
    if (L < m.min_extent())
      throw ConfigError("grid too coarse: law needs more than " + std::to_string(opt.n_max) +
                        " points to resolve both its spread and its characteristic function");
  }
  return GridSpec{n, 2.0 * L / static_cast<double>(n), m.shift};
}

void check_grid(const SpectralModel& m, std::size_t n, double h) {
  if (n < 16 || (n & (n - 1)) != 0) throw ConfigError("grid length must be a power of two >= 16");
  if (!(h > 0.0)) throw ConfigError("grid spacing must be positive");
  const double wmax = m.omega_max();
  if (std::isfinite(wmax) && h * wmax > std::numbers::pi * (1.0 + 1e-9))
    throw ConfigError("grid too coarse: h * omega_max = " + std::to_string(h * wmax) +
                      " exceeds pi; the characteristic function is not resolved");
  if (0.5 * static_cast<double>(n) * h < m.min_extent())
    throw ConfigError("grid too narrow for the law's spread");
}

GriddedDensity realize_model(const SpectralModel& m, std::size_t n, double h) {
  GriddedDensity f;
  f.h = h;
  f.x0 = m.shift - (0.5 * static_cast<double>(n) - 0.5) * h;
  f.tail_class = m.tail_class();
  if (m.decays()) {
    const auto tail = tail_terms(m.expansion(), 0.0);
    f.values = invert(n, h, [&](double w) { return m.cf(w); }, tail);
    if (f.tail_class == TailClass::power && !tail.empty())
      f.tail = TailLaw{m.shift, 0.5 * static_cast<double>(n) * h, tail};
    f.source = std::make_shared<SpectralModel>(m);
  } else {
    f.values = direct_atom(m.atoms.front(), n, h, 0.5);
    for (std::size_t i = 1; i < m.atoms.size(); ++i)
      f.values = convolve_centered(f.values, direct_atom(m.atoms[i], n, h, 0.0), h);
  }
  for (double& v : f.values) v = std::max(v, 0.0);
  double grid_mass = 0.0;
  for (double v : f.values) grid_mass += v;
  grid_mass *= h;
  const double tm = f.tail_mass();
  if (std::abs(grid_mass + tm - 1.0) > 1e-3)
    throw ConfigError("insufficient grid coverage: captured mass " + std::to_string(grid_mass + tm));
  const double scale = (1.0 - tm) / grid_mass;
  for (double& v : f.values) v *= scale;
  return f;
}

}  // namespace detail

using detail::FlatLaw;
using detail::SpectralModel;

double TailLaw::value(double r) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.coef * std::pow(r, -t.exponent);
  return s;
}

double GriddedDensity::tail_mass() const {
  if (!tail) return 0.0;
  double m = 0.0;
  for (const auto& t : tail->terms) m += 2.0 * t.coef * std::pow(tail->radius, 1.0 - t.exponent) / (t.exponent - 1.0);
  return m;
}

double GriddedDensity::total_mass() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * h + tail_mass();
}

namespace {

SpectralModel model_of(const FlatLaw& fl) {
  return SpectralModel{fl.atoms, fl.shift};
}

double quantile_sorted(const std::vector<double>& s, double q) {
  const double pos = q * static_cast<double>(s.size() - 1);
  const std::size_t i = static_cast<std::size_t>(std::floor(pos));
  const double fr = pos - static_cast<double>(i);
  if (i + 1 >= s.size()) return s.back();
  return s[i] * (1.0 - fr) + s[i + 1] * fr;
}

GriddedDensity resample(const GriddedDensity& g, double h) {
  const double span = g.h * static_cast<double>(g.size());
  const std::size_t n = static_cast<std::size_t>(std::floor(span / h));
  GriddedDensity out;
  out.h = h;
  out.x0 = g.x0 - 0.5 * g.h + 0.5 * h;
  out.tail = g.tail;
  out.tail_class = g.tail_class;
  out.values.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.values[j] = std::max(0.0, density_at(g, out.x(j)));
  double s = 0.0;
  for (double v : out.values) s += v;
  s *= h;
  const double scale = (1.0 - out.tail_mass()) / s;
  for (double& v : out.values) v *= scale;
  return out;
}

GriddedDensity realize_flat(const FlatLaw& fl, const GridSpec* grid, const GridOptions& opt) {
  if (fl.point_mass()) throw DomainError("a point mass has no density");
  if (fl.empirical.empty()) {
    const SpectralModel m = model_of(fl);
    if (grid) {
      detail::check_grid(m, grid->n, grid->h);
      return detail::realize_model(m, grid->n, grid->h);
    }
    const GridSpec g = detail::grid_for(m, opt);
    return detail::realize_model(m, g.n, g.h);
  }
  // Sample sets: kernel estimate of each part, then convolve with the analytic part.
  std::vector<GriddedDensity> parts;
  for (const auto& s : fl.empirical) parts.push_back(kde(s, 0.0, opt));
  GriddedDensity acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = convolve(acc, parts[i]);
  if (!fl.atoms.empty()) {
    SpectralModel m = model_of(fl);
    m.shift = 0.0;
    GridSpec g = grid ? *grid : detail::grid_for(m, opt);
    acc = convolve(acc, detail::realize_model(m, g.n, g.h));
  }
  acc.x0 += fl.shift;
  if (acc.tail) acc.tail->center += fl.shift;
  return acc;
}

}  // namespace

GridSpec auto_grid(const RandomLaw& law, const GridOptions& opt) {
  const FlatLaw fl = detail::flatten(law);
  if (fl.atoms.empty()) throw DomainError("auto_grid needs an analytic law");
  return detail::grid_for(model_of(fl), opt);
}

TailClass tail_class(const RandomLaw& law) {
  const FlatLaw fl = detail::flatten(law);
  const TailClass c = model_of(fl).tail_class();
  if (c == TailClass::compact && !fl.empirical.empty()) return TailClass::gaussian;
  return c;
}

GriddedDensity realize(const RandomLaw& law, const GridOptions& opt) {
  return realize_flat(detail::flatten(law), nullptr, opt);
}

GriddedDensity realize(const RandomLaw& law, const GridSpec& grid) {
  return realize_flat(detail::flatten(law), &grid, GridOptions{});
}

namespace {

// Copy of d continued with its tail series out to half-width w about the tail center.
GriddedDensity extend_with_tail(const GriddedDensity& d, double w) {
  if (!d.tail) return d;
  const TailLaw& t = *d.tail;
  const double half = 0.5 * d.h * static_cast<double>(d.size());
  if (w <= half) return d;
  const auto k = static_cast<std::size_t>(std::ceil((w - half) / d.h));
  GriddedDensity e = d;
  e.values.assign(d.size() + 2 * k, 0.0);
  e.x0 = d.x0 - static_cast<double>(k) * d.h;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i >= k && i < k + d.size())
      e.values[i] = d.values[i - k];
    else
      e.values[i] = t.value(std::abs(e.x(i) - t.center));
  }
  return e;
}

}  // namespace

GriddedDensity convolve(const GriddedDensity& f_in, const GriddedDensity& g_in) {
  if (f_in.values.empty() || g_in.values.empty()) throw DomainError("convolve: empty density");
  const GriddedDensity* g = &g_in;
  GriddedDensity tmp;
  if (std::abs(g_in.h - f_in.h) > 1e-12 * f_in.h) {
    // a spectral density is rebuilt on the new spacing instead of interpolated
    const std::size_t n = detail::next_pow2(static_cast<std::size_t>(std::ceil(g_in.size() * g_in.h / f_in.h)));
    const double wmax = g_in.source ? g_in.source->omega_max() : 0.0;
    if (g_in.source && n <= GridOptions{}.n_max && std::isfinite(wmax) && f_in.h * wmax <= std::numbers::pi)
      tmp = detail::realize_model(*g_in.source, n, f_in.h);
    else
      tmp = resample(g_in, f_in.h);
    g = &tmp;
  }
  // both tails feed the band kept below, so carry them on the grid
  const double w = 0.5 * (f_in.h * static_cast<double>(f_in.size()) + g->h * static_cast<double>(g->size()));
  const GriddedDensity f = extend_with_tail(f_in, w);
  const GriddedDensity g_ext = extend_with_tail(*g, w);
  g = &g_ext;
  const double h = f.h;
  const std::size_t nf = f.size(), ng = g->size();
  const std::size_t len = nf + ng - 1;
  const std::size_t m = detail::next_pow2(len);
  std::vector<std::complex<double>> A(m), B(m);
  for (std::size_t i = 0; i < nf; ++i) A[i] = f.values[i];
  for (std::size_t i = 0; i < ng; ++i) B[i] = g->values[i];
  detail::fft_inplace(A);
  detail::fft_inplace(B);
  for (std::size_t i = 0; i < m; ++i) A[i] *= B[i];
  detail::fft_inplace(A, true);

  GriddedDensity out;
  out.h = h;
  out.x0 = f.x0 + g->x0;
  out.values.resize(len);
  const double sc = h / static_cast<double>(m);
  for (std::size_t i = 0; i < len; ++i) out.values[i] = std::max(0.0, A[i].real() * sc);
  out.tail_class = std::min(f.tail_class, g->tail_class);

  auto center_of = [](const GriddedDensity& d) {
    return d.tail ? d.tail->center : d.x0 + 0.5 * d.h * static_cast<double>(d.size() - 1);
  };
  auto half_of = [](const GriddedDensity& d) { return 0.5 * d.h * static_cast<double>(d.size()); };

  if (f.tail || g->tail) {
    TailLaw t;
    if (f.tail && g->tail) {
      const TailTerm a = f.tail->terms.front(), b = g->tail->terms.front();
      if (std::abs(a.exponent - b.exponent) < 1e-9)
        t.terms = {TailTerm{a.coef + b.coef, a.exponent}};
      else
        t.terms = {a.exponent < b.exponent ? a : b};
    } else {
      t.terms = {(f.tail ? f.tail : g->tail)->terms.front()};
    }
    t.center = center_of(f) + center_of(*g);
    const double R = std::max(half_of(f_in), half_of(g_in));
    // Crop to the band where both inputs were resolved.
    std::size_t lo = 0, hi = len;
    while (lo < len && out.x(lo) < t.center - R) ++lo;
    while (hi > lo && out.x(hi - 1) > t.center + R) --hi;
    std::vector<double> kept(out.values.begin() + static_cast<std::ptrdiff_t>(lo),
                             out.values.begin() + static_cast<std::ptrdiff_t>(hi));
    out.x0 = out.x(lo);
    out.values = std::move(kept);
    const double left = t.center - (out.x0 - 0.5 * h);
    const double right = out.x(out.size() - 1) + 0.5 * h - t.center;
    t.radius = std::min(left, right);
    out.tail = t;
  }
  double s = 0.0;
  for (double v : out.values) s += v;
  s *= h;
  const double scale = (1.0 - out.tail_mass()) / s;
  for (double& v : out.values) v *= scale;
  return out;
}

double entropy(const GriddedDensity& f) {
  double s = 0.0;
  for (double p : f.values)
    if (p > 0.0) s -= p * std::log(std::max(p, 1e-300));
  s *= f.h;
  if (f.tail) {
    const TailLaw& t = *f.tail;
    s += detail::tail_integral(t.radius, [&](double r) {
      const double v = t.value(r);
      return v > 0.0 ? -2.0 * v * std::log(v) : 0.0;
    });
  }
  return s;
}

double entropy(const RandomLaw& law, const GridOptions& opt) {
  return entropy(realize(law, opt));
}

double log_moment(const RandomLaw& law, const GridOptions& opt) {
  const FlatLaw fl = detail::flatten(law);
  if (fl.point_mass()) return std::log1p(std::abs(fl.shift));
  if (fl.atoms.empty() && fl.empirical.size() == 1) {
    double s = 0.0;
    for (double x : fl.empirical.front()) s += std::log1p(std::abs(x + fl.shift));
    return s / static_cast<double>(fl.empirical.front().size());
  }
  const GriddedDensity f = realize_flat(fl, nullptr, opt);
  return expect(f, [](double x) { return std::log1p(std::abs(x)); });
}

GriddedDensity kde(const std::vector<double>& samples, double bandwidth, const GridOptions& opt) {
  if (samples.empty()) throw DomainError("kde: no samples");
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double bw = bandwidth;
  if (!(bw > 0.0)) {
    double scale = (quantile_sorted(s, 0.75) - quantile_sorted(s, 0.25)) / 1.34;
    if (!(scale > 0.0)) {
      double mean = 0.0, var = 0.0;
      for (double v : s) mean += v;
      mean /= n;
      for (double v : s) var += (v - mean) * (v - mean);
      scale = std::sqrt(var / n);
    }
    if (!(scale > 0.0)) throw DomainError("kde: degenerate sample (all values equal)");
    bw = 0.9 * scale * std::pow(n, -0.2);
  }
  const double lo = s.front() - 6.0 * bw, hi = s.back() + 6.0 * bw;
  double h = bw / 4.0;
  std::size_t len = static_cast<std::size_t>(std::ceil((hi - lo) / h)) + 1;
  if (len > opt.n_max) {
    len = opt.n_max;
    h = (hi - lo) / static_cast<double>(len - 1);
  }
  const long long K = static_cast<long long>(std::ceil(6.0 * bw / h)) + 1;
  const std::size_t m = detail::next_pow2(len + 2 * static_cast<std::size_t>(K) + 1);
  std::vector<std::complex<double>> A(m), B(m);
  for (double x : s) {
    const double pos = (x - lo) / h;
    std::size_t i = static_cast<std::size_t>(std::floor(pos));
    if (i >= len - 1) i = len - 2;
    const double fr = pos - static_cast<double>(i);
    A[i] += 1.0 - fr;
    A[i + 1] += fr;
  }
  for (long long k = -K; k <= K; ++k) {
    const double a = (static_cast<double>(k) - 0.5) * h / (bw * std::numbers::sqrt2);
    const double b = (static_cast<double>(k) + 0.5) * h / (bw * std::numbers::sqrt2);
    const double w = 0.5 * (std::erf(b) - std::erf(a)) / h;
    B[static_cast<std::size_t>((k + static_cast<long long>(m)) % static_cast<long long>(m))] = w;
  }
  detail::fft_inplace(A);
  detail::fft_inplace(B);
  for (std::size_t i = 0; i < m; ++i) A[i] *= B[i];
  detail::fft_inplace(A, true);
  GriddedDensity f;
  f.x0 = lo;
  f.h = h;
  f.tail_class = TailClass::gaussian;
  f.values.resize(len);
  double tot = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    f.values[i] = std::max(0.0, A[i].real() / static_cast<double>(m));
    tot += f.values[i];
  }
  tot *= h;
  for (double& v : f.values) v /= tot;
  return f;
}

double density_at(const GriddedDensity& f, double x) {
  if (f.tail) {
    const double r = std::abs(x - f.tail->center);
    if (r >= f.tail->radius) return f.tail->value(r);
  }
  const double u = (x - f.x0) / f.h;
  const long long n = static_cast<long long>(f.size());
  if (u < -0.5 || u > static_cast<double>(n) - 0.5) return 0.0;
  long long i = static_cast<long long>(std::floor(u));
  i = std::clamp(i, 1LL, n - 3);
  const double t = u - static_cast<double>(i);
  const double p0 = f.values[static_cast<std::size_t>(i - 1)], p1 = f.values[static_cast<std::size_t>(i)];
  const double p2 = f.values[static_cast<std::size_t>(i + 1)], p3 = f.values[static_cast<std::size_t>(i + 2)];
  // Four-point Lagrange on nodes -1, 0, 1, 2.
  const double v = -p0 * t * (t - 1) * (t - 2) / 6 + p1 * (t + 1) * (t - 1) * (t - 2) / 2 -
                   p2 * (t + 1) * t * (t - 2) / 2 + p3 * (t + 1) * t * (t - 1) / 6;
  return std::max(0.0, v);
}

void write_csv(std::ostream& os, const GriddedDensity& f) {
  os << "x,p\n";
  char buf[64];
  for (std::size_t j = 0; j < f.size(); ++j) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", f.x(j), f.values[j]);
    os << buf;
  }
}

GriddedDensity read_density_csv(std::istream& is) {
  std::vector<double> xs, ps;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    double x, p;
    char comma;
    std::istringstream ls(line);
    if (!(ls >> x >> comma >> p) || comma != ',') {
      if (xs.empty()) continue;  // header
      throw ConfigError("density csv: malformed line '" + line + "'");
    }
    if (p < 0.0) throw ConfigError("density csv: negative density value");
    xs.push_back(x);
    ps.push_back(p);
  }
  if (xs.size() < 4) throw ConfigError("density csv: need at least 4 points");
  const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (std::abs(xs[i] - xs[i - 1] - h) > 1e-6 * h) throw ConfigError("density csv: spacing is not uniform");
  GriddedDensity f;
  f.x0 = xs.front();
  f.h = h;
  f.values = std::move(ps);
  f.tail_class = TailClass::compact;
  double s = 0.0;
  for (double v : f.values) s += v;
  s *= h;
  if (!(s > 0.0)) throw ConfigError("density csv: zero mass");
  for (double& v : f.values) v /= s;
  return f;
}

void write_samples(std::ostream& os, const std::vector<double>& v) {
  char buf[32];
  for (double x : v) {
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    os << buf;
  }
}

std::vector<double> read_samples(std::istream& is) {
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double v;
    if (!(ls >> v)) {
      if (first) {
        first = false;
        continue;
      }
      throw ConfigError("samples: malformed line '" + line + "'");
    }
    first = false;
    out.push_back(v);
  }
  return out;
}

}  // namespace stable_info

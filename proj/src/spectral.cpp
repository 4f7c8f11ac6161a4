#include "spectral.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>

#include "fft.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/specfun.hpp"

namespace stable_info::detail {

namespace {

using std::numbers::pi;

// Envelope threshold for |w|^2 |cf(w)|.
constexpr double kLogFloor = -42.0;

void flatten_into(const RandomLaw& law, double scale, FlatLaw& out) {
  using K = RandomLaw::Kind;
  const double s = std::abs(scale);
  switch (law.kind()) {
    case K::Gaussian:
      if (s > 0) out.atoms.push_back({Atom::Kind::gauss, s * law.p0()});
      break;
    case K::Uniform:
      if (s > 0) out.atoms.push_back({Atom::Kind::uniform, s * law.p0()});
      break;
    case K::Laplace:
      if (s > 0) out.atoms.push_back({Atom::Kind::laplace, s * law.p0()});
      break;
    case K::Cauchy:
      if (s > 0) out.atoms.push_back({Atom::Kind::stable, s * law.p0(), 1.0});
      break;
    case K::SaS:
      if (s > 0) out.atoms.push_back({Atom::Kind::stable, s * law.p1(), law.p0()});
      break;
    case K::Shifted:
      out.shift += scale * law.p0();
      flatten_into(law.left(), scale, out);
      break;
    case K::Scaled:
      flatten_into(law.left(), scale * law.p0(), out);
      break;
    case K::Sum:
      flatten_into(law.left(), scale, out);
      flatten_into(law.right(), scale, out);
      break;
    case K::Empirical: {
      if (s == 0) break;
      std::vector<double> v = law.samples();
      for (double& x : v) x *= scale;
      out.empirical.push_back(std::move(v));
      break;
    }
  }
}

std::vector<CfTerm> atom_series(const Atom& a, double smax) {
  std::vector<CfTerm> out;
  switch (a.kind) {
    case Atom::Kind::gauss: {
      const double c = -0.5 * a.scale * a.scale;
      double coef = 1.0;
      for (int m = 0; 2.0 * m <= smax; ++m) {
        out.push_back({coef, 2.0 * m});
        coef *= c / (m + 1.0);
      }
      break;
    }
    case Atom::Kind::stable: {
      const double c = -std::pow(a.scale, a.alpha);
      double coef = 1.0;
      for (int k = 0; a.alpha * k <= smax + 1e-12; ++k) {
        out.push_back({coef, a.alpha * k});
        coef *= c / (k + 1.0);
      }
      break;
    }
    case Atom::Kind::laplace: {
      const double c = -a.scale * a.scale;
      double coef = 1.0;
      for (int m = 0; 2.0 * m <= smax; ++m) {
        out.push_back({coef, 2.0 * m});
        coef *= c;
      }
      break;
    }
    case Atom::Kind::uniform: {
      const double c = -a.scale * a.scale;
      double coef = 1.0;
      for (int m = 0; 2.0 * m <= smax; ++m) {
        out.push_back({coef, 2.0 * m});
        coef *= c / ((2.0 * m + 2.0) * (2.0 * m + 3.0));
      }
      break;
    }
  }
  return out;
}

std::vector<CfTerm> multiply(const std::vector<CfTerm>& A, const std::vector<CfTerm>& B, double smax) {
  std::map<long long, CfTerm> acc;
  for (const auto& x : A)
    for (const auto& y : B) {
      const double s = x.s + y.s;
      if (s > smax + 1e-12) continue;
      const long long key = std::llround(s * 1e9);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, CfTerm{x.a * y.a, s});
      else
        it->second.a += x.a * y.a;
    }
  std::vector<CfTerm> out;
  for (auto& kv : acc) out.push_back(kv.second);
  return out;
}

bool near_even_integer(double s) {
  const double half = 0.5 * s;
  return std::abs(half - std::nearbyint(half)) < 1e-9;
}

double atom_light_extent(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::gauss: return 40.0 * a.scale;
    case Atom::Kind::laplace: return 60.0 * a.scale;
    case Atom::Kind::uniform: return 2.0 * a.scale;
    case Atom::Kind::stable: return a.alpha >= 2.0 ? 40.0 * std::sqrt(2.0) * a.scale : 0.0;
  }
  return 0.0;
}

}  // namespace

FlatLaw flatten(const RandomLaw& law) {
  FlatLaw out;
  flatten_into(law, 1.0, out);
  return out;
}

double SpectralModel::cf(double w) const {
  w = std::abs(w);
  double v = 1.0;
  for (const auto& a : atoms) {
    switch (a.kind) {
      case Atom::Kind::gauss: v *= std::exp(-0.5 * a.scale * a.scale * w * w); break;
      case Atom::Kind::stable: v *= std::exp(-std::pow(a.scale * w, a.alpha)); break;
      case Atom::Kind::laplace: v /= 1.0 + a.scale * a.scale * w * w; break;
      case Atom::Kind::uniform: {
        const double t = a.scale * w;
        v *= t == 0.0 ? 1.0 : std::sin(t) / t;
        break;
      }
    }
  }
  return v;
}

double SpectralModel::log_envelope(double w) const {
  w = std::abs(w);
  double v = 0.0;
  for (const auto& a : atoms) {
    switch (a.kind) {
      case Atom::Kind::gauss: v -= 0.5 * a.scale * a.scale * w * w; break;
      case Atom::Kind::stable: v -= std::pow(a.scale * w, a.alpha); break;
      case Atom::Kind::laplace: v -= std::log1p(a.scale * a.scale * w * w); break;
      case Atom::Kind::uniform: v -= std::log(std::max(1.0, a.scale * w)); break;
    }
  }
  return v;
}

std::vector<CfTerm> SpectralModel::expansion(double smax) const {
  std::vector<CfTerm> acc{{1.0, 0.0}};
  for (const auto& a : atoms) acc = multiply(acc, atom_series(a, smax), smax);
  std::vector<CfTerm> out;
  for (const auto& t : acc)
    if (t.s > 0.0 && t.a != 0.0) out.push_back(t);
  return out;
}

bool SpectralModel::decays() const {
  return std::any_of(atoms.begin(), atoms.end(),
                     [](const Atom& a) { return a.kind == Atom::Kind::gauss || a.kind == Atom::Kind::stable; });
}

TailClass SpectralModel::tail_class() const {
  bool expo = false, gauss = false;
  for (const auto& a : atoms) {
    if (a.kind == Atom::Kind::stable && a.alpha < 2.0) return TailClass::power;
    if (a.kind == Atom::Kind::laplace) expo = true;
    if (a.kind == Atom::Kind::gauss || a.kind == Atom::Kind::stable) gauss = true;
  }
  if (expo) return TailClass::exponential;
  if (gauss) return TailClass::gaussian;
  return TailClass::compact;
}

double SpectralModel::omega_max() const {
  if (!decays()) return std::numeric_limits<double>::infinity();
  auto done = [&](double w) { return log_envelope(w) + 2.0 * std::log1p(w) < kLogFloor; };
  double lo = 0.0, hi = 1.0;
  while (!done(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw ConfigError("characteristic function does not decay on any practical grid");
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (done(mid) ? hi : lo) = mid;
  }
  return hi;
}

double SpectralModel::extent(double extent_factor) const {
  double heavy = 0.0, light = 0.0;
  for (const auto& a : atoms) {
    if (a.kind == Atom::Kind::stable && a.alpha < 2.0)
      heavy = std::max(heavy, extent_factor * a.scale);
    else
      light += atom_light_extent(a);
  }
  return heavy + light;
}

double SpectralModel::min_extent() const {
  double heavy = 0.0, light = 0.0;
  for (const auto& a : atoms) {
    if (a.kind == Atom::Kind::stable && a.alpha < 2.0)
      heavy = std::max(heavy, 50.0 * a.scale);
    else
      light += 0.5 * atom_light_extent(a);
  }
  return heavy + light;
}

double riesz_k(double s) {
  return std::tgamma(1.0 + s) * std::sin(0.5 * pi * s) / pi;
}

std::vector<TailTerm> tail_terms(const std::vector<CfTerm>& terms, double shift) {
  std::map<long long, TailTerm> acc;
  for (const auto& t : terms) {
    const double ss = t.s + shift;
    if (ss <= 0.0 || near_even_integer(ss)) continue;
    const double c = -t.a * riesz_k(ss);
    if (c == 0.0 || !std::isfinite(c)) continue;
    const long long key = std::llround(ss * 1e9);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, TailTerm{c, 1.0 + ss});
    else
      it->second.coef += c;
  }
  std::vector<TailTerm> out;
  for (auto& kv : acc)
    if (kv.second.coef != 0.0) out.push_back(kv.second);
  return out;
}

std::vector<double> alias_correction(std::size_t n, double h, const std::vector<TailTerm>& tail) {
  std::vector<double> corr(n, 0.0);
  if (tail.empty()) return corr;
  const double P = static_cast<double>(n) * h;
  std::vector<TailTerm> kept;
  for (const auto& t : tail)
    if (std::abs(t.coef) * std::pow(0.5 * P, -t.exponent) * 4.0 > 1e-30) kept.push_back(t);
  if (kept.empty()) return corr;

  constexpr std::size_t M = 2049;
  const double du = 0.5 / static_cast<double>(M - 1);
  std::vector<double> node(M);
  for (std::size_t i = 0; i < M; ++i) {
    const double u = du * static_cast<double>(i);
    double v = 0.0;
    for (const auto& t : kept)
      v += t.coef * std::pow(P, -t.exponent) * (hurwitz_zeta(t.exponent, 1.0 + u) + hurwitz_zeta(t.exponent, 1.0 - u));
    node[i] = v;
  }
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline(node.data(), M, 0.0, du, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = (static_cast<double>(j) - 0.5 * static_cast<double>(n) + 0.5) * h;
    corr[j] = spline(std::min(0.5, std::abs(x) / P));
  }
  return corr;
}

std::vector<double> invert(std::size_t n, double h, const std::function<double(double)>& S,
                           const std::vector<TailTerm>& tail) {
  const double dw = 2.0 * pi / (static_cast<double>(n) * h);
  std::vector<double> sv(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) sv[k] = S(dw * static_cast<double>(k));
  std::vector<std::complex<double>> g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long long kp = k < n / 2 ? static_cast<long long>(k) : static_cast<long long>(k) - static_cast<long long>(n);
    const double val = sv[static_cast<std::size_t>(std::llabs(kp))];
    const double sgn = (kp & 1) ? -1.0 : 1.0;
    const double ang = -pi * static_cast<double>(kp) / static_cast<double>(n);
    g[k] = std::polar(sgn * val, ang);
  }
  fft_inplace(g);
  const std::vector<double> corr = alias_correction(n, h, tail);
  std::vector<double> out(n);
  const double scale = dw / (2.0 * pi);
  for (std::size_t j = 0; j < n; ++j) out[j] = g[j].real() * scale - corr[j];
  return out;
}

std::vector<double> direct_atom(const Atom& a, std::size_t n, double h, double offset) {
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = (static_cast<double>(j) - 0.5 * static_cast<double>(n) + offset) * h;
    const double lo = x - 0.5 * h, hi = x + 0.5 * h;
    double m = 0.0;
    switch (a.kind) {
      case Atom::Kind::uniform: {
        const double l = std::max(lo, -a.scale), r = std::min(hi, a.scale);
        m = r > l ? (r - l) / (2.0 * a.scale) : 0.0;
        break;
      }
      case Atom::Kind::laplace: {
        auto upper = [&](double t) {  // P(X > t)
          return t >= 0 ? 0.5 * std::exp(-t / a.scale) : 1.0 - 0.5 * std::exp(t / a.scale);
        };
        if (lo >= 0.0)
          m = 0.5 * std::exp(-lo / a.scale) * -std::expm1(-h / a.scale);
        else if (hi <= 0.0)
          m = 0.5 * std::exp(hi / a.scale) * -std::expm1(-h / a.scale);
        else
          m = upper(lo) - upper(hi);
        break;
      }
      case Atom::Kind::gauss: {
        const double s = a.scale * std::sqrt(2.0);
        if (lo > 0) m = 0.5 * (std::erfc(lo / s) - std::erfc(hi / s));
        else if (hi < 0) m = 0.5 * (std::erfc(-hi / s) - std::erfc(-lo / s));
        break;
      }
      case Atom::Kind::stable: throw MethodError("stable atoms are realized spectrally");
    }
    out[j] = m / h;
  }
  return out;
}

std::vector<double> convolve_centered(const std::vector<double>& f, const std::vector<double>& g, double h) {
  // f on the half-offset grid, g on the integer grid (offset 0).
  const std::size_t n = f.size();
  const std::size_t m = next_pow2(2 * n);
  std::vector<std::complex<double>> A(m), B(m);
  for (std::size_t i = 0; i < n; ++i) {
    A[i] = f[i];
    B[i] = g[i];
  }
  fft_inplace(A);
  fft_inplace(B);
  for (std::size_t i = 0; i < m; ++i) A[i] *= B[i];
  fft_inplace(A, true);
  std::vector<double> out(n);
  const double scale = h / static_cast<double>(m);
  for (std::size_t j = 0; j < n; ++j) out[j] = std::max(0.0, A[j + n / 2].real() * scale);
  return out;
}

}  // namespace stable_info::detail

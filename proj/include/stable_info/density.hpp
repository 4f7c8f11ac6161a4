#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stable_info/law.hpp"

namespace stable_info {

namespace detail {
struct SpectralModel;
}

// Grid sizing knobs shared by every numeric path.
struct GridOptions {
  std::size_t n_min = std::size_t{1} << 16;
  std::size_t n_max = std::size_t{1} << 22;
  double extent_factor = 200.0;  // half-width in units of a heavy-tailed scale
};

// Symmetric grid of n points about `center`, x_j = center + (j - n/2 + 1/2) h.
struct GridSpec {
  std::size_t n = 0;
  double h = 0.0;
  double center = 0.0;

  double half_width() const { return 0.5 * static_cast<double>(n) * h; }
  double x(std::size_t j) const { return center + (static_cast<double>(j) - 0.5 * static_cast<double>(n) + 0.5) * h; }
};

enum class TailClass { power, exponential, gaussian, compact };

struct TailTerm {
  double coef;      // p(x) ~ coef * |x - center|^-exponent
  double exponent;
};

// Power-law tail beyond `radius` from `center`, as a short asymptotic series.
struct TailLaw {
  double center = 0.0;
  double radius = 0.0;
  std::vector<TailTerm> terms;

  double exponent() const { return terms.front().exponent; }
  double coefficient() const { return terms.front().coef; }
  /// Series value at distance r > 0 from the center.
  double value(double r) const;
};

struct GriddedDensity {
  double x0 = 0.0;
  double h = 0.0;
  std::vector<double> values;
  std::optional<TailLaw> tail;
  TailClass tail_class = TailClass::compact;
  // Exact characteristic function, when the density was realized spectrally.
  std::shared_ptr<const detail::SpectralModel> source;

  std::size_t size() const { return values.size(); }
  double x(std::size_t j) const { return x0 + static_cast<double>(j) * h; }
  /// Mass on the grid plus analytic tail mass.
  double total_mass() const;
  /// Mass carried by the analytic tail only.
  double tail_mass() const;
};

/// Automatic grid for an analytic law: spacing from the decay of its
/// characteristic function, extent from its scales.
GridSpec auto_grid(const RandomLaw& law, const GridOptions& opt = {});

/// Tail class of the law (heaviest component wins).
TailClass tail_class(const RandomLaw& law);

GriddedDensity realize(const RandomLaw& law, const GridOptions& opt = {});
GriddedDensity realize(const RandomLaw& law, const GridSpec& grid);

/// Linear convolution (FFT, zero padded); g is resampled onto f's spacing if needed.
GriddedDensity convolve(const GriddedDensity& f, const GriddedDensity& g);

/// Differential entropy in nats, with the analytic tail contribution.
double entropy(const GriddedDensity& f);
double entropy(const RandomLaw& law, const GridOptions& opt = {});

/// E ln(1 + |X|).
double log_moment(const RandomLaw& law, const GridOptions& opt = {});

/// Gaussian-kernel density estimate; bandwidth 0.9 (IQR/1.34) n^-1/5 unless given.
GriddedDensity kde(const std::vector<double>& samples, double bandwidth = 0.0,
                   const GridOptions& opt = {});

/// Integral of p(x) * fn(x) over the grid plus both analytic tails.
template <class F>
double expect(const GriddedDensity& f, F&& fn);

/// Cubic interpolation of the density at x (0 outside the grid, tail series beyond it).
double density_at(const GriddedDensity& f, double x);

void write_csv(std::ostream& os, const GriddedDensity& f);
GriddedDensity read_density_csv(std::istream& is);
void write_samples(std::ostream& os, const std::vector<double>& v);
std::vector<double> read_samples(std::istream& is);

namespace detail {
double tail_integral(double radius, const std::function<double(double)>& fn);
}

template <class F>
double expect(const GriddedDensity& f, F&& fn) {
  double s = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j) s += f.values[j] * fn(f.x(j));
  s *= f.h;
  if (f.tail) {
    const TailLaw& t = *f.tail;
    s += detail::tail_integral(t.radius, [&](double r) {
      return t.value(r) * (fn(t.center + r) + fn(t.center - r));
    });
  }
  return s;
}

}  // namespace stable_info

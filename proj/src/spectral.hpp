#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "stable_info/density.hpp"
#include "stable_info/law.hpp"

namespace stable_info::detail {

// Symmetric building block of a flattened law.
struct Atom {
  enum class Kind { gauss, uniform, laplace, stable };
  Kind kind;
  double scale;
  double alpha = 2.0;  // stable only
};

// Small-|w| expansion term a |w|^s of a characteristic function.
struct CfTerm {
  double a;
  double s;
};

// Law flattened to location + independent symmetric atoms + sample sets.
struct FlatLaw {
  double shift = 0.0;
  std::vector<Atom> atoms;
  std::vector<std::vector<double>> empirical;

  bool point_mass() const { return atoms.empty() && empirical.empty(); }
};

FlatLaw flatten(const RandomLaw& law);

// Characteristic function of a centered sum of atoms.
struct SpectralModel {
  std::vector<Atom> atoms;
  double shift = 0.0;

  double cf(double w) const;
  double log_envelope(double w) const;
  /// Non-constant terms of the small-|w| expansion, powers up to smax.
  std::vector<CfTerm> expansion(double smax = 16.0) const;
  /// Some factor decays faster than any power (Gaussian or stable).
  bool decays() const;
  TailClass tail_class() const;
  /// Smallest w beyond which |w|^2 |cf| is negligible.
  double omega_max() const;
  /// Half-width needed to hold the law on a grid.
  double extent(double extent_factor) const;
  /// Smallest admissible half-width when the grid has to be trimmed.
  double min_extent() const;
};

/// Gamma(1+s) sin(pi s / 2) / pi.
double riesz_k(double s);

/// Power tail of F^{-1}[|w|^shift S] given the expansion of S (constant term
/// included by the caller when needed).
std::vector<TailTerm> tail_terms(const std::vector<CfTerm>& terms, double shift);

/// Samples F^{-1}[S] on the centered half-offset grid (n, h), with the periodic
/// images of the power tail removed.
std::vector<double> invert(std::size_t n, double h, const std::function<double(double)>& S,
                           const std::vector<TailTerm>& tail);

/// Sum over m != 0 of the tail series at x + m P, P = n h.
std::vector<double> alias_correction(std::size_t n, double h, const std::vector<TailTerm>& tail);

/// Direct cell-averaged realization of a light-tailed atom; offset 0.5 gives
/// the half-offset grid, 0 the integer grid.
std::vector<double> direct_atom(const Atom& a, std::size_t n, double h, double offset = 0.5);

/// Linear convolution of two centered grids of equal length n, cropped back to n.
std::vector<double> convolve_centered(const std::vector<double>& f, const std::vector<double>& g, double h);

/// Grid sized for the model under the given options.
GridSpec grid_for(const SpectralModel& m, const GridOptions& opt);

/// Realize the model on a centered grid of n points with spacing h; the
/// density is located at m.shift.
GriddedDensity realize_model(const SpectralModel& m, std::size_t n, double h);

/// Throws ConfigError when (n, h) cannot resolve the model.
void check_grid(const SpectralModel& m, std::size_t n, double h);

}  // namespace stable_info::detail

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stable_info/density.hpp"

namespace stable_info {

// S(alpha, beta, gamma, delta). Only the symmetric case has numerics.
struct StableParams {
  double alpha = 2.0;
  double beta = 0.0;
  double gamma = 1.0;
  double delta = 0.0;

  static StableParams symmetric(double alpha, double gamma);
  /// Throws DomainError on out-of-range parameters.
  void validate() const;
};

// Z~_alpha ~ S(alpha, (1/alpha)^(1/alpha)), whose alpha-power is one.
struct ReferenceStable {
  double alpha;
  double gamma_ref;

  explicit ReferenceStable(double alpha);
  double entropy() const;
};

std::complex<double> cf_sas(const StableParams& p, double omega);

/// k1 = 2^a (sin(pi a/2)/(pi a/2)) Gamma((2+a)/2) Gamma((d+a)/2) / Gamma(d/2).
double tail_constant_k1(double alpha, int d);

/// Density of S(alpha, gamma) on the grid (n, h). A zero-length grid picks one automatically.
GriddedDensity pdf_grid_sas(double alpha, double gamma, const GridSpec& grid = {});

/// ln p(x) for S(alpha, gamma): interpolated table near the origin, tail series beyond.
double logpdf_sas(double alpha, double gamma, double x);

/// Radius (gamma = 1) where logpdf_sas switches to the tail series.
double logpdf_handoff_radius(double alpha);

/// Chambers-Mallows-Stuck draws; `stream` selects an independent substream.
std::vector<double> sample_sas(double alpha, double gamma, std::size_t n, std::uint64_t seed,
                               std::uint64_t stream = 0);

/// h(Z~_alpha) in nats, cached per alpha.
double reference_entropy(double alpha);

inline double reference_gamma(double alpha) { return std::pow(1.0 / alpha, 1.0 / alpha); }

}  // namespace stable_info

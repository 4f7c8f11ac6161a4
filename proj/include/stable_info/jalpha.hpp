#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stable_info/density.hpp"
#include "stable_info/law.hpp"
#include "stable_info/report.hpp"

namespace stable_info {

enum class JMethod { closed_form_stable, spectral, finite_difference };

std::string to_string(JMethod m);

struct JDiagnostics {
  std::size_t n_points = 0;
  double h = 0.0;
  double omega_cutoff = 0.0;
  double tail_mass = 0.0;
  bool presmoothed = false;
  double presmooth_gamma = 0.0;
  std::string note;
};

struct JAlphaEstimate {
  double value = 0.0;  // +inf when J_alpha diverges
  double alpha = 0.0;
  JMethod method = JMethod::spectral;
  std::optional<double> step;
  JDiagnostics diagnostics;
  std::vector<double> steps;      // finite differences only
  std::vector<double> quotients;  // (h(X + t^(1/a) N) - h(X)) / t
};

/// d / (alpha gamma^alpha).
double jalpha_closed_stable(double alpha, double gamma, int d = 1);

/// Spectral evaluation: integral of ln p against F^{-1}[|w|^alpha phi].
JAlphaEstimate jalpha_spectral(const GriddedDensity& f, double alpha);

/// Law-level J_alpha: closed form for a matching stable law, +inf for tails
/// too light to be finite, otherwise spectral (presmoothed when the law is
/// not smooth enough).
JAlphaEstimate jalpha(const RandomLaw& law, double alpha, const GridOptions& opt = {});

/// Entropy difference quotients along t_sequence (default {0.2, 0.1, 0.05, 0.025} s^alpha),
/// extrapolated linearly in t from the two smallest steps.
JAlphaEstimate jalpha_finite_diff(const RandomLaw& law, double alpha, std::vector<double> t_sequence = {},
                                  const GridOptions& opt = {});

/// d/d eta h(X + eta^(1/alpha) gamma N) against gamma^alpha J_alpha(X_eta).
BoundReport debruijn_check(const RandomLaw& law, double alpha, double gamma, double eta,
                           const GridOptions& opt = {});

}  // namespace stable_info

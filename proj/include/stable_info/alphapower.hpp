#pragma once

#include <string>

#include "stable_info/density.hpp"
#include "stable_info/law.hpp"

namespace stable_info {

enum class PowerMethod { closed_form_alpha2, closed_form_stable, numeric_root, point_mass };

std::string to_string(PowerMethod m);

struct AlphaPowerResult {
  double value = 0.0;  // +inf when the alpha = 2 power diverges
  double alpha = 0.0;
  PowerMethod method = PowerMethod::numeric_root;
  double residual = 0.0;  // |g(P*) - h(Z~)|
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double std_error = 0.0;  // batch-split estimate, sample laws only

  bool infinite() const;
};

struct AlphaPowerOptions {
  double root_tol = 1e-6;  // relative width of the final bracket
  GridOptions grid;
};

/// g(P) = -E ln p_Z~(X / P).
double g_of_P(const RandomLaw& law, double alpha, double P, const GridOptions& opt = {});

/// P_alpha(X): unique root of g(P) = h(Z~_alpha).
AlphaPowerResult alpha_power(const RandomLaw& law, double alpha, const AlphaPowerOptions& opt = {});

/// Same, for a density that is already on a grid.
AlphaPowerResult alpha_power(const GriddedDensity& f, double alpha, const AlphaPowerOptions& opt = {});

}  // namespace stable_info

#pragma once

#include <vector>

#include "stable_info/density.hpp"
#include "stable_info/law.hpp"
#include "stable_info/report.hpp"

namespace stable_info {

struct EntropyPowerAlpha {
  double value = 0.0;
  double alpha = 0.0;
  int d = 1;
};

/// N_alpha = exp((alpha/d)(h - h(Z~_alpha))), 1 < alpha <= 2.
/// For d > 1 only alpha = 2 is available, where h(Z~_2) = (d/2) ln(2 pi e).
EntropyPowerAlpha entropy_power_alpha(double h, double alpha, int d = 1);

/// J(X1+X2)^(1/(1-a)) >= J(X1)^(1/(1-a)) + J(X2)^(1/(1-a)). slack = lhs - rhs.
/// An infinite J contributes zero to either side.
BoundReport gfii_check(const RandomLaw& law1, const RandomLaw& law2, double alpha,
                       const GridOptions& opt = {});

/// Upper bound on h(X + Z), Z ~ S(alpha, gamma):
/// h_X + gamma^a J 2F1(a-1, a-1; a; -((a gamma^a / d) J)^(1/(a-1))).
double entropy_sum_upper(double h_x, double j_alpha_x, double alpha, double gamma, int d = 1);

/// Numeric h(X + Z) against entropy_sum_upper. slack = bound - numeric.
BoundReport sum_bound_check(const RandomLaw& law, double alpha, double gamma, const GridOptions& opt = {});

/// N_alpha(X) J_alpha(X) / d against kappa_alpha. slack = lhs - rhs.
BoundReport giie_product(const RandomLaw& law, double alpha, const GridOptions& opt = {});

/// J_alpha(X) >= kappa_alpha d / P_alpha(X)^alpha. slack = lhs - rhs.
BoundReport power_fisher_bound(const RandomLaw& law, double alpha, const GridOptions& opt = {});

struct GiieRow {
  double alpha;
  double r;
  double product;
  double kappa;
};

/// Products for X ~ S(r, r^(-1/r)) over every (alpha, r) pair.
std::vector<GiieRow> giie_table(const std::vector<double>& alphas, const std::vector<double>& rs,
                                const GridOptions& opt = {});

struct GiieMixRow {
  double sigma;
  double product;
  double kappa;
};

/// N_a J_a of S(r, r^(-1/r)) + N(0, sigma^2), by default r = a = 1.8.
std::vector<GiieMixRow> giie_mix(const std::vector<double>& sigmas, double alpha = 1.8, double r = 1.8,
                                 const GridOptions& opt = {});

/// sigma with the smallest product.
double giie_mix_argmin(const std::vector<GiieMixRow>& rows);

/// Bound on I(aX+Z; X) - I(X+Z; X): ln|a| plus the vanishing 2F1 term.
double scaling_gain_bound(double a, double j_alpha_x, double alpha, double gamma, int d = 1);

}  // namespace stable_info

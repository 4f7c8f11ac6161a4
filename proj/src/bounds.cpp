#include "stable_info/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "stable_info/alphapower.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/jalpha.hpp"
#include "stable_info/specfun.hpp"
#include "stable_info/stable.hpp"

namespace stable_info {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError(std::string(who) + ": alpha must lie in (1, 2]");
}

// J^(1/(1-a)), with J = inf mapped to 0.
double gfii_term(double J, double alpha) { return std::isinf(J) ? 0.0 : std::pow(J, 1.0 / (1.0 - alpha)); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

EntropyPowerAlpha entropy_power_alpha(double h, double alpha, int d) {
  check_alpha(alpha, "entropy_power_alpha");
  if (d < 1) throw DomainError("entropy_power_alpha: d must be positive");
  double href;
  if (d == 1) {
    href = reference_entropy(alpha);
  } else if (alpha == 2.0) {
    href = 0.5 * d * std::log(2.0 * std::numbers::pi * std::numbers::e);
  } else {
    throw DomainError("entropy_power_alpha: d > 1 is only available at alpha = 2");
  }
  return {std::exp(alpha / d * (h - href)), alpha, d};
}

BoundReport gfii_check(const RandomLaw& law1, const RandomLaw& law2, double alpha, const GridOptions& opt) {
  check_alpha(alpha, "gfii_check");
  const JAlphaEstimate j1 = jalpha(law1, alpha, opt);
  const JAlphaEstimate j2 = jalpha(law2, alpha, opt);
  const JAlphaEstimate js = jalpha(RandomLaw::sum(law1, law2), alpha, opt);
  BoundReport r;
  r.name = "gfii";
  r.lhs = gfii_term(js.value, alpha);
  r.rhs = gfii_term(j1.value, alpha) + gfii_term(j2.value, alpha);
  r.slack = r.lhs - r.rhs;
  r.rel_error = rel(r.lhs, r.rhs);
  r.inputs = {{"alpha", alpha}, {"J1", j1.value}, {"J2", j2.value}, {"J_sum", js.value}};
  r.method = to_string(j1.method) + "," + to_string(j2.method) + "," + to_string(js.method);
  return r;
}

double entropy_sum_upper(double h_x, double j, double alpha, double gamma, int d) {
  check_alpha(alpha, "entropy_sum_upper");
  if (!(j >= 0.0)) throw DomainError("entropy_sum_upper: J must be nonnegative");
  if (!(gamma > 0.0)) throw DomainError("entropy_sum_upper: gamma must be positive");
  if (d < 1) throw DomainError("entropy_sum_upper: d must be positive");
  if (std::isinf(j)) return kInf;
  const double ga = std::pow(gamma, alpha);
  const double z = -std::pow(alpha * ga * j / d, 1.0 / (alpha - 1.0));
  return h_x + ga * j * gauss_2f1(alpha - 1.0, alpha - 1.0, alpha, z);
}

BoundReport sum_bound_check(const RandomLaw& law, double alpha, double gamma, const GridOptions& opt) {
  check_alpha(alpha, "sum_bound_check");
  const double hx = entropy(law, opt);
  const JAlphaEstimate j = jalpha(law, alpha, opt);
  const double hs = entropy(RandomLaw::sum(law, RandomLaw::sas(alpha, gamma)), opt);
  BoundReport r;
  r.name = "sum_bound";
  r.lhs = hs;
  r.rhs = entropy_sum_upper(hx, j.value, alpha, gamma, 1);
  r.slack = r.rhs - r.lhs;
  r.rel_error = rel(r.lhs, r.rhs);
  r.inputs = {{"alpha", alpha}, {"gamma", gamma}, {"h_x", hx}, {"J", j.value}};
  r.method = to_string(j.method);
  if (!j.diagnostics.note.empty()) r.method += "; " + j.diagnostics.note;
  return r;
}

BoundReport giie_product(const RandomLaw& law, double alpha, const GridOptions& opt) {
  check_alpha(alpha, "giie_product");
  const double h = entropy(law, opt);
  const JAlphaEstimate j = jalpha(law, alpha, opt);
  const double N = entropy_power_alpha(h, alpha, 1).value;
  BoundReport r;
  r.name = "giie";
  r.lhs = N * j.value;
  r.rhs = kappa_alpha(alpha);
  r.slack = r.lhs - r.rhs;
  r.rel_error = rel(r.lhs, r.rhs);
  r.inputs = {{"alpha", alpha}, {"h", h}, {"N_alpha", N}, {"J", j.value}};
  r.method = to_string(j.method);
  if (!j.diagnostics.note.empty()) r.method += "; " + j.diagnostics.note;
  return r;
}

BoundReport power_fisher_bound(const RandomLaw& law, double alpha, const GridOptions& opt) {
  check_alpha(alpha, "power_fisher_bound");
  const JAlphaEstimate j = jalpha(law, alpha, opt);
  AlphaPowerOptions po;
  po.grid = opt;
  const double P = alpha_power(law, alpha, po).value;
  BoundReport r;
  r.name = "power_fisher";
  r.lhs = j.value;
  r.rhs = kappa_alpha(alpha) / std::pow(P, alpha);
  r.slack = r.lhs - r.rhs;
  r.rel_error = rel(r.lhs, r.rhs);
  r.inputs = {{"alpha", alpha}, {"P_alpha", P}};
  r.method = to_string(j.method);
  return r;
}

std::vector<GiieRow> giie_table(const std::vector<double>& alphas, const std::vector<double>& rs,
                                const GridOptions& opt) {
  std::vector<GiieRow> out;
  for (double a : alphas)
    for (double r : rs) {
      const BoundReport b = giie_product(RandomLaw::sas(r, std::pow(r, -1.0 / r)), a, opt);
      out.push_back({a, r, b.lhs, b.rhs});
    }
  return out;
}

std::vector<GiieMixRow> giie_mix(const std::vector<double>& sigmas, double alpha, double r, const GridOptions& opt) {
  const RandomLaw base = RandomLaw::sas(r, std::pow(r, -1.0 / r));
  std::vector<GiieMixRow> out;
  for (double s : sigmas) {
    const RandomLaw x = s > 0.0 ? RandomLaw::sum(base, RandomLaw::gaussian(s)) : base;
    const BoundReport b = giie_product(x, alpha, opt);
    out.push_back({s, b.lhs, b.rhs});
  }
  return out;
}

double giie_mix_argmin(const std::vector<GiieMixRow>& rows) {
  if (rows.empty()) throw DomainError("giie_mix_argmin: no rows");
  return std::min_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.product < b.product; })
      ->sigma;
}

double scaling_gain_bound(double a, double j, double alpha, double gamma, int d) {
  if (a == 0.0) throw DomainError("scaling_gain_bound: a must be nonzero");
  return std::log(std::abs(a)) + entropy_sum_upper(0.0, j, alpha, gamma / std::abs(a), d);
}

}  // namespace stable_info

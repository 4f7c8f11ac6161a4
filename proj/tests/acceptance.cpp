// One line per acceptance criterion; exit status 1 when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stable_info/alphapower.hpp"
#include "stable_info/bounds.hpp"
#include "stable_info/capacity.hpp"
#include "stable_info/density.hpp"
#include "stable_info/estimate.hpp"
#include "stable_info/jalpha.hpp"
#include "stable_info/law.hpp"
#include "stable_info/specfun.hpp"

using namespace stable_info;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

int failures = 0;

void criterion(int k, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s%s (%.1f s)\n", k, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<RandomLaw> smooth_laws() {
  return {RandomLaw::sum(RandomLaw::gaussian(1.0), RandomLaw::sas(1.5, 0.5)),
          RandomLaw::sum(RandomLaw::laplace(1.0), RandomLaw::sas(1.5, 0.5)),
          RandomLaw::sum(RandomLaw::uniform(1.0), RandomLaw::cauchy(0.3))};
}

std::vector<RandomLaw> matrix_laws() {
  return {RandomLaw::gaussian(1.0), RandomLaw::laplace(1.0), RandomLaw::sum(RandomLaw::uniform(1.0), RandomLaw::cauchy(0.3)),
          RandomLaw::sas(1.5, 1.0), RandomLaw::sum(RandomLaw::laplace(1.0), RandomLaw::sas(1.3, 0.4))};
}

}  // namespace

int main() {
  criterion(1, [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const double p = alpha_power(RandomLaw::gaussian(std::sqrt(2.0)), 1.2).value;
    const double secs = seconds_since(t0);
    o.detail << " P_1.2=" << p << " target 0.7869+-0.005";
    o.require(std::abs(p - 0.7869) <= 0.005, "anchor");
    o.require(secs < 30.0, "runtime");
  });

  criterion(2, [](Outcome& o) {
    for (double a : {1.0, std::sqrt(3.0)}) {
      const double p = alpha_power(RandomLaw::uniform(a), 0.8).value;
      o.detail << " a=" << a << ":P/a=" << p / a;
      o.require(std::abs(p - 0.1753 * a) <= 0.002 * a, "anchor");
    }
    o.detail << " target 0.1753+-0.002";
  });

  criterion(3, [](Outcome& o) {
    double worst = 0.0;
    for (double a : {1.2, 1.5, 1.8})
      for (double g : {0.5, 1.0, 2.0}) {
        // realized on a grid, not through the closed-form shortcut
        const double p = alpha_power(realize(RandomLaw::sas(a, g)), a).value;
        worst = std::max(worst, rel(p, std::pow(a, 1 / a) * g));
      }
    o.detail << " max relerr=" << worst;
    o.require(worst < 1e-3, "closed form");
  });

  criterion(4, [](Outcome& o) {
    const double k18 = kappa_alpha(1.8), k2 = kappa_alpha(2.0);
    o.detail << " kappa_1.8=" << k18 << " kappa_2-1=" << k2 - 1;
    o.require(std::abs(k18 - 0.7333) <= 5e-4, "kappa 1.8");
    o.require(std::abs(k2 - 1.0) <= 1e-10, "kappa 2");
  });

  criterion(5, [](Outcome& o) {
    double worst_closed = 0.0, worst_fd = 0.0;
    for (double a : {1.2, 1.5, 1.8, 2.0})
      for (double g : {0.5, 1.0})
        worst_closed = std::max(worst_closed, rel(jalpha_spectral(realize(RandomLaw::sas(a, g)), a).value,
                                                  jalpha_closed_stable(a, g)));
    for (const RandomLaw& law : smooth_laws())
      for (double a : {1.2, 1.5, 1.8, 2.0})
        worst_fd = std::max(worst_fd, rel(jalpha_finite_diff(law, a).value, jalpha(law, a).value));
    o.detail << " spectral vs closed=" << worst_closed << " fd vs spectral=" << worst_fd;
    o.require(worst_closed < 0.01, "closed form");
    o.require(worst_fd < 0.03, "fd agreement");
  });

  criterion(6, [](Outcome& o) {
    double worst = 0.0, worst_chain = 0.0;
    for (const RandomLaw& law : matrix_laws())
      for (double a : {1.2, 1.5, 1.8})
        for (double eta : {0.2, 0.5}) worst = std::max(worst, debruijn_check(law, a, 1.0, eta).rel_error);
    for (double eta : {0.2, 0.5}) worst = std::max(worst, debruijn_check(RandomLaw::gaussian(1.0), 2.0, 1.0, eta).rel_error);
    for (double a : {1.2, 1.5, 1.8})
      for (double eta : {0.2, 0.5}) worst_chain = std::max(worst_chain, debruijn_check(RandomLaw::sas(a, 0.8), a, 1.0, eta).rel_error);
    o.detail << " max relerr=" << worst << " stable chain=" << worst_chain;
    o.require(worst < 0.02, "matrix");
    o.require(worst_chain < 0.01, "stable chain");
  });

  criterion(7, [](Outcome& o) {
    double min_slack = 1e300;
    const auto track = [&](const BoundReport& r) { min_slack = std::min(min_slack, r.slack); };
    const std::vector<RandomLaw> laws = matrix_laws();
    for (double a : {1.2, 1.4, 1.6, 1.8, 2.0}) {
      for (std::size_t i = 0; i < laws.size(); ++i) {
        track(gfii_check(laws[i], laws[(i + 1) % laws.size()], a));
        track(sum_bound_check(laws[i], a, 0.7));
        track(giie_product(laws[i], a));
      }
    }
    for (const GiieRow& r : giie_table({1.2, 1.4, 1.6, 1.8, 2.0}, {0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8}))
      min_slack = std::min(min_slack, r.product - r.kappa);
    const BoundReport gf = gfii_check(RandomLaw::gaussian(1.0), RandomLaw::gaussian(2.0), 2.0);
    const BoundReport sb = sum_bound_check(RandomLaw::gaussian(1.3), 2.0, 1.3 / std::sqrt(2.0));
    const BoundReport gi = giie_product(RandomLaw::gaussian(1.0), 2.0);
    const double eq = std::max({std::abs(gf.slack) / gf.lhs, std::abs(sb.slack) / std::abs(sb.rhs), std::abs(gi.lhs - 1.0)});
    o.detail << " min slack=" << min_slack << " equality relerr=" << eq;
    o.require(min_slack >= -1e-3, "slack");
    o.require(eq < 0.01, "equality cases");
  });

  criterion(8, [](Outcome& o) {
    const std::vector<double> alphas{1.2, 1.4, 1.6, 1.8};
    const std::vector<double> rs{0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8};
    std::vector<std::vector<double>> J(alphas.size(), std::vector<double>(rs.size()));
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const GriddedDensity f = realize(RandomLaw::sas(rs[k], std::pow(rs[k], -1 / rs[k])));
      for (std::size_t i = 0; i < alphas.size(); ++i) J[i][k] = jalpha_spectral(f, alphas[i]).value;
    }
    int bad = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i)
      for (std::size_t k = 0; k < rs.size(); ++k) {
        if (k > 0 && !(J[i][k] > J[i][k - 1])) ++bad;
        if (i > 0 && !(J[i][k] < J[i - 1][k])) ++bad;
      }
    o.detail << " violations=" << bad << " of " << alphas.size() * (rs.size() - 1) + (alphas.size() - 1) * rs.size();
    o.require(bad == 0, "monotonicity");
  });

  criterion(9, [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<double> sigmas;
    for (int i = 0; i <= 16; ++i) sigmas.push_back(0.5 * i);
    const double argmin = giie_mix_argmin(giie_mix(sigmas));
    const double secs = seconds_since(t0);
    o.detail << " argmin sigma=" << argmin << " target [3,5]";
    o.require(argmin >= 3.0 && argmin <= 5.0, "argmin");
    o.require(secs < 600.0, "runtime");
  });

  criterion(10, [](Outcome& o) {
    double worst_ratio = 1e300, worst_ml = 0.0;
    for (double a : {1.2, 1.5, 1.8}) {
      for (Estimator e : {Estimator::ml_identity, Estimator::sample_mean, Estimator::sample_median, Estimator::myriad}) {
        EstimatorConfig c;
        c.estimator = e;
        c.noise = StableParams::symmetric(a, 1.0);
        c.samples_per_trial = e == Estimator::ml_identity ? 1 : 9;
        c.trials = 10000;
        c.seed = 1;
        const EstimatorRun r = run_estimator(c);
        worst_ratio = std::min(worst_ratio, r.error_alpha_power / r.crb);
        if (e == Estimator::ml_identity) worst_ml = std::max(worst_ml, rel(r.error_alpha_power, std::pow(a, 1 / a)));
      }
    }
    o.detail << " min error/crb=" << worst_ratio << " ML relerr=" << worst_ml;
    o.require(worst_ratio >= 0.98, "bound");
    o.require(worst_ml <= 0.02, "ML power");
  });

  criterion(11, [](Outcome& o) {
    double worst_awgn = 0.0, worst_out = 0.0;
    for (double sigma : {0.5, 1.0, 3.0})
      for (double P : {0.1, 1.0, 10.0}) {
        ChannelSpec s;
        s.alpha = 2.0;
        s.gamma_N = sigma / std::sqrt(2.0);
        s.A = std::sqrt(sigma * sigma + P);
        worst_awgn = std::max(worst_awgn, rel(capacity_stable(s), 0.5 * std::log1p(P / (sigma * sigma))));
      }
    for (auto [a, g, A] : {std::tuple{1.5, 1.0, 3.0}, std::tuple{1.8, 0.5, 2.0}, std::tuple{1.2, 1.0, 5.0}}) {
      ChannelSpec s;
      s.alpha = a;
      s.gamma_N = g;
      s.A = A;
      worst_out = std::max(worst_out, rel(optimal_output_check(s).alpha_power, A));
    }
    o.detail << " AWGN relerr=" << worst_awgn << " output power relerr=" << worst_out;
    o.require(worst_awgn < 1e-12, "AWGN");
    o.require(worst_out <= 0.01, "output power");
  });

  return failures == 0 ? 0 : 1;
}

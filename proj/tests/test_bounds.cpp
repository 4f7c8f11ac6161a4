#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "stable_info/bounds.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/jalpha.hpp"
#include "stable_info/law.hpp"
#include "stable_info/specfun.hpp"
#include "stable_info/stable.hpp"

using namespace stable_info;
using doctest::Approx;

namespace {

// int_0^{gamma^a} J(X_eta) deta with J(X_eta) at its GFII ceiling, d = 1.
double sum_bound_oracle(double j, double alpha, double gamma) {
  const double q = 1.0 / (alpha - 1.0);
  const auto f = [&](double eta) { return std::pow(std::pow(j, -q) + std::pow(alpha * eta, q), -1.0 / q); };
  // split at the knee eta = 1 / (alpha J)
  const double top = std::pow(gamma, alpha), knee = std::min(top, 1.0 / (alpha * j));
  return oracle::interval(f, 0.0, knee) + oracle::interval(f, knee, top);
}

std::vector<RandomLaw> bound_laws() {
  return {RandomLaw::gaussian(1.0), RandomLaw::laplace(1.0), RandomLaw::sum(RandomLaw::uniform(1.0), RandomLaw::cauchy(0.3)),
          RandomLaw::sas(1.5, 1.0), RandomLaw::sum(RandomLaw::laplace(1.0), RandomLaw::sas(1.3, 0.4))};
}

}  // namespace

TEST_CASE("entropy power of order alpha") {
  for (double a : {1.2, 1.8, 2.0}) CHECK(entropy_power_alpha(reference_entropy(a), a).value == Approx(1.0).epsilon(1e-12));
  const double sigma = 1.7;
  const double hg = 0.5 * std::log(2 * oracle::pi * std::exp(1.0) * sigma * sigma);
  CHECK(entropy_power_alpha(hg, 2.0).value == Approx(sigma * sigma).epsilon(1e-6));
  CHECK(entropy_power_alpha(reference_entropy(1.8) + std::log(2.0), 1.8).value == Approx(std::pow(2.0, 1.8)).epsilon(1e-12));
  CHECK(entropy_power_alpha(3 * hg, 2.0, 3).value == Approx(sigma * sigma).epsilon(1e-6));
  CHECK_THROWS_AS(entropy_power_alpha(1.0, 1.5, 2), DomainError);
  CHECK_THROWS_AS(entropy_power_alpha(1.0, 0.9), DomainError);
}

TEST_CASE("GFII") {
  SUBCASE("gaussian pair at alpha 2 is an equality") {
    const BoundReport r = gfii_check(RandomLaw::gaussian(1.0), RandomLaw::gaussian(2.0), 2.0);
    CHECK(r.lhs == Approx(1.0 + 4.0).epsilon(0.01));
    CHECK(r.rhs == Approx(1.0 + 4.0).epsilon(0.01));
    CHECK(std::abs(r.slack) < 0.01 * r.lhs);
  }
  SUBCASE("stable pair against the closed form") {
    const double a = 1.5, g1 = 1.0, g2 = 0.7, q = 1.0 / (a - 1.0);
    const double lhs = std::pow(a * (std::pow(g1, a) + std::pow(g2, a)), q);
    const double rhs = std::pow(a * std::pow(g1, a), q) + std::pow(a * std::pow(g2, a), q);
    const BoundReport r = gfii_check(RandomLaw::sas(a, g1), RandomLaw::sas(a, g2), a);
    CHECK(r.slack > 0.0);
    CHECK(r.slack == Approx(lhs - rhs).epsilon(0.02));
  }
  SUBCASE("gaussian plus stable") {
    CHECK(gfii_check(RandomLaw::gaussian(1.0), RandomLaw::sas(1.8, 1.0), 1.8).holds(1e-3));
    CHECK(gfii_check(RandomLaw::laplace(1.0), RandomLaw::sas(1.5, 0.5), 1.5).holds(1e-3));
  }
}

TEST_CASE("entropy-of-sum bound formula") {
  for (double a : {1.2, 1.5, 1.8}) {
    for (double j : {0.05, 0.7, 3.0, 40.0}) {
      for (double g : {0.5, 1.0, 2.0}) {
        CAPTURE(a);
        CAPTURE(j);
        CAPTURE(g);
        CHECK(entropy_sum_upper(0.3, j, a, g) - 0.3 == Approx(sum_bound_oracle(j, a, g)).epsilon(1e-8));
      }
    }
  }
  for (double j : {0.1, 1.0, 5.0})
    CHECK(entropy_sum_upper(1.0, j, 2.0, 0.8) == Approx(1.0 + 0.5 * std::log1p(2 * 0.64 * j)).epsilon(1e-12));
  CHECK(entropy_sum_upper(1.0, 0.0, 1.5, 1.0) == 1.0);
  CHECK(std::isinf(entropy_sum_upper(1.0, std::numeric_limits<double>::infinity(), 1.5, 1.0)));

  double prev = entropy_sum_upper(0.0, 1e-3, 1.6, 1.0);
  for (double j = 2e-3; j < 1e3; j *= 1.3) {
    const double b = entropy_sum_upper(0.0, j, 1.6, 1.0);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("entropy-of-sum bound on laws") {
  const double sigma = 1.3;
  const BoundReport g = sum_bound_check(RandomLaw::gaussian(sigma), 2.0, sigma / std::sqrt(2.0));
  CHECK(g.rhs == Approx(0.5 * std::log(2 * oracle::pi * std::exp(1.0) * 2 * sigma * sigma)).epsilon(1e-6));
  CHECK(std::abs(g.slack) < 1e-6);
  CHECK(sum_bound_check(RandomLaw::laplace(1.0), 1.5, 1.0).holds(1e-3));
  for (const RandomLaw& law : bound_laws())
    for (double a : {1.2, 1.6, 2.0}) {
      CAPTURE(law.describe());
      CAPTURE(a);
      CHECK(sum_bound_check(law, a, 0.7).holds(1e-3));
    }
}

TEST_CASE("GIIE") {
  for (double s : {0.5, 1.0, 3.0}) CHECK(giie_product(RandomLaw::gaussian(s), 2.0).lhs == Approx(1.0).epsilon(0.005));
  const BoundReport st = giie_product(RandomLaw::sas(1.8, std::pow(1.8, -1 / 1.8)), 1.8);
  CHECK(st.lhs > 0.7333);
  CHECK(st.rhs == Approx(kappa_alpha(1.8)));

  for (const RandomLaw& law : bound_laws())
    for (double a : {1.2, 1.4, 1.6, 1.8, 2.0}) {
      CAPTURE(law.describe());
      CAPTURE(a);
      CHECK(giie_product(law, a).holds(1e-3));
    }

  const auto rows = giie_table({1.2, 1.4, 1.6, 1.8, 2.0}, {0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8});
  CHECK(rows.size() == 40);
  for (const GiieRow& r : rows) {
    CAPTURE(r.alpha);
    CAPTURE(r.r);
    CHECK(r.product - r.kappa >= -1e-3);
  }
}

TEST_CASE("GIIE product is scale invariant") {
  for (const RandomLaw& law : {RandomLaw::laplace(1.0), RandomLaw::sum(RandomLaw::uniform(1.0), RandomLaw::cauchy(0.3))}) {
    const double p = giie_product(law, 1.6).lhs;
    for (double c : {0.5, 4.0}) CHECK(oracle::rel(giie_product(RandomLaw::scaled(law, c), 1.6).lhs, p) < 0.01);
  }
}

TEST_CASE("power-Fisher consequence bound") {
  for (const RandomLaw& law : bound_laws())
    for (double a : {1.2, 1.5, 1.8, 2.0}) {
      CAPTURE(law.describe());
      CAPTURE(a);
      CHECK(power_fisher_bound(law, a).holds(1e-3));
    }
  const BoundReport g = power_fisher_bound(RandomLaw::gaussian(2.0), 2.0);
  CHECK(g.lhs == Approx(0.25).epsilon(0.005));
  CHECK(g.rhs == Approx(0.25).epsilon(1e-6));
}

TEST_CASE("gaussian-mixed stable sweep rows") {
  const auto rows = giie_mix({0.0, 2.0, 4.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].product == Approx(1.0).epsilon(1e-3));
  for (const auto& r : rows) CHECK(r.product > r.kappa);
  CHECK(giie_mix_argmin({{0.0, 1.0, 0.7}, {1.0, 0.9, 0.7}, {2.0, 0.95, 0.7}}) == 1.0);
}

TEST_CASE("scaling gain bound") {
  const double j = 0.8;
  CHECK(scaling_gain_bound(3.0, j, 1.5, 1.0) == Approx(std::log(3.0) + entropy_sum_upper(0.0, j, 1.5, 1.0 / 3.0)).epsilon(1e-14));
  CHECK(scaling_gain_bound(-3.0, j, 1.5, 1.0) == scaling_gain_bound(3.0, j, 1.5, 1.0));
  CHECK(scaling_gain_bound(1e6, j, 1.5, 1.0) - std::log(1e6) < 1e-6);
}

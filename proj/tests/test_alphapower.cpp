#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "stable_info/alphapower.hpp"
#include "stable_info/density.hpp"
#include "stable_info/law.hpp"
#include "stable_info/stable.hpp"

using namespace stable_info;
using doctest::Approx;

namespace {

std::vector<RandomLaw> sample_laws() {
  return {RandomLaw::gaussian(std::sqrt(2.0)), RandomLaw::uniform(1.0), RandomLaw::laplace(1.0), RandomLaw::cauchy(1.0),
          RandomLaw::sas(1.5, 1.0)};
}

}  // namespace

TEST_CASE("g(P) anchors") {
  for (double a : {0.8, 1.5, 2.0}) {
    CAPTURE(a);
    CHECK(g_of_P(RandomLaw::sas(a, reference_gamma(a)), a, 1.0) == Approx(reference_entropy(a)).epsilon(1e-6));
  }
  CHECK(std::abs(g_of_P(RandomLaw::gaussian(std::sqrt(2.0)), 1.2, 0.7869) - reference_entropy(1.2)) < 1e-2);
  const RandomLaw lap = RandomLaw::laplace(1.0);
  double prev = g_of_P(lap, 1.5, 0.1);
  for (double P : {0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    const double g = g_of_P(lap, 1.5, P);
    CHECK(g < prev);
    prev = g;
  }
}

TEST_CASE("alpha-power anchors") {
  CHECK(std::abs(alpha_power(RandomLaw::gaussian(std::sqrt(2.0)), 1.2).value - 0.7869) < 0.005);
  for (double a : {1.0, std::sqrt(3.0)}) {
    CAPTURE(a);
    CHECK(std::abs(alpha_power(RandomLaw::uniform(a), 0.8).value - 0.1753 * a) < 0.002 * a);
  }
  const AlphaPowerResult s = alpha_power(RandomLaw::sas(1.5, 2.0), 1.5);
  CHECK(s.value == Approx(std::pow(1.5, 1 / 1.5) * 2.0).epsilon(1e-12));
  CHECK(s.method == PowerMethod::closed_form_stable);
}

TEST_CASE("closed-form and degenerate paths") {
  const AlphaPowerResult g = alpha_power(RandomLaw::gaussian(1.0), 2.0);
  CHECK(g.value == Approx(1.0).epsilon(1e-9));
  CHECK(g.method == PowerMethod::closed_form_alpha2);
  CHECK(alpha_power(RandomLaw::uniform(1.0), 2.0).value == Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-9));
  CHECK(alpha_power(RandomLaw::laplace(1.0), 2.0).value == Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK(alpha_power(RandomLaw::cauchy(1.0), 2.0).infinite());
  CHECK(alpha_power(RandomLaw::sas(1.5, 1.0), 2.0).infinite());

  const AlphaPowerResult z = alpha_power(RandomLaw::empirical(std::vector<double>(5, 0.0)), 1.5);
  CHECK(z.value == 0.0);
  CHECK(z.method == PowerMethod::point_mass);

  const AlphaPowerResult n = alpha_power(RandomLaw::uniform(1.0), 1.3);
  CHECK(n.method == PowerMethod::numeric_root);
  CHECK(n.residual < 1e-6);
  CHECK(n.bracket_lo <= n.value);
  CHECK(n.value <= n.bracket_hi);
}

TEST_CASE("empirical path") {
  const AlphaPowerResult e = alpha_power(RandomLaw::empirical(sample_sas(1.5, 1.0, 100000, 17)), 1.5);
  CHECK(e.value == Approx(std::pow(1.5, 1 / 1.5)).epsilon(0.02));
  CHECK(e.std_error > 0.0);
  CHECK(e.std_error < 0.01 * e.value);
}

TEST_CASE("scale equivariance") {
  for (const RandomLaw& law : sample_laws()) {
    for (double a : {0.8, 1.2, 1.6, 2.0}) {
      const AlphaPowerResult p = alpha_power(law, a);
      for (double c : {0.5, 3.0}) {
        CAPTURE(law.describe());
        CAPTURE(a);
        CAPTURE(c);
        const AlphaPowerResult q = alpha_power(RandomLaw::scaled(law, c), a);
        if (p.infinite()) {
          CHECK(q.infinite());
        } else {
          CHECK(oracle::rel(q.value, c * p.value) < 1e-4);
        }
      }
    }
  }
}

TEST_CASE("positivity and max-entropy") {
  for (const RandomLaw& law : sample_laws()) {
    const double h = entropy(law);
    for (double a : {0.8, 1.2, 1.6, 2.0}) {
      CAPTURE(law.describe());
      CAPTURE(a);
      const AlphaPowerResult p = alpha_power(law, a);
      CHECK(p.value > 0.0);
      if (!p.infinite()) CHECK(h <= reference_entropy(a) + std::log(p.value) + 1e-3);
    }
  }
}

TEST_CASE("monotone dominance") {
  const RandomLaw x = RandomLaw::uniform(1.0), y = RandomLaw::sas(1.5, 1.0);
  const double py = alpha_power(y, 1.5).value;
  CHECK(alpha_power(RandomLaw::sum(x, y), 1.5).value >= py - 1e-4);

  double prev = py;
  for (double c : {0.5, 1.0, 2.0}) {
    const double p = alpha_power(RandomLaw::sum(RandomLaw::scaled(x, c), y), 1.5).value;
    CAPTURE(c);
    CHECK(p >= prev - 1e-4);
    prev = p;
  }
}

TEST_CASE("g(P) limits") {
  for (const RandomLaw& law : {RandomLaw::laplace(1.0), RandomLaw::uniform(1.0), RandomLaw::cauchy(1.0)}) {
    for (double a : {1.2, 1.8}) {
      CAPTURE(law.describe());
      CAPTURE(a);
      const double P = alpha_power(law, a).value;
      CHECK(g_of_P(law, a, 1e-3 * P) > reference_entropy(a) + 5.0);
      CHECK(g_of_P(law, a, 1e3 * P) < reference_entropy(a));
    }
  }
}

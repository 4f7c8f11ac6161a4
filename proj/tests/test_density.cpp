#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "stable_info/density.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/law.hpp"
#include "stable_info/stable.hpp"

using namespace stable_info;
using doctest::Approx;

namespace {

template <class F>
double sup_diff(const GriddedDensity& f, F&& want, double xmax, double step = 0.011) {
  double e = 0.0;
  for (double x = -xmax; x <= xmax; x += step) e = std::max(e, std::abs(density_at(f, x) - want(x)));
  return e;
}

double sup_diff(const GriddedDensity& f, const GriddedDensity& g, double xmax) {
  return sup_diff(f, [&](double x) { return density_at(g, x); }, xmax);
}

std::vector<RandomLaw> test_laws() {
  return {RandomLaw::gaussian(1.0), RandomLaw::uniform(1.0), RandomLaw::laplace(1.0), RandomLaw::cauchy(1.0),
          RandomLaw::sas(1.5, 1.0)};
}

}  // namespace

TEST_CASE("realize analytic laws") {
  const GriddedDensity u = realize(RandomLaw::uniform(1.0));
  for (double x : {-0.9, -0.3, 0.0, 0.55, 0.95}) CHECK(density_at(u, x) == Approx(0.5).epsilon(1e-9));
  CHECK(density_at(u, 1.2) == 0.0);

  const GriddedDensity gg = realize(RandomLaw::sum(RandomLaw::gaussian(1), RandomLaw::gaussian(1)));
  CHECK(sup_diff(gg, [](double x) { return oracle::gauss_pdf(x, std::sqrt(2.0)); }, 10.0) < 1e-6);

  const GriddedDensity cc = realize(RandomLaw::sum(RandomLaw::cauchy(1), RandomLaw::cauchy(2)));
  CHECK(sup_diff(cc, [](double x) { return oracle::cauchy_pdf(x, 3.0); }, 100.0, 0.07) < 1e-5);

  // compare on the nodes; interpolation across the cusp at 0 is not the point here
  const GriddedDensity l = realize(RandomLaw::laplace(2.0));
  double el = 0.0;
  for (std::size_t j = 0; j < l.size(); ++j)
    el = std::max(el, std::abs(l.values[j] - std::exp(-std::abs(l.x(j)) / 2.0) / 4.0));
  CHECK(el < 1e-6);

  const GriddedDensity sh = realize(RandomLaw::shifted(RandomLaw::gaussian(1), 3.0));
  CHECK(density_at(sh, 3.0) == Approx(oracle::gauss_pdf(0.0, 1.0)).epsilon(1e-8));
}

TEST_CASE("convolve") {
  SUBCASE("narrow spike is the identity") {
    const GriddedDensity g = realize(RandomLaw::sum(RandomLaw::laplace(1), RandomLaw::gaussian(0.5)), GridSpec{1 << 18, 5e-4, 0.0});
    const GriddedDensity spike = realize(RandomLaw::gaussian(2e-3), GridSpec{4096, g.h, 0.0});
    CHECK(sup_diff(convolve(spike, g), g, 15.0) < 1e-4);
  }
  SUBCASE("stable pair") {
    const GriddedDensity s = convolve(realize(RandomLaw::sas(1.5, 1)), realize(RandomLaw::sas(1.5, 1)));
    CHECK(sup_diff(s, [](double x) { return oracle::sas_pdf(1.5, std::pow(2.0, 1 / 1.5), x); }, 40.0, 0.13) < 1e-5);
  }
  SUBCASE("gaussian pair") {
    const GriddedDensity s = convolve(realize(RandomLaw::gaussian(1)), realize(RandomLaw::gaussian(2)));
    CHECK(sup_diff(s, [](double x) { return oracle::gauss_pdf(x, std::sqrt(5.0)); }, 15.0) < 1e-8);
  }
  SUBCASE("commutative") {
    const GriddedDensity a = realize(RandomLaw::cauchy(0.7));
    const GriddedDensity b = realize(RandomLaw::uniform(1.0), GridSpec{1 << 14, a.h, 0.0});
    const GriddedDensity ab = convolve(a, b), ba = convolve(b, a);
    REQUIRE(ab.size() == ba.size());
    double e = 0.0;
    for (std::size_t j = 0; j < ab.size(); ++j) e = std::max(e, std::abs(ab.values[j] - ba.values[j]));
    CHECK(e < 1e-10);
  }
}

TEST_CASE("entropy closed forms") {
  CHECK(entropy(RandomLaw::uniform(0.5)) == Approx(0.0).scale(1.0).epsilon(1e-9));
  CHECK(entropy(RandomLaw::uniform(3.0)) == Approx(std::log(6.0)).epsilon(1e-9));
  for (double s : {0.3, 1.0, 4.0})
    CHECK(std::abs(entropy(RandomLaw::gaussian(s)) - 0.5 * std::log(2 * oracle::pi * std::exp(1.0) * s * s)) < 1e-6);
  for (double g : {0.5, 1.0, 3.0}) CHECK(std::abs(entropy(RandomLaw::cauchy(g)) - std::log(4 * oracle::pi * g)) < 1e-5);
  CHECK(std::abs(entropy(RandomLaw::laplace(1.5)) - (1.0 + std::log(3.0))) < 1e-6);
}

TEST_CASE("log moment") {
  CHECK(log_moment(RandomLaw::empirical(std::vector<double>(10, 0.0))) == 0.0);
  const double e = std::exp(1.0);
  CHECK(log_moment(RandomLaw::uniform(e - 1.0)) == Approx(1.0 / (e - 1.0)).epsilon(1e-7));
  const double cauchy = oracle::half_line([](double x) { return 2.0 / oracle::pi * std::log1p(x) / (1.0 + x * x); });
  CHECK(log_moment(RandomLaw::cauchy(1.0)) == Approx(cauchy).epsilon(1e-5));
  const std::vector<double> v{1.0, -3.0, 0.5};
  CHECK(log_moment(RandomLaw::empirical(v)) == Approx((std::log(2.0) + std::log(4.0) + std::log(1.5)) / 3.0));
}

TEST_CASE("entropy invariants") {
  for (const RandomLaw& law : test_laws()) {
    CAPTURE(law.describe());
    const double h = entropy(law);
    for (double c : {2.0, 10.0}) CHECK(std::abs(entropy(RandomLaw::scaled(law, c)) - h - std::log(c)) < 1e-4);
    CHECK(std::abs(entropy(RandomLaw::shifted(law, 2.5)) - h) < 1e-6);
  }
}

TEST_CASE("entropy grows under independent addition") {
  const auto laws = test_laws();
  for (std::size_t i = 0; i < laws.size(); ++i) {
    for (std::size_t j = i; j < laws.size(); ++j) {
      CAPTURE(laws[i].describe());
      CAPTURE(laws[j].describe());
      const double hs = entropy(RandomLaw::sum(laws[i], laws[j]));
      CHECK(hs >= std::max(entropy(laws[i]), entropy(laws[j])) - 1e-4);
    }
  }
}

TEST_CASE("kde entropy of gaussian samples") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(1000000);
  for (double& x : v) x = n(rng);
  const GriddedDensity f = kde(v);
  CHECK(f.total_mass() == Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(entropy(f) - 0.5 * std::log(2 * oracle::pi * std::exp(1.0))) < 0.01);
}

TEST_CASE("grid checks") {
  CHECK_THROWS_AS(realize(RandomLaw::sas(1.5, 1.0), GridSpec{4096, 1.0, 0.0}), ConfigError);
  CHECK_THROWS_AS(realize(RandomLaw::gaussian(1.0), GridSpec{4096, 1e-4, 0.0}), ConfigError);
  CHECK(tail_class(RandomLaw::sum(RandomLaw::gaussian(1), RandomLaw::cauchy(1))) == TailClass::power);
  CHECK(tail_class(RandomLaw::sum(RandomLaw::gaussian(1), RandomLaw::laplace(1))) == TailClass::exponential);
  CHECK(tail_class(RandomLaw::uniform(1)) == TailClass::compact);
}

TEST_CASE("csv round trip") {
  const GriddedDensity f = realize(RandomLaw::gaussian(1.0), GridSpec{4096, 0.01, 0.0});
  std::stringstream ss;
  write_csv(ss, f);
  const GriddedDensity g = read_density_csv(ss);
  REQUIRE(g.size() == f.size());
  CHECK(g.h == Approx(f.h).epsilon(1e-12));
  CHECK(g.values[2048] == Approx(f.values[2048]).epsilon(1e-12));

  std::stringstream s2("value\n1.5\n-2\n3e-1\n");
  CHECK(read_samples(s2) == std::vector<double>{1.5, -2.0, 0.3});
  std::stringstream s3;
  write_samples(s3, {0.25, -1.0});
  CHECK(read_samples(s3) == std::vector<double>{0.25, -1.0});
}

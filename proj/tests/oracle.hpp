#pragma once

// Reference values computed without the library: direct quadrature of the
// characteristic function and textbook closed forms.

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <limits>

namespace oracle {

inline constexpr double pi = boost::math::constants::pi<double>();

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

inline double gauss_pdf(double x, double sigma) {
  return std::exp(-0.5 * x * x / (sigma * sigma)) / (sigma * std::sqrt(2.0 * pi));
}

inline double cauchy_pdf(double x, double g) { return g / (pi * (g * g + x * x)); }

// SaS density by inverting exp(-(g w)^a) with a cosine transform.
inline double sas_pdf(double alpha, double gamma, double x) {
  x = std::abs(x) / gamma;
  const auto phi = [alpha](double w) { return std::exp(-std::pow(w, alpha)); };
  if (x < 1e-12) {
    boost::math::quadrature::exp_sinh<double> q;
    return q.integrate(phi) / (pi * gamma);
  }
  static thread_local boost::math::quadrature::ooura_fourier_cos<double> cosine(1e-12, 12);
  return cosine.integrate(phi, x).first / (pi * gamma);
}

// P(X <= x) for S(alpha, 1) via the sine transform.
inline double sas_cdf(double alpha, double x) {
  if (x == 0.0) return 0.5;
  const auto f = [alpha](double w) { return std::exp(-std::pow(w, alpha)) / w; };
  static thread_local boost::math::quadrature::ooura_fourier_sin<double> sine(1e-12, 12);
  return 0.5 + std::copysign(sine.integrate(f, std::abs(x)).first, x) / pi;
}

// Gauss hypergeometric function from Euler's integral, valid for c > b > 0, z < 1.
inline double hyp2f1_euler(double a, double b, double c, double z) {
  boost::math::quadrature::tanh_sinh<double> q;
  const double s = q.integrate(
      [&](double t, double tc) {
        // tc > 0 is the exact distance 1 - t on the right half
        const double one_minus_t = tc > 0.0 ? tc : 1.0 - t;
        return std::pow(t, b - 1.0) * std::pow(one_minus_t, c - b - 1.0) * std::pow(1.0 - z * t, -a);
      },
      0.0, 1.0);
  return std::tgamma(c) / (std::tgamma(b) * std::tgamma(c - b)) * s;
}

inline double kappa(double alpha) {
  return std::exp((alpha - 1.0) * (boost::math::digamma(alpha) + boost::math::constants::euler<double>()) - 1.0);
}

// Integral of f over [0, inf).
template <class F>
double half_line(F&& f) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate(f);
}

template <class F>
double interval(F&& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12);
}

}  // namespace oracle

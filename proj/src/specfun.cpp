#include "stable_info/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "stable_info/errors.hpp"

namespace stable_info {

namespace {

constexpr double kSeriesTol = 1e-14;
constexpr int kSeriesCap = 1'000'000;

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::nearbyint(x) == x;
}

// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

// Connection formula about 1 - z for 0 < z < 1 (A&S 15.3.6 / 15.3.10).
// Returns NaN when c - a - b is a nonzero integer (not needed here).
// y = 1 - z, supplied by the caller so it keeps full precision.
double gauss_2f1_near_one(double a, double b, double c, double y) {
  const double s = c - a - b;
  if (std::abs(s) < 1e-12) {
    // c = a + b: logarithmic case.
    const double pref = std::tgamma(c) * rgamma(a) * rgamma(b);
    double psi_a = digamma(a);
    double psi_b = digamma(b);
    double psi_1 = -euler_gamma;
    double coef = 1.0;
    double sum = 0.0;
    const double ly = std::log(y);
    for (int n = 0; n < kSeriesCap; ++n) {
      const double term = coef * (2.0 * psi_1 - psi_a - psi_b - ly);
      sum += term;
      if (n > 2 && std::abs(term) < kSeriesTol * std::abs(sum)) break;
      coef *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0)) * y;
      psi_a += 1.0 / (a + n);
      psi_b += 1.0 / (b + n);
      psi_1 += 1.0 / (n + 1.0);
    }
    return pref * sum;
  }
  if (std::abs(s - std::nearbyint(s)) < 1e-12) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double t1 = std::tgamma(c) * std::tgamma(s) * rgamma(c - a) * rgamma(c - b);
  const double t2 = std::tgamma(c) * std::tgamma(-s) * rgamma(a) * rgamma(b);
  double out = 0.0;
  if (t1 != 0.0) out += t1 * gauss_2f1_series(a, b, 1.0 - s, y);
  if (t2 != 0.0) out += t2 * std::pow(y, s) * gauss_2f1_series(c - a, c - b, 1.0 + s, y);
  return out;
}

double gauss_2f1_unit(double a, double b, double c, double z, double y) {
  // 0 <= z < 1, y = 1 - z
  if (z > 0.9) {
    const double v = gauss_2f1_near_one(a, b, c, y);
    if (!std::isnan(v)) return v;
  }
  return gauss_2f1_series(a, b, c, z);
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  return std::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: argument must be positive");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli-number asymptotic tail.
  const double tail =
      inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 / 132))));
  return acc + std::log(x) - 0.5 * inv - tail;
}

double gauss_2f1_series(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
  if (!(std::abs(z) < 1.0)) throw DomainError("gauss_2f1_series: requires |z| < 1");
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kSeriesCap; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::abs(term) < kSeriesTol * std::abs(sum)) return sum;
  }
  throw NumericError("gauss_2f1: series did not converge");
}

double gauss_2f1(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
  if (!(z < 1.0)) throw DomainError("gauss_2f1: requires z < 1");
  if (z >= 0.0) return gauss_2f1_unit(a, b, c, z, 1.0 - z);
  const double w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * gauss_2f1_unit(a, c - b, c, w, 1.0 / (1.0 - z));
}

double kappa_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError("kappa_alpha: alpha must lie in (1, 2]");
  return std::exp((alpha - 1.0) * (digamma(alpha) + euler_gamma) - 1.0);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) throw DomainError("hurwitz_zeta: requires s > 1, a > 0");
  // Euler-Maclaurin with M shifted terms.
  constexpr int M = 10;
  // B_{2k} / (2k)!
  static constexpr double kB[] = {1.0 / 12,          -1.0 / 720,         1.0 / 30240,
                                  -1.0 / 1209600,    1.0 / 47900160,     -691.0 / 1307674368000.0,
                                  1.0 / 74724249600.0};
  double sum = 0.0;
  for (int n = 0; n < M; ++n) sum += std::pow(a + n, -s);
  const double x = a + M;
  const double xs = std::pow(x, -s);
  sum += x * xs / (s - 1.0) + 0.5 * xs;
  // (s)_{2k-1} x^{-s-2k+1}
  double rising = s;
  double xp = xs / x;
  const double inv_x2 = 1.0 / (x * x);
  for (int k = 0; k < 7; ++k) {
    sum += kB[k] * rising * xp;
    rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
    xp *= inv_x2;
  }
  return sum;
}

}  // namespace stable_info

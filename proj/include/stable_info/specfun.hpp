#pragma once

namespace stable_info {

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Gamma function for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Digamma psi(x) for x > 0 (upward recurrence + asymptotic series).
double digamma(double x);

/// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1.
///
/// Negative arguments are first mapped into [0, 1) with the Pfaff
/// transformation 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)); the
/// series is summed until a term drops below 1e-14 of the partial sum.
/// Arguments very close to 1 after the mapping switch to the connection
/// formula about 1 - z.
double gauss_2f1(double a, double b, double c, double z);

/// Plain power series of 2F1, valid for |z| < 1. Exposed so the two
/// evaluation routes can be checked against each other.
double gauss_2f1_series(double a, double b, double c, double z);

/// kappa_alpha = exp((alpha-1)(psi(alpha) + gamma_e) - 1), alpha in (1, 2].
double kappa_alpha(double alpha);

/// Hurwitz zeta sum_{n>=0} (n + a)^{-s} for s > 1, a > 0.
double hurwitz_zeta(double s, double a);

}  // namespace stable_info

#pragma once

#include <cmath>
#include <utility>

#include "lemnis/numerics.hpp"

namespace lemnis {

struct GaussParams {
  double alpha = 0.0, beta = 0.0, gamma = 1.0;

  GaussParams() = default;
  GaussParams(double a, double b, double c) : alpha(a), beta(b), gamma(c) {
    if (c <= 0.0 && c == std::floor(c)) throw domain_error("GaussParams: gamma is a nonpositive integer");
  }
};

enum class SchwarzVariant { quartic, sextic };

// (alpha, beta, gamma) of the two Schwarz maps
inline GaussParams schwarz_params(SchwarzVariant v) {
  return v == SchwarzVariant::quartic ? GaussParams(0.25, 0.0, 0.5) : GaussParams(1.0 / 3.0, 0.0, 0.5);
}

inline double pochhammer(double a, int n) {
  if (n < 0) throw domain_error("pochhammer: negative n");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

namespace detail {

inline constexpr double series_tol = 1e-17;
inline constexpr int series_cap = 100000;
inline constexpr double connection_margin = 0.05;
inline constexpr double series_radius = 0.8;  // plain series below this modulus

// 1/Gamma(x) for any real x, zero at the poles
inline double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  return 1.0 / lanczos_gamma(x);
}

inline bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

// plain Maclaurin series with compensated summation
inline Complex series_2f1(double a, double b, double c, Complex z) {
  const double az = std::abs(z);
  Complex sum{1.0, 0.0}, comp{0.0, 0.0}, term{1.0, 0.0};
  for (int n = 0; n < series_cap; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    Complex y = term - comp;
    Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    const double at = std::abs(term);
    if (at == 0.0) return sum;
    const double scale = std::max(1.0, std::abs(sum));
    if (az < 1.0) {
      if (at < scale * series_tol / 16.0 && at * az / (1.0 - az) < scale * series_tol) return sum;
    } else if (at < scale * series_tol) {
      return sum;
    }
  }
  throw iteration_limit_error("gauss_2f1: series did not converge within the term cap");
}

// F(a,b;c;z) via the 1-z connection; requires c-a-b not an integer
inline Complex connection_2f1(double a, double b, double c, Complex z) {
  const double s = c - a - b;
  const Complex w = 1.0 - z;
  const double g = lanczos_gamma(c);
  const double A = g * lanczos_gamma(s) * rgamma(c - a) * rgamma(c - b);
  const double B = g * lanczos_gamma(-s) * rgamma(a) * rgamma(b);
  Complex out = A * series_2f1(a, b, 1.0 - s, w);
  if (B != 0.0) out += B * std::pow(w, s) * series_2f1(c - a, c - b, s + 1.0, w);
  return out;
}

}  // namespace detail

inline double gauss_kummer_value(const GaussParams& p) {
  const double s = p.gamma - p.alpha - p.beta;
  if (!(s > 0.0)) throw domain_error("gauss_kummer_value: needs gamma - alpha - beta > 0");
  // F = 1 whenever alpha or beta vanishes, even though Gamma(gamma - 0) appears below
  if (p.alpha == 0.0 || p.beta == 0.0) return 1.0;
  return gamma_real(p.gamma) * gamma_real(s) / (gamma_real(p.gamma - p.alpha) * gamma_real(p.gamma - p.beta));
}

inline Complex gauss_2f1(const GaussParams& p, Complex z) {
  if (!is_finite(z)) throw domain_error("gauss_2f1: non-finite argument");
  const double a = p.alpha, b = p.beta, c = p.gamma;
  if (z == Complex{0.0, 0.0} || a == 0.0 || b == 0.0) return {1.0, 0.0};
  const double az = std::abs(z);
  if (z == Complex{1.0, 0.0}) {
    if (c - a - b > 0.0) return gauss_kummer_value(p);
    throw domain_error("gauss_2f1: divergent at z = 1");
  }
  if (az > 1.0) throw domain_error("gauss_2f1: |z| > 1");
  if (az == 1.0) {
    if (!(c - a - b > 0.0)) throw domain_error("gauss_2f1: divergent on |z| = 1");
    // the series converges only algebraically here; move inside the disc
    if (z.real() < 0.5) return std::pow(1.0 - z, -a) * gauss_2f1(GaussParams(a, c - b, c), z / (z - 1.0));
    const double gap = c - a - b;
    if (std::abs(1.0 - z) < 1.0 && std::abs(gap - std::round(gap)) > detail::connection_margin)
      return detail::connection_2f1(a, b, c, z);
    return detail::series_2f1(a, b, c, z);
  }
  // the two gamma terms of the connection formula cancel as c - a - b nears an integer
  const double gap = c - a - b;
  if (az > detail::series_radius && std::abs(1.0 - z) < 0.5 && std::abs(gap - std::round(gap)) > detail::connection_margin)
    return detail::connection_2f1(a, b, c, z);
  return detail::series_2f1(a, b, c, z);
}

namespace detail {

// Pfaff continuation for the left half-plane (identity checks only)
inline Complex gauss_2f1_pfaff(const GaussParams& p, Complex z) {
  if (z.real() >= 0.0) return gauss_2f1(p, z);
  return std::pow(1.0 - z, -p.alpha) * gauss_2f1(GaussParams(p.alpha, p.gamma - p.beta, p.gamma), z / (z - 1.0));
}

}  // namespace detail

struct EulerPair {
  Complex f1, f2;
};

inline EulerPair euler_f1_f2(SchwarzVariant v, Complex x) {
  const GaussParams g = schwarz_params(v);
  const Complex w = 1.0 - x;
  if (!(std::abs(w) < 1.0)) throw domain_error("euler_f1_f2: needs |1 - x| < 1");
  const double d = g.gamma - g.alpha;
  EulerPair out;
  out.f2 = beta(d, g.alpha);
  if (w == Complex{0.0, 0.0}) return out;
  out.f1 = std::exp(pi * I * d) / d * std::pow(w, d) * gauss_2f1(GaussParams(d, g.gamma, d + 1.0), w);
  return out;
}

inline Complex schwarz_map(SchwarzVariant v, Complex x) {
  const Complex w = 1.0 - x;
  if (!(std::abs(w) < 1.0)) throw domain_error("schwarz_map: needs |1 - x| < 1");
  if (w == Complex{0.0, 0.0}) return {0.0, 0.0};
  if (v == SchwarzVariant::quartic) {
    const Complex k = 2.0 * std::sqrt(2.0) * I / beta(0.25, 0.25);
    return k * std::pow(w, 0.25) * gauss_2f1(GaussParams(0.25, 0.5, 1.25), w);
  }
  const Complex k = 2.0 * std::sqrt(3.0) * ZETA / beta(1.0 / 3.0, 1.0 / 6.0);
  return k * std::pow(w, 1.0 / 6.0) * gauss_2f1(GaussParams(1.0 / 6.0, 0.5, 7.0 / 6.0), w);
}

// (1/sqrt x) F(1/4,1/2,5/4; 1-(2-x)^2/x^2) against F(1/4,1/2,5/4; 1-x)
inline double eq_hgf_residual(double x) {
  const GaussParams p(0.25, 0.5, 1.25);
  const double r = (2.0 - x) / x;
  const Complex lhs = detail::gauss_2f1_pfaff(p, 1.0 - r * r) / std::sqrt(x);
  const Complex rhs = gauss_2f1(p, 1.0 - x);
  return scaled_diff(lhs, rhs);
}

// F(1/6,1/2,7/6; 1-x) against (1/sqrt(4x-3)) F(1/6,1/2,7/6; 1-x(9-8x)^2/(4x-3)^3)
inline double one_plus_z_hgf_residual(double x) {
  const GaussParams p(1.0 / 6.0, 0.5, 7.0 / 6.0);
  const double d = 4.0 * x - 3.0;
  const double y = x * (9.0 - 8.0 * x) * (9.0 - 8.0 * x) / (d * d * d);
  const Complex lhs = gauss_2f1(p, 1.0 - x);
  const Complex rhs = detail::gauss_2f1_pfaff(p, 1.0 - y) / std::sqrt(d);
  return scaled_diff(lhs, rhs);
}

}  // namespace lemnis

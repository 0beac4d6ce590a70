#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace lemnis {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};
// zeta = exp(pi i/3); omega = zeta^2
inline const Complex ZETA{0.5, std::numbers::sqrt3 / 2.0};
inline const Complex OMEGA{-0.5, std::numbers::sqrt3 / 2.0};

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class iteration_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;

  Tolerance() = default;
  Tolerance(double a, double r) : abs_tol(a), rel_tol(r) {
    if (!(a >= 0.0 && a < 1.0) || !(r >= 0.0 && r < 1.0))
      throw domain_error("tolerance components must lie in [0, 1)");
  }

  bool close(double x, double y) const {
    return std::abs(x - y) <= abs_tol + rel_tol * std::max(std::abs(x), std::abs(y));
  }
  bool close(Complex x, Complex y) const {
    return std::abs(x - y) <= abs_tol + rel_tol * std::max(std::abs(x), std::abs(y));
  }
};

// LEMNIS_TOL, when set to a parseable value in (0, 1), replaces both components.
inline Tolerance default_tolerance() {
  if (const char* env = std::getenv("LEMNIS_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && v < 1.0) return Tolerance(v, v);
  }
  return Tolerance{};
}

struct Residual {
  std::string name;
  double value = 0.0;
};

// integer power by repeated squaring (std::pow on complex goes through log)
inline Complex ipow(Complex x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  Complex r{1.0, 0.0};
  while (n) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace detail {

// Lanczos g=7, n=9 (Godfrey coefficients)
inline double lanczos_gamma(double x) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) return pi / (std::sin(pi * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double acc = c[0];
  for (int k = 1; k < 9; ++k) acc += c[k] / (x + k);
  const double t = x + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace detail

inline double gamma_real(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw domain_error("gamma_real: argument must be positive");
  if (x == std::floor(x) && x <= 20.0) {
    double f = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
    return f;
  }
  return detail::lanczos_gamma(x);
}

inline double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw domain_error("beta: arguments must be positive");
  return gamma_real(x) * gamma_real(y) / gamma_real(x + y);
}

// e(x) = exp(2 pi i x); the argument is reduced mod 1 first so rational inputs stay accurate
inline Complex e_of(double x) {
  double r = x - std::round(x);
  if (r == 0.0) return {1.0, 0.0};
  if (r == 0.5 || r == -0.5) return {-1.0, 0.0};
  if (r == 0.25) return {0.0, 1.0};
  if (r == -0.25) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * pi * r);
}

inline Complex e_of(Complex x) { return std::exp(2.0 * pi * I * x); }

// k-th root with argument in (center - pi/k, center + pi/k]
inline Complex branch_root(Complex w, int k, double arg_center) {
  if (k < 1) throw domain_error("branch_root: k must be positive");
  if (w == Complex{0.0, 0.0}) return {0.0, 0.0};
  const double r = std::pow(std::abs(w), 1.0 / k);
  const double phi = std::arg(w) / k;
  const double step = 2.0 * pi / k;
  const double hi = arg_center + pi / k;
  double j = std::floor((hi - phi) / step);
  double ang = phi + j * step;
  // guard the half-open window against rounding
  if (ang <= hi - step) ang += step;
  if (ang > hi) ang -= step;
  return std::polar(r, ang);
}

// true when the root's argument sits within eps of the window edge
inline bool on_branch_boundary(Complex w, int k, double arg_center, double eps = 1e-12) {
  if (w == Complex{0.0, 0.0}) return false;
  const double ang = std::arg(branch_root(w, k, arg_center));
  double d = std::remainder(ang - (arg_center + pi / k), 2.0 * pi);
  return std::abs(d) < eps;
}

// |a-b| / max(|a|,|b|,1)
inline double scaled_diff(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

inline double max_residual(const std::vector<Residual>& rs) {
  double m = 0.0;
  for (const auto& r : rs) m = std::max(m, r.value);
  return m;
}

}  // namespace lemnis

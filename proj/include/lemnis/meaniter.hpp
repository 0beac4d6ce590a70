#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "lemnis/hypergeometric.hpp"
#include "lemnis/numerics.hpp"

namespace lemnis {

struct MeanPair {
  double a = 1.0, b = 1.0;

  MeanPair() = default;
  MeanPair(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b)))
      throw domain_error("MeanPair: a and b must be positive and finite");
  }
};

struct IterationTrace {
  std::vector<MeanPair> pairs;
  bool converged = false;
  double limit = 0.0;
  int iterations = 0;
};

inline MeanPair step_quartic(const MeanPair& p) {
  const double s = p.a + p.b;
  return {s / 2.0, std::sqrt(p.a * s / 2.0)};
}

inline std::pair<Complex, Complex> eta_pair(const MeanPair& p) {
  const Complex r = std::sqrt(Complex(p.b * p.b - p.a * p.a, 0.0));
  return {p.b + r, p.b - r};
}

namespace detail {
inline constexpr double realness_tol = 1e-12;

inline double checked_real(Complex v, const char* what) {
  if (std::abs(v.imag()) > realness_tol * std::max(1.0, std::abs(v.real())))
    throw domain_error(std::string("step_sextic: ") + what + " is not real");
  return v.real();
}
}  // namespace detail

// Cube roots in the window (-pi/3, pi/3] around 0: the eta_i have |arg| < pi/2,
// so their roots fall in (-pi/6, pi/6) and the product of the roots is a^{2/3}.
inline MeanPair step_sextic(const MeanPair& p) {
  const auto [e1, e2] = eta_pair(p);
  const Complex r1 = branch_root(e1, 3, 0.0), r2 = branch_root(e2, 3, 0.0);
  const double a23 = std::cbrt(p.a * p.a);
  const Complex s = r1 * r1 + r1 * r2 + r2 * r2;
  const double m1 = a23 * std::sqrt(detail::checked_real(s, "m1 radicand")) / std::sqrt(3.0);
  const double m2 = a23 * detail::checked_real(r1 + r2, "m2") / 2.0;
  return {m1, m2};
}

inline MeanPair step(const MeanPair& p, SchwarzVariant v) {
  return v == SchwarzVariant::quartic ? step_quartic(p) : step_sextic(p);
}

namespace detail {
inline constexpr double precondition_radius = 0.8;
inline constexpr int precondition_cap = 64;

// iterate (the limit is unchanged along the orbit) until 1 - b^2/a^2 is inside the disk
inline MeanPair precondition(MeanPair p, SchwarzVariant v) {
  for (int k = 0; std::abs(1.0 - p.b * p.b / (p.a * p.a)) >= precondition_radius; ++k) {
    if (k >= precondition_cap) throw iteration_limit_error("mean limit: preconditioning did not settle");
    p = step(p, v);
  }
  return p;
}
}  // namespace detail

inline double limit_quartic_raw(const MeanPair& p) {
  const Complex f = gauss_2f1(GaussParams(0.25, 0.5, 1.25), 1.0 - p.b * p.b / (p.a * p.a));
  return p.a / (f * f).real();
}

inline double limit_sextic_raw(const MeanPair& p) {
  const Complex f = gauss_2f1(GaussParams(1.0 / 6.0, 0.5, 7.0 / 6.0), 1.0 - p.b * p.b / (p.a * p.a));
  return p.a / f.real();
}

inline double limit_quartic(const MeanPair& p) {
  return limit_quartic_raw(detail::precondition(p, SchwarzVariant::quartic));
}

inline double limit_sextic(const MeanPair& p) {
  return limit_sextic_raw(detail::precondition(p, SchwarzVariant::sextic));
}

inline double limit_formula(const MeanPair& p, SchwarzVariant v) {
  return v == SchwarzVariant::quartic ? limit_quartic(p) : limit_sextic(p);
}

inline IterationTrace iterate_until_converged(MeanPair p, SchwarzVariant v, double tol, int max_iter) {
  if (!(tol > 1e-15 && tol < 1e-3)) throw domain_error("iterate_until_converged: tol must lie in (1e-15, 1e-3)");
  if (max_iter < 0 || max_iter > 200) throw domain_error("iterate_until_converged: max_iter must lie in [0, 200]");
  IterationTrace tr;
  tr.pairs.push_back(p);
  for (;;) {
    if (std::abs(p.a - p.b) < tol * p.a) {
      tr.converged = true;
      break;
    }
    if (tr.iterations >= max_iter) break;
    p = step(p, v);
    tr.pairs.push_back(p);
    ++tr.iterations;
  }
  tr.limit = (p.a + p.b) / 2.0;
  return tr;
}

inline double cubic_lhs(double x) {
  const double d = 9.0 - 8.0 * x, q = 4.0 * x - 3.0;
  return x * d * d / (q * q * q);
}

inline double cubic_preimage_x0(const MeanPair& p) {
  if (!(p.a < p.b)) throw domain_error("cubic_preimage_x0: needs a < b");
  const double r = std::sqrt(p.b * p.b - p.a * p.a);
  return 3.0 / 8.0 * (std::cbrt(p.a * p.a) / r * (std::cbrt(p.b + r) - std::cbrt(p.b - r)) + 2.0);
}

// (3/4)(e1^{1/3}+e2^{1/3})^2 / (e1^{2/3}+e1^{1/3}e2^{1/3}+e2^{2/3})
inline double cubic_preimage_x0_eta(const MeanPair& p) {
  const auto [e1, e2] = eta_pair(p);
  const Complex r1 = branch_root(e1, 3, 0.0), r2 = branch_root(e2, 3, 0.0);
  const Complex v = 0.75 * (r1 + r2) * (r1 + r2) / (r1 * r1 + r1 * r2 + r2 * r2);
  return v.real();
}

}  // namespace lemnis

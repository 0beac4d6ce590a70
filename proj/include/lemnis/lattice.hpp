#pragma once

#include <cmath>
#include <utility>

#include "lemnis/numerics.hpp"

namespace lemnis {

enum class ModulusTag { tau_i, tau_zeta, generic };

struct Modulus {
  ModulusTag tag = ModulusTag::tau_i;
  Complex tau{0.0, 1.0};

  static Modulus i() { return {ModulusTag::tau_i, I}; }
  static Modulus zeta() { return {ModulusTag::tau_zeta, ZETA}; }
  static Modulus generic(Complex t) {
    if (!(t.imag() > 0.0)) throw domain_error("Modulus: Im(tau) must be positive");
    return {ModulusTag::generic, t};
  }
};

// coordinates (alpha, beta) with z = alpha*tau + beta
inline std::pair<double, double> lattice_coords(Complex z, Complex tau) {
  const double a = z.imag() / tau.imag();
  return {a, z.real() - a * tau.real()};
}

namespace detail {
inline double fold_unit(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0 - 1e-13) f = 0.0;
  return f;
}
}  // namespace detail

struct TorusPoint {
  Modulus modulus;
  Complex z{};  // canonical: alpha, beta in [0, 1)

  TorusPoint() = default;
  TorusPoint(Modulus m, Complex w) : modulus(m) {
    if (!is_finite(w)) throw domain_error("TorusPoint: non-finite representative");
    auto [a, b] = lattice_coords(w, m.tau);
    a = detail::fold_unit(a);
    b = detail::fold_unit(b);
    z = a * m.tau + b;
  }
};

// distance from z to the nearest point of the lattice Z tau + Z
inline double lattice_distance(Complex z, Complex tau) {
  auto [a, b] = lattice_coords(z, tau);
  const double ra = std::round(a), rb = std::round(b);
  double best = std::abs(z);
  for (int da = -1; da <= 1; ++da)
    for (int db = -1; db <= 1; ++db)
      best = std::min(best, std::abs(z - ((ra + da) * tau + (rb + db))));
  return best;
}

// nearest lattice point to z, as integer coordinates (p, q) meaning p*tau + q
inline std::pair<long long, long long> nearest_lattice_point(Complex z, Complex tau) {
  auto [a, b] = lattice_coords(z, tau);
  const double ra = std::round(a), rb = std::round(b);
  double best = -1.0;
  std::pair<long long, long long> out{0, 0};
  for (int da = -1; da <= 1; ++da)
    for (int db = -1; db <= 1; ++db) {
      const double d = std::abs(z - ((ra + da) * tau + (rb + db)));
      if (best < 0.0 || d < best) {
        best = d;
        out = {static_cast<long long>(ra + da), static_cast<long long>(rb + db)};
      }
    }
  return out;
}

inline double torus_distance(Complex z1, Complex z2, Complex tau) { return lattice_distance(z1 - z2, tau); }

}  // namespace lemnis

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lemnis/hypergeometric.hpp"
#include "lemnis/lattice.hpp"
#include "lemnis/numerics.hpp"
#include "lemnis/quadrature.hpp"
#include "lemnis/theta.hpp"

namespace lemnis {

// C_I: u^4 = t^2 (t-1) with rho(t,u) = (t, i u);  C_ZETA: u^6 = t^3 (t-1) with rho(t,u) = (t, zeta u)
enum class CurveKind { c_i, c_zeta };

inline int cover_degree(CurveKind c) { return c == CurveKind::c_i ? 4 : 6; }
inline Complex curve_unit(CurveKind c) { return c == CurveKind::c_i ? I : ZETA; }
inline Modulus curve_modulus(CurveKind c) { return c == CurveKind::c_i ? Modulus::i() : Modulus::zeta(); }
inline const char* curve_name(CurveKind c) { return c == CurveKind::c_i ? "i" : "zeta"; }

inline std::vector<Complex> unit_group(CurveKind c) {
  const Complex e = curve_unit(c);
  std::vector<Complex> out{1.0};
  for (int k = 1; k < cover_degree(c); ++k) out.push_back(out.back() * e);
  return out;
}

struct CurvePoint {
  CurveKind curve = CurveKind::c_i;
  Complex t{}, u{};
  bool at_infinity = false;
  std::string label;  // set for ramification points: P1, Pinf, Pinf1, Pinf2, P01, P02, P03
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  int max_depth = 30;
  int singular_substitution_order = 4;

  static QuadratureConfig for_curve(CurveKind c) { return {1e-12, 30, cover_degree(c)}; }
  void validate() const {
    if (!(abs_tol > 1e-15 && abs_tol < 1e-6)) throw domain_error("QuadratureConfig: abs_tol outside (1e-15, 1e-6)");
    if (max_depth < 1 || max_depth > 40) throw domain_error("QuadratureConfig: max_depth outside [1, 40]");
  }
};

// relative residual of the curve equation
inline double curve_residual(const CurvePoint& p) {
  if (p.at_infinity) return 0.0;
  const int m = cover_degree(p.curve);
  const Complex lhs = ipow(p.u, m);
  const Complex rhs = ipow(p.t, m / 2) * (p.t - 1.0);
  const double scale = std::max({std::abs(lhs), std::pow(std::abs(p.t), m / 2 + 1), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

struct SpecialPoint {
  std::string label;
  Complex z;  // Abel-Jacobi image
  bool at_infinity;
  Complex t;
};

inline const std::vector<SpecialPoint>& special_points(CurveKind c) {
  static const std::vector<SpecialPoint> ci = {
      {"P1", 0.0, false, 1.0},
      {"Pinf", (1.0 + I) / 2.0, true, 0.0},
      {"P01", I / 2.0, false, 0.0},
      {"P02", 0.5, false, 0.0},
  };
  static const std::vector<SpecialPoint> cz = {
      {"P1", 0.0, false, 1.0},
      {"Pinf1", (ZETA + 1.0) / 3.0, true, 0.0},
      {"Pinf2", (2.0 * ZETA + 2.0) / 3.0, true, 0.0},
      {"P01", ZETA / 2.0, false, 0.0},
      {"P02", (ZETA + 1.0) / 2.0, false, 0.0},
      {"P03", 0.5, false, 0.0},
  };
  return c == CurveKind::c_i ? ci : cz;
}

inline CurvePoint special_point(CurveKind c, const std::string& label) {
  for (const auto& s : special_points(c))
    if (s.label == label) return {c, s.t, 0.0, s.at_infinity, s.label};
  throw domain_error("special_point: unknown label " + label + " on C_" + curve_name(c));
}

// special point whose image is congruent to z, if any
inline std::optional<SpecialPoint> match_special(CurveKind c, Complex z, double tol = 1e-7) {
  const Complex tau = curve_modulus(c).tau;
  for (const auto& s : special_points(c))
    if (torus_distance(z, s.z, tau) < tol) return s;
  return std::nullopt;
}

// u = unit^k * t^(1/2) (t-1)^(1/m), principal powers; real positive on (1, inf) for k = 0
inline CurvePoint lift_branch(CurveKind c, Complex t, int k) {
  if (!is_finite(t)) throw domain_error("lift_branch: non-finite t");
  if (std::abs(t) < 1e-14 || std::abs(t - 1.0) < 1e-14)
    throw domain_error("lift_branch: t is a ramification value; use special_point");
  const int m = cover_degree(c);
  const int kk = ((k % m) + m) % m;
  const Complex u = ipow(curve_unit(c), kk) * std::sqrt(t) * std::pow(t - 1.0, 1.0 / m);
  return {c, t, u, false, ""};
}

inline CurvePoint apply_rho(const CurvePoint& p, int k = 1) {
  if (!p.label.empty() || p.at_infinity) {
    // rho permutes ramification points like multiplication by the unit on images
    const SpecialPoint* src = nullptr;
    for (const auto& s : special_points(p.curve))
      if (s.label == p.label) src = &s;
    if (!src) throw domain_error("apply_rho: unlabeled ramification point");
    const Complex z = ipow(curve_unit(p.curve), k) * src->z;
    return special_point(p.curve, match_special(p.curve, z)->label);
  }
  CurvePoint q = p;
  q.u *= ipow(curve_unit(p.curve), k);
  return q;
}

// constant relating dz to the normalized 1-form: z = (m / norm) * integral of ds / sqrt(1 + s^m)
inline Complex period_norm(CurveKind c) {
  return c == CurveKind::c_i ? (1.0 - I) * beta(0.25, 0.25) : (1.0 - ZETA * ZETA) * beta(1.0 / 3.0, 1.0 / 6.0);
}

namespace detail {

inline std::vector<Complex> s_branch_points(int m) {
  std::vector<Complex> b;
  for (int j = 0; j < m; ++j) b.push_back(std::polar(1.0, pi * (2.0 * j + 1.0) / m));
  return b;
}

inline double segment_distance(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double s = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + s * d));
}

// smallest distance from the polyline to a branch point, ignoring those the path ends on
inline double path_clearance(const std::vector<Complex>& path, int m) {
  double best = 1e300;
  const Complex end = path.back();
  for (Complex b : s_branch_points(m)) {
    if (std::abs(end - b) < 0.1) continue;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) best = std::min(best, segment_distance(b, path[i], path[i + 1]));
  }
  return best;
}

inline std::vector<Complex> plan_path(Complex target, int m) {
  std::vector<Complex> straight{0.0, target};
  if (path_clearance(straight, m) >= 0.05) return straight;
  std::vector<Complex> best;
  double best_c = -1.0;
  const double radii[] = {0.5, 1.5, std::max(2.0, 1.5 * std::abs(target))};
  for (double r : radii)
    for (int k = 0; k < 8 * m; ++k) {
      std::vector<Complex> cand{0.0, std::polar(r, 2.0 * pi * k / (8.0 * m)), target};
      const double c = path_clearance(cand, m);
      if (c > best_c + 1e-12) best_c = c, best = cand;
    }
  if (best_c < 1e-8) throw domain_error("abel_jacobi: no path clears the branch points");
  return best;
}

struct Tracked {
  Complex integral{};
  Complex r{};
};

// integral of ds / r(s) along [p0, p1] with r continued from r0, where r^2 = 1 + s^m
inline Tracked integrate_segment(Complex p0, Complex p1, Complex r0, int m, const QuadratureConfig& cfg) {
  const Complex d = p1 - p0;
  auto w_at = [&](double lam) { return 1.0 + ipow(p0 + lam * d, m); };
  Tracked acc{0.0, r0};
  // pieces are popped left to right so r is continued in order
  struct Piece {
    double a, b;
    int depth;
  };
  std::vector<Piece> todo{{0.0, 1.0, 0}};
  Complex r_cur = r0;
  while (!todo.empty()) {
    Piece pc = todo.back();
    todo.pop_back();
    const Complex wa = w_at(pc.a);
    bool ok = true;
    for (int j = 1; j <= 16 && ok; ++j) {
      const double lam = pc.a + (pc.b - pc.a) * j / 16.0;
      ok = std::abs(w_at(lam) / wa - 1.0) < 0.5;
    }
    if (!ok) {
      if (pc.depth >= 64) throw iteration_limit_error("abel_jacobi: branch tracking failed to resolve the path");
      const double mid = 0.5 * (pc.a + pc.b);
      todo.push_back({mid, pc.b, pc.depth + 1});
      todo.push_back({pc.a, mid, pc.depth + 1});
      continue;
    }
    const Complex ra = r_cur;
    auto f = [&](double lam) { return d / (ra * std::sqrt(w_at(lam) / wa)); };
    const double tol = std::max(cfg.abs_tol * (pc.b - pc.a), 1e-16);
    acc.integral += integrate(f, pc.a, pc.b, tol, cfg.max_depth).value;
    r_cur = ra * std::sqrt(w_at(pc.b) / wa);
  }
  acc.r = r_cur;
  return acc;
}

}  // namespace detail

// Abel-Jacobi image before reduction mod the lattice
inline Complex abel_jacobi_value(const CurvePoint& p, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!p.label.empty()) {
    for (const auto& s : special_points(p.curve))
      if (s.label == p.label) return s.z;
    throw domain_error("abel_jacobi: unknown label " + p.label);
  }
  if (p.at_infinity) {
    if (p.curve == CurveKind::c_i) return (1.0 + I) / 2.0;
    throw domain_error("abel_jacobi: point at infinity on C_zeta needs a label");
  }
  if (!is_finite(p.t) || !is_finite(p.u)) throw domain_error("abel_jacobi: non-finite point");
  if (curve_residual(p) > 1e-8) throw domain_error("abel_jacobi: point is not on the curve");
  if (std::abs(p.t - 1.0) < 1e-15) return 0.0;
  if (std::abs(p.t) < 1e-15) throw domain_error("abel_jacobi: t = 0 is ramified; use a labeled special point");
  const int m = cover_degree(p.curve);
  // s^m = t - 1 and r = u/s with r^2 = t; the two admissible s differ by sign
  const Complex s0 = std::pow(p.t - 1.0, 1.0 / m);
  Complex s_p = s0;
  double best = 1e300;
  for (int j = 0; j < m; ++j) {
    const Complex s = s0 * std::polar(1.0, 2.0 * pi * j / m);
    const double e = std::abs((p.u / s) * (p.u / s) - p.t);
    if (e < best) best = e, s_p = s;
  }
  const Complex r_p = p.u / s_p;
  const std::vector<Complex> path = detail::plan_path(s_p, m);
  detail::Tracked tr{0.0, 1.0};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    detail::Tracked seg = detail::integrate_segment(path[i], path[i + 1], tr.r, m, cfg);
    tr.integral += seg.integral;
    tr.r = seg.r;
  }
  // (s, r) and (-s, -r) are the same point of the curve; the mirrored path reaches the other lift
  const double sign = std::abs(tr.r - r_p) <= std::abs(tr.r + r_p) ? 1.0 : -1.0;
  return sign * static_cast<double>(m) / period_norm(p.curve) * tr.integral;
}

inline TorusPoint abel_jacobi(const CurvePoint& p, const QuadratureConfig& cfg) {
  return TorusPoint(curve_modulus(p.curve), abel_jacobi_value(p, cfg));
}

inline TorusPoint abel_jacobi(const CurvePoint& p) { return abel_jacobi(p, QuadratureConfig::for_curve(p.curve)); }

// Images of the ramification points by direct quadrature (not the table): P0k along the ray
// to the branch point with s = s_b (1 - v^2); Pinf along the positive ray split at 1 with s = 1/w.
inline Complex special_point_by_quadrature(CurveKind c, const std::string& label, const QuadratureConfig& cfg) {
  cfg.validate();
  const int m = cover_degree(c);
  const Complex k = static_cast<double>(m) / period_norm(c);
  auto real_integral = [&](auto f) { return integrate([&](double v) { return Complex(f(v), 0.0); }, 0.0, 1.0, cfg.abs_tol, cfg.max_depth).value; };
  if (label == "P1") return 0.0;
  if (label.rfind("P0", 0) == 0) {
    const int idx = std::stoi(label.substr(2));
    const Complex sb = ipow(curve_unit(c), idx - 1) * std::polar(1.0, pi / m);
    // 1 - (1 - v^2)^m = v^2 * sum_k (1 - v^2)^k
    const Complex j = real_integral([&](double v) {
      const double rho = 1.0 - v * v;
      double acc = 0.0, pw = 1.0;
      for (int q = 0; q < m; ++q) acc += pw, pw *= rho;
      return 2.0 / std::sqrt(acc);
    });
    return k * sb * j;
  }
  if (label.rfind("Pinf", 0) == 0) {
    const int idx = label.size() > 4 ? std::stoi(label.substr(4)) : 1;
    const Complex dir = ipow(curve_unit(c), idx - 1);
    const Complex j1 = real_integral([&](double s) { return 1.0 / std::sqrt(1.0 + std::pow(s, m)); });
    const Complex j2 = real_integral([&](double w) { return std::pow(w, m / 2 - 2) / std::sqrt(1.0 + std::pow(w, m)); });
    return k * dir * (j1 + j2);
  }
  throw domain_error("special_point_by_quadrature: unknown label " + label);
}

namespace detail {

inline std::optional<CurvePoint> special_at(CurveKind c, Complex z) {
  const Complex tau = curve_modulus(c).tau;
  for (const auto& s : special_points(c))
    if (torus_distance(z, s.z, tau) < 1e-12) return special_point(c, s.label);
  return std::nullopt;
}

}  // namespace detail

inline CurvePoint inverse_quartic(const TorusPoint& zp) {
  if (zp.modulus.tag != ModulusTag::tau_i) throw domain_error("inverse_quartic: needs tau = i");
  if (auto s = detail::special_at(CurveKind::c_i, zp.z)) return *s;
  const ThetaQuad q = theta_quad(zp.z, zp.modulus);
  const Complex t = 2.0 * q.t01 * q.t01 * q.t10 * q.t10 / ipow(q.t00, 4);
  const Complex u = -(1.0 - I) * q.t01 * q.t10 * q.t11 / ipow(q.t00, 3);
  return {CurveKind::c_i, t, u, false, ""};
}

// the two displayed expressions for t
inline std::pair<Complex, Complex> inverse_quartic_t_forms(Complex z) {
  const ThetaQuad q = theta_quad(z, Modulus::i());
  const Complex d = ipow(q.t00, 4);
  return {2.0 * q.t01 * q.t01 * q.t10 * q.t10 / d, 1.0 - ipow(q.t11, 4) / d};
}

inline CurvePoint inverse_sextic(const TorusPoint& zp) {
  if (zp.modulus.tag != ModulusTag::tau_zeta) throw domain_error("inverse_sextic: needs tau = zeta");
  if (auto s = detail::special_at(CurveKind::c_zeta, zp.z)) return *s;
  const ThetaQuad q = theta_quad(zp.z, zp.modulus);
  const Complex r3i = std::sqrt(3.0) * I;
  const Complex D = r3i * q.t00 * q.t00 - q.t11 * q.t11;
  const Complex t = -3.0 * r3i * q.t00 * q.t00 * q.t01 * q.t01 * q.t10 * q.t10 / (D * D * D);
  const Complex u = e_of(-0.125) * std::pow(27.0, 0.25) * q.t00 * q.t01 * q.t10 * q.t11 / (D * D);
  return {CurveKind::c_zeta, t, u, false, ""};
}

inline CurvePoint inverse_map(CurveKind c, const TorusPoint& z) {
  return c == CurveKind::c_i ? inverse_quartic(z) : inverse_sextic(z);
}

inline std::vector<IdentitySides> ratio_identities_quartic(const CurvePoint& p, Complex z) {
  const ThetaQuad q = theta_quad(z, Modulus::i());
  const Complex x = I * p.u * p.u / p.t;
  const Complex d = q.t00 * q.t00;
  const double r2 = std::sqrt(2.0);
  return {
      {"iu2/t", x, q.t11 * q.t11 / d},
      {"1+iu2/t", 1.0 + x, r2 * q.t01 * q.t01 / d},
      {"1-iu2/t", 1.0 - x, r2 * q.t10 * q.t10 / d},
  };
}

inline std::vector<IdentitySides> ratio_identities_quartic(const TorusPoint& z) {
  return ratio_identities_quartic(inverse_quartic(z), z.z);
}

inline std::vector<IdentitySides> ratio_identities_sextic(const CurvePoint& p, Complex z) {
  const ThetaQuad q = theta_quad(z, Modulus::zeta());
  const Complex x = p.t / (p.u * p.u);
  const Complex d = q.t11 * q.t11;
  const double r3 = std::sqrt(3.0);
  const Complex a = 1.0 + x, b = 1.0 + ZETA * ZETA * x, c = 1.0 + ipow(ZETA, 4) * x;
  return {
      {"1+t/u2", a, r3 * I * q.t00 * q.t00 / d},
      {"1+zeta2 t/u2", b, -r3 * q.t10 * q.t10 / d},
      {"1+zeta4 t/u2", c, r3 * q.t01 * q.t01 / d},
      {"u3/(t(t-1))", ipow(p.u, 3) / (p.t * (p.t - 1.0)),
       e_of(-0.125) * std::pow(27.0, 0.25) * q.t00 * q.t01 * q.t10 / (d * q.t11)},
      {"product", a * b * c, 1.0 + 1.0 / (p.t - 1.0)},
  };
}

inline std::vector<IdentitySides> ratio_identities_sextic(const TorusPoint& z) {
  return ratio_identities_sextic(inverse_sextic(z), z.z);
}

struct GroupWitness {
  bool equivalent = false;
  Complex unit{1.0, 0.0};
  Complex lattice_shift{};
  double distance = 0.0;
};

// z1 = unit * z2 + lattice point, up to tol
inline GroupWitness equivalent_mod_group(const TorusPoint& z1, const TorusPoint& z2, double tol) {
  if (z1.modulus.tag != z2.modulus.tag) throw domain_error("equivalent_mod_group: moduli differ");
  const Complex tau = z1.modulus.tau;
  const CurveKind c = z1.modulus.tag == ModulusTag::tau_i ? CurveKind::c_i : CurveKind::c_zeta;
  if (z1.modulus.tag == ModulusTag::generic) throw domain_error("equivalent_mod_group: needs tau = i or zeta");
  GroupWitness best;
  best.distance = 1e300;
  for (Complex e : unit_group(c)) {
    const Complex d = z1.z - e * z2.z;
    auto [p, q] = nearest_lattice_point(d, tau);
    const Complex lam = static_cast<double>(p) * tau + static_cast<double>(q);
    const double dist = std::abs(d - lam);
    if (dist < best.distance) best = {false, e, lam, dist};
  }
  best.equivalent = best.distance < tol;
  return best;
}

namespace detail {

// point over a multiplied image, used when the rational formula degenerates
inline CurvePoint point_from_image(CurveKind c, Complex z) {
  if (auto s = match_special(c, z)) return special_point(c, s->label);
  throw domain_error("multiplication: degenerate output is not a ramification point");
}

}  // namespace detail

inline CurvePoint mul_one_plus_i(const CurvePoint& p) {
  if (p.curve != CurveKind::c_i) throw domain_error("mul_one_plus_i: point is not on C_i");
  if (!p.label.empty() || p.at_infinity)
    return detail::point_from_image(p.curve, (1.0 + I) * abel_jacobi_value(p, QuadratureConfig::for_curve(p.curve)));
  if (std::abs(p.t) < 1e-14) throw domain_error("mul_one_plus_i: t = 0 needs a labeled point");
  const Complex a = (p.t - 2.0) / p.t;
  const Complex t2 = a * a;
  const Complex u2 = (1.0 + I) * p.u * (2.0 - p.t) / (p.t * p.t);
  if (std::abs(t2) < 1e-12 || std::abs(t2 - 1.0) < 1e-14)
    return detail::point_from_image(p.curve, (1.0 + I) * abel_jacobi_value(p, QuadratureConfig::for_curve(p.curve)));
  return {CurveKind::c_i, t2, u2, false, ""};
}

inline CurvePoint mul_one_plus_zeta(const CurvePoint& p) {
  if (p.curve != CurveKind::c_zeta) throw domain_error("mul_one_plus_zeta: point is not on C_zeta");
  const auto cfg = QuadratureConfig::for_curve(p.curve);
  if (!p.label.empty() || p.at_infinity) return detail::point_from_image(p.curve, (1.0 + ZETA) * abel_jacobi_value(p, cfg));
  const Complex d = 4.0 * p.t - 3.0;
  const Complex n = 9.0 - 8.0 * p.t;
  // t = 3/4 is a pole of the formula: the image lies over infinity
  if (std::abs(d) < 1e-12) return detail::point_from_image(p.curve, (1.0 + ZETA) * abel_jacobi_value(p, cfg));
  const Complex t2 = p.t * n * n / (d * d * d);
  const Complex u2 = e_of(1.0 / 12) * std::sqrt(3.0) * p.u * n / (d * d);
  if (std::abs(t2) < 1e-12 || std::abs(t2 - 1.0) < 1e-14)
    return detail::point_from_image(p.curve, (1.0 + ZETA) * abel_jacobi_value(p, cfg));
  return {CurveKind::c_zeta, t2, u2, false, ""};
}

struct OneFormConstant {
  Complex theta_route, beta_route;
  double residual;
};

inline OneFormConstant one_form_constant(CurveKind c) {
  if (c == CurveKind::c_i) {
    const Complex t00 = theta(TH00, 0.0, Modulus::i());
    const Complex a = 2.0 * (1.0 - I) * pi * t00 * t00;
    const Complex b = (1.0 - I) * beta(0.25, 0.25);
    return {a, b, scaled_diff(a, b)};
  }
  const Complex t00 = theta(TH00, 0.0, Modulus::zeta());
  const Complex a = e_of(-0.125) * 2.0 * pi * std::pow(27.0, 0.25) * t00 * t00;
  const Complex b = (1.0 - ZETA * ZETA) * beta(1.0 / 3.0, 1.0 / 6.0);
  return {a, b, scaled_diff(a, b)};
}

// left side of the HGF-theta identity; equals z near 0
inline Complex hgf_theta_value(Complex z, CurveKind c) {
  if (c == CurveKind::c_i) {
    const ThetaQuad q = theta_quad(z, Modulus::i());
    const Complex r = q.t11 / q.t00;
    const Complex x = ipow(r, 4);
    if (!(std::abs(x) < 1.0)) throw domain_error("hgf_theta: F argument outside the unit disk");
    const double g = gamma_real(0.25);
    return -2.0 * std::sqrt(2.0 * pi) / (g * g) * r * gauss_2f1(GaussParams(0.25, 0.5, 1.25), x);
  }
  const ThetaQuad q = theta_quad(z, Modulus::zeta());
  const Complex r3i = std::sqrt(3.0) * I;
  const Complex a = q.t00 * q.t00, d = q.t11 * q.t11;
  const Complex x = d * d * d / ipow(d - r3i * a, 3);
  if (!(std::abs(x) < 1.0)) throw domain_error("hgf_theta: F argument outside the unit disk");
  // 1/sqrt(1 - sqrt3 i a/d) on the branch continuous from z = 0 (sqrt(zeta^2) = zeta at z = zeta/2)
  const Complex inv_s = q.t11 / (std::sqrt(-r3i) * q.t00 * std::sqrt(1.0 - d / (r3i * a)));
  const double g = gamma_real(1.0 / 3.0);
  return std::cbrt(16.0) * pi * ZETA * ZETA / (g * g * g) * inv_s * gauss_2f1(GaussParams(1.0 / 6.0, 0.5, 7.0 / 6.0), x);
}

inline double hgf_theta_roundtrip(Complex z, CurveKind c) { return std::abs(hgf_theta_value(z, c) - z); }

}  // namespace lemnis

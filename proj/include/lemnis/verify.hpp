#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lemnis/curves.hpp"
#include "lemnis/hypergeometric.hpp"
#include "lemnis/meaniter.hpp"
#include "lemnis/monodromy.hpp"
#include "lemnis/report.hpp"
#include "lemnis/theta.hpp"

namespace lemnis {

struct SuiteOptions {
  int samples = 100;
  double tol = 1e-10;
};

// floors for checks that go through quadrature or near-singular series
inline constexpr double quadrature_tol_floor = 1e-8;
inline constexpr double hgf_theta_tol_floor = 1e-9;
inline constexpr double ode_tol = 1e-6;

namespace detail {

inline ThetaChar random_char(SplitMix64& r) {
  static constexpr int dens[] = {1, 2, 3, 4, 6};
  auto pick = [&] {
    const int q = dens[r.integer(0, 4)];
    return Rational(r.integer(-q, 2 * q), q);
  };
  const Rational a = pick();
  return {a, pick()};
}

// z = x tau + y with x, y in [-1/2, 1/2)
inline Complex random_cell_point(SplitMix64& r, Complex tau) {
  const double x = r.uniform(-0.5, 0.5), y = r.uniform(-0.5, 0.5);
  return x * tau + y;
}

inline void add_all(Report& rep, const std::string& prefix, const std::vector<IdentitySides>& v, double tol) {
  for (const auto& s : v) rep.add(prefix + s.name, s.residual(), tol);
}

}  // namespace detail

inline void suite_addition(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  for (const Modulus m : {Modulus::i(), Modulus::zeta()}) {
    const std::string tag = m.tag == ModulusTag::tau_i ? "addition.i." : "addition.zeta.";
    rep.add(tag + "jacobi_derivative", jacobi_derivative(m).residual(), o.tol);
    for (int k = 0; k < o.samples; ++k) {
      const Complex z1 = detail::random_cell_point(rng, m.tau), z2 = detail::random_cell_point(rng, m.tau);
      for (const auto& r : addition_check(z1, z2, m)) rep.add(tag + r.name, r.value, o.tol);

      const ThetaChar c = detail::random_char(rng);
      const long long p = rng.integer(-2, 2), q = rng.integer(-2, 2);
      const Complex lam = static_cast<double>(p) * m.tau + static_cast<double>(q);
      rep.add(tag + "quasi_periodicity", scaled_diff(theta(c, z1 + lam, m), quasi_period_factor(c, p, q, z1, m) * theta(c, z1, m)), o.tol);
      rep.add(tag + "parity", scaled_diff(theta(c, -z1, m), theta({-c.a, -c.b}, z1, m)), o.tol);
      const ReducedChar rc = reduce_char(c);
      rep.add(tag + "char_shift", scaled_diff(theta(c, z1, m), rc.factor * theta(rc.reduced, z1, m)), o.tol);
      for (TauMove mv : {TauMove::shift, TauMove::invert}) {
        const TauTransform t = transform_tau(c, z1, m, mv);
        rep.add(tag + (mv == TauMove::shift ? "tau_shift" : "tau_invert"),
                scaled_diff(theta(c, z1, m), t.prefactor * theta(t.c2, t.z2, t.m2)), o.tol);
      }
    }
  }
}

inline void suite_tau_i(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  const Modulus m = Modulus::i();
  for (const auto& k : theta_constants(m))
    rep.add("tau-i.constant_" + k.c.a.str() + "," + k.c.b.str(), scaled_diff(theta(k.c, 0.0, m), k.value), o.tol);
  rep.add("tau-i.one_form_constant", one_form_constant(CurveKind::c_i).residual, o.tol);
  for (int k = 0; k < o.samples; ++k) {
    const Complex z = detail::random_cell_point(rng, m.tau);
    const ThetaChar c = detail::random_char(rng);
    const MultipleLaw law = i_multiple(c, z);
    rep.add("tau-i.i_multiple", scaled_diff(theta(c, I * z, m), law.prefactor * theta(law.c2, z, m)), o.tol);
    detail::add_all(rep, "tau-i.", one_plus_i_multiple(z), o.tol);
    detail::add_all(rep, "tau-i.", tau_i_relations(z), o.tol);
    const Complex zs = std::polar(rng.uniform(0.0, 0.2), rng.uniform(0.0, 2.0 * pi));
    rep.add("tau-i.hgf_theta_roundtrip", hgf_theta_roundtrip(zs, CurveKind::c_i), std::max(o.tol, hgf_theta_tol_floor));
  }
}

inline void suite_tau_zeta(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  const Modulus m = Modulus::zeta();
  for (const auto& k : theta_constants(m))
    rep.add("tau-zeta.constant_" + k.c.a.str() + "," + k.c.b.str(), scaled_diff(theta(k.c, 0.0, m), k.value), o.tol);
  detail::add_all(rep, "tau-zeta.", hi_theta_relations(), o.tol);
  rep.add("tau-zeta.one_form_constant", one_form_constant(CurveKind::c_zeta).residual, o.tol);
  for (int k = 0; k < o.samples; ++k) {
    const Complex z = detail::random_cell_point(rng, m.tau);
    const ThetaChar c = detail::random_char(rng);
    for (OmegaPower pw : {OmegaPower::omega, OmegaPower::omega_sq}) {
      const MultipleLaw law = omega_multiple(c, z, pw);
      const Complex w = pw == OmegaPower::omega ? OMEGA : OMEGA * OMEGA;
      rep.add(pw == OmegaPower::omega ? "tau-zeta.omega_multiple" : "tau-zeta.omega_sq_multiple",
              scaled_diff(theta(c, w * z, m), law.prefactor * theta(law.c2, z, m)), o.tol);
    }
    detail::add_all(rep, "tau-zeta.", omega_lines(z), o.tol);
    detail::add_all(rep, "tau-zeta.", one_plus_zeta_multiple(z), o.tol);
    detail::add_all(rep, "tau-zeta.", zeta_linear_combination(z), o.tol);
    const Complex zs = std::polar(rng.uniform(0.0, 0.2), rng.uniform(0.0, 2.0 * pi));
    rep.add("tau-zeta.hgf_theta_roundtrip", hgf_theta_roundtrip(zs, CurveKind::c_zeta), std::max(o.tol, hgf_theta_tol_floor));
  }
}

// special-point clearance used when sampling generic points
inline constexpr double special_clearance = 0.1;

inline void suite_inverse(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  const double qt = std::max(o.tol, quadrature_tol_floor);
  for (CurveKind c : {CurveKind::c_i, CurveKind::c_zeta}) {
    const std::string tag = std::string("inverse.") + curve_name(c) + ".";
    const Modulus m = curve_modulus(c);
    const auto cfg = QuadratureConfig::for_curve(c);
    for (const auto& s : special_points(c)) {
      if (s.label == "P1") continue;
      const Complex z = special_point_by_quadrature(c, s.label, cfg);
      rep.add(tag + "special_" + s.label, torus_distance(z, s.z, m.tau), qt);
    }
    for (int k = 0; k < o.samples; ++k) {
      Complex z;
      do z = rng.uniform() * m.tau + rng.uniform();
      while (match_special(c, z, special_clearance));
      const TorusPoint zp(m, z);
      const CurvePoint P = inverse_map(c, zp);
      rep.add(tag + "curve_equation", curve_residual(P), o.tol);
      rep.add(tag + "roundtrip", torus_distance(abel_jacobi(P, cfg).z, zp.z, m.tau), qt);
      const auto ids = c == CurveKind::c_i ? ratio_identities_quartic(P, zp.z) : ratio_identities_sextic(P, zp.z);
      detail::add_all(rep, tag, ids, o.tol);
      if (c == CurveKind::c_i) {
        const auto [t1, t2] = inverse_quartic_t_forms(zp.z);
        rep.add(tag + "t_forms", scaled_diff(t1, t2), o.tol);
      }
    }
  }
}

namespace detail {
inline CurvePoint multiply(const CurvePoint& p) {
  return p.curve == CurveKind::c_i ? mul_one_plus_i(p) : mul_one_plus_zeta(p);
}

// t avoiding the ramification values and the pole at 3/4 of the sextic map
inline Complex random_t(SplitMix64& r) {
  for (;;) {
    const Complex t = std::polar(std::exp(r.uniform(-1.5, 1.5)), r.uniform(-pi, pi));
    if (std::abs(t) > 0.05 && std::abs(t - 1.0) > 0.05 && std::abs(t - 0.75) > 0.05) return t;
  }
}
}  // namespace detail

inline void suite_multiplication(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  const double qt = std::max(o.tol, quadrature_tol_floor);
  for (CurveKind c : {CurveKind::c_i, CurveKind::c_zeta}) {
    const std::string tag = std::string("multiplication.") + curve_name(c) + ".";
    const Modulus m = curve_modulus(c);
    const Complex k = 1.0 + curve_unit(c);
    const auto cfg = QuadratureConfig::for_curve(c);
    auto check = [&](const CurvePoint& P) {
      const CurvePoint Q = detail::multiply(P);
      rep.add(tag + "curve_equation", curve_residual(Q), o.tol);
      const TorusPoint z = abel_jacobi(P, cfg), z2 = abel_jacobi(Q, cfg);
      const GroupWitness w = equivalent_mod_group(z2, TorusPoint(m, k * z.z), qt);
      rep.add(tag + "witness", w.distance, qt);
    };
    for (const auto& s : special_points(c)) check(special_point(c, s.label));
    for (int n = 0; n < o.samples; ++n) check(lift_branch(c, detail::random_t(rng), rng.integer(0, cover_degree(c) - 1)));
  }
}

inline void suite_monodromy(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  auto exact = [&](const std::string& name, bool ok) { rep.add("monodromy." + name, ok ? 0.0 : 1.0, 0.0); };
  auto orders = [](const auto& t) {
    std::vector<int> v{matrix_order(t.n0).value_or(0), matrix_order(t.n1).value_or(0), matrix_order(t.n01inv).value_or(0)};
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto q = n_matrices<SchwarzVariant::quartic>();
  const auto s = n_matrices<SchwarzVariant::sextic>();
  exact("orders_quartic_2_4_4", orders(q) == std::vector<int>{2, 4, 4});
  exact("orders_sextic_2_3_6", orders(s) == std::vector<int>{2, 3, 6});
  using GI = CycInt<Gauss>;
  using EI = CycInt<Eisenstein6>;
  exact("quartic_n01inv", q.n01inv == CircuitMatrix<Gauss>::of(GI::w(), GI(1), GI(0), GI(1)));
  exact("sextic_n01inv", s.n01inv == CircuitMatrix<Eisenstein6>::of(EI::w() * EI::w(), EI(1), EI(0), EI(1)));
  exact("quartic_product", q.n0 * q.n1 * q.n01inv == CircuitMatrix<Gauss>::identity());
  exact("sextic_product", s.n0 * s.n1 * s.n01inv == CircuitMatrix<Eisenstein6>::identity());

  auto closure = [&](const auto& t, const std::string& name, std::size_t n_units) {
    const auto g = group_closure(std::vector{as_affine(t.n0), as_affine(t.n1), as_affine(t.n01inv)}, 10000);
    exact(name + "_units", g.unit_set.size() == n_units);
    exact(name + "_translations", g.shift_one && g.shift_omega);
  };
  closure(q, "closure_quartic", 4);
  closure(s, "closure_sextic", 6);

  const double mt = std::max(o.tol, 1e-12);
  for (SchwarzVariant v : {SchwarzVariant::quartic, SchwarzVariant::sextic}) {
    const GaussParams p = schwarz_params(v);
    const auto [b0, b1] = base_changed_circuits(p);
    const auto n = v == SchwarzVariant::quartic ? q.n0.to_complex() : s.n0.to_complex();
    const auto n1 = v == SchwarzVariant::quartic ? q.n1.to_complex() : s.n1.to_complex();
    const std::string tag = v == SchwarzVariant::quartic ? "monodromy.quartic." : "monodromy.sextic.";
    rep.add(tag + "base_change_n0", mat_distance(b0, n), mt);
    rep.add(tag + "base_change_n1", mat_distance(b1, n1), mt);
    const GeneralCircuits g = general_m0_m1(p);
    rep.add(tag + "h_route_m0", mat_distance(g.m0, g.m0_closed), mt);
    rep.add(tag + "h_route_m1", mat_distance(g.m1, g.m1_closed), mt);
  }
  for (int k = 0; k < o.samples; ++k) {
    const GaussParams p(rng.uniform(0.05, 0.95), rng.uniform(-0.9, 0.9), rng.uniform(0.05, 1.95));
    try {
      const GeneralCircuits g = general_m0_m1(p);
      rep.add("monodromy.generic.h_route_m0", mat_distance(g.m0, g.m0_closed), mt);
      rep.add("monodromy.generic.h_route_m1", mat_distance(g.m1, g.m1_closed), mt);
      // the loop around infinity has eigenvalues e(alpha), e(beta)
      const CMatrix inf = mat_inv(mat_mul(g.m0_closed, g.m1_closed));
      const Complex tr = inf[0][0] + inf[1][1];
      const Complex want = e_of(p.alpha) + e_of(p.beta);
      rep.add("monodromy.generic.infinity_trace", std::abs(tr - want), mt);
    } catch (const domain_error&) {
      // resonant draw; skip
    }
  }
}

inline void suite_meaniter(Report& rep, SplitMix64& rng, const SuiteOptions& o) {
  const double lt_q = std::max(o.tol, 1e-11), lt_s = std::max(o.tol, 1e-10);
  for (int k = 0; k < o.samples; ++k) {
    const double ratio = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double scale = std::exp(rng.uniform(-1.0, 1.0));
    const MeanPair p(scale * ratio, scale);
    for (SchwarzVariant v : {SchwarzVariant::quartic, SchwarzVariant::sextic}) {
      const bool qv = v == SchwarzVariant::quartic;
      const std::string tag = qv ? "meaniter.quartic." : "meaniter.sextic.";
      const double lt = qv ? lt_q : lt_s;
      const IterationTrace tr = iterate_until_converged(p, v, 1e-13, 200);
      rep.add(tag + "converged", tr.converged ? 0.0 : 1.0, 0.0);
      const double f = limit_formula(p, v);
      rep.add(tag + "limit", std::abs(tr.limit - f) / f, lt);
      rep.add(tag + "orbit_invariance", std::abs(limit_formula(step(p, v), v) - f) / f, lt);
      const MeanPair n = step(p, v);
      const double lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
      const double slack = 1e-14 * hi;
      const double outside = std::max({0.0, lo - n.a - slack, n.a - hi - slack, lo - n.b - slack, n.b - hi - slack});
      rep.add(tag + "mean_property", outside, 0.0);
    }
    const double x = 2.0 * p.a / (p.a + p.b);
    rep.add("meaniter.quartic.x_relation", std::abs((2.0 - x) / x - p.b / p.a) / (p.b / p.a), o.tol);
    if (p.a < p.b) {
      const double x0 = cubic_preimage_x0(p);
      const double target = p.b * p.b / (p.a * p.a);
      rep.add("meaniter.sextic.x0_cubic", std::abs(cubic_lhs(x0) - target) / target, o.tol);
      rep.add("meaniter.sextic.x0_eta_form", std::abs(x0 - cubic_preimage_x0_eta(p)), o.tol);
    }
  }

  for (int k = 0; k < o.samples; ++k) {
    rep.add("meaniter.eq_hgf", eq_hgf_residual(rng.uniform(0.7, 1.3)), o.tol);
    // the identity switches sheets beyond x = 9/8
    rep.add("meaniter.one_plus_zeta_hgf", one_plus_z_hgf_residual(rng.uniform(0.8, 1.12)), o.tol);
  }

  // 2F1 differential equation by central differences, h = 1e-5
  const double h = 1e-5;
  for (int k = 0; k < o.samples; ++k) {
    const GaussParams p(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0));
    const Complex z = std::polar(rng.uniform(0.0, 0.7), rng.uniform(-pi, pi));
    const Complex f0 = gauss_2f1(p, z), fp = gauss_2f1(p, z + h), fm = gauss_2f1(p, z - h);
    const Complex d1 = (fp - fm) / (2.0 * h), d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const Complex res = z * (1.0 - z) * d2 + (p.gamma - (p.alpha + p.beta + 1.0) * z) * d1 - p.alpha * p.beta * f0;
    rep.add("meaniter.ode_residual", std::abs(res), ode_tol);
  }
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"addition", "tau-i", "tau-zeta", "inverse", "multiplication", "monodromy", "meaniter"};
  return names;
}

inline bool is_suite(const std::string& s) {
  return s == "all" || std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end();
}

// each suite draws from its own stream split off the seed, so "all" reproduces the single-suite samples
inline void run_suite(Report& rep, const std::string& name, std::uint64_t seed, const SuiteOptions& o) {
  using Fn = void (*)(Report&, SplitMix64&, const SuiteOptions&);
  static const std::map<std::string, Fn> table = {
      {"addition", suite_addition}, {"tau-i", suite_tau_i}, {"tau-zeta", suite_tau_zeta},
      {"inverse", suite_inverse}, {"multiplication", suite_multiplication}, {"monodromy", suite_monodromy},
      {"meaniter", suite_meaniter}};
  if (name == "all") {
    for (const auto& n : suite_names()) run_suite(rep, n, seed, o);
    return;
  }
  const auto it = table.find(name);
  if (it == table.end()) throw domain_error("unknown suite: " + name);
  SplitMix64 base(seed);
  for (const auto& n : suite_names()) {
    SplitMix64 stream = base.split();
    if (n == name) {
      it->second(rep, stream, o);
      return;
    }
  }
}

}  // namespace lemnis

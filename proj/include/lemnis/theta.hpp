#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lemnis/lattice.hpp"
#include "lemnis/numerics.hpp"

namespace lemnis {

struct Rational {
  std::int64_t num = 0, den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (d == 0) throw domain_error("Rational: zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::int64_t floor() const { return num >= 0 ? num / den : -((-num + den - 1) / den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend Rational operator+(Rational x, Rational y) { return {x.num * y.den + y.num * x.den, x.den * y.den}; }
  friend Rational operator-(Rational x, Rational y) { return {x.num * y.den - y.num * x.den, x.den * y.den}; }
  friend Rational operator*(Rational x, Rational y) { return {x.num * y.num, x.den * y.den}; }
  friend Rational operator-(Rational x) { return {-x.num, x.den}; }
  friend bool operator==(Rational x, Rational y) { return x.num == y.num && x.den == y.den; }
};

// "p/q" or "p"
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw domain_error("bad rational: " + s);
      return Rational(n);
    }
    const std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
    long long p = std::stoll(ps, &used);
    if (used != ps.size()) throw domain_error("bad rational: " + s);
    long long q = std::stoll(qs, &used);
    if (used != qs.size()) throw domain_error("bad rational: " + s);
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw domain_error("bad rational: " + s);
  }
}

struct ThetaChar {
  Rational a, b;
  friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
};

inline ThetaChar ch(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
  return {Rational(an, ad), Rational(bn, bd)};
}

inline const ThetaChar TH00 = ch(0, 1, 0, 1);
inline const ThetaChar TH01 = ch(0, 1, 1, 2);  // theta_{0,1/2}
inline const ThetaChar TH10 = ch(1, 2, 0, 1);  // theta_{1/2,0}
inline const ThetaChar TH11 = ch(1, 2, 1, 2);

// theta_c = factor * theta_reduced with reduced a, b in [0, 1)
struct ReducedChar {
  ThetaChar reduced;
  Complex factor;
};

inline ReducedChar reduce_char(const ThetaChar& c) {
  const std::int64_t p = c.a.floor(), q = c.b.floor();
  ThetaChar r{c.a - Rational(p), c.b - Rational(q)};
  return {r, e_of((r.a * Rational(q)).value())};
}

namespace detail {

inline constexpr double theta_tail_tol = 1e-17;

template <bool Deriv>
Complex theta_sum(const ThetaChar& c, Complex z, Complex tau) {
  if (!(tau.imag() > 0.0)) throw domain_error("theta: Im(tau) must be positive");
  if (!is_finite(z)) throw domain_error("theta: non-finite z");
  const double a = c.a.value(), b = c.b.value();
  const double y = tau.imag();
  const double N = std::ceil(std::sqrt(std::log(1.0 / theta_tail_tol) / (pi * y)) + std::abs(z.imag()) / y) + 2.0;
  const long long lo = static_cast<long long>(std::ceil(-N - a));
  const long long hi = static_cast<long long>(std::floor(N - a));
  const Complex zb = z + b;
  Complex sum{};
  for (long long n = lo; n <= hi; ++n) {
    const double k = static_cast<double>(n) + a;
    Complex term = std::exp(pi * I * (k * k * tau + 2.0 * k * zb));
    if constexpr (Deriv) term *= 2.0 * pi * I * k;
    sum += term;
  }
  return sum;
}

}  // namespace detail

inline Complex theta(const ThetaChar& c, Complex z, const Modulus& m) { return detail::theta_sum<false>(c, z, m.tau); }
inline Complex theta_dz(const ThetaChar& c, Complex z, const Modulus& m) { return detail::theta_sum<true>(c, z, m.tau); }

inline Complex quasi_period_factor(const ThetaChar& c, long long p, long long q, Complex z, const Modulus& m) {
  const double a = c.a.value(), b = c.b.value();
  const double P = static_cast<double>(p), Q = static_cast<double>(q);
  return e_of(Complex(a * Q - b * P) - P * P * m.tau / 2.0 - P * z);
}

inline TorusPoint zero_locus(const ThetaChar& c, const Modulus& m) {
  const double a = c.a.value(), b = c.b.value();
  return TorusPoint(m, (0.5 - a) * m.tau + (0.5 - b));
}

enum class TauMove { shift, invert };

// theta_c(z, tau) = prefactor * theta_{c2}(z2, tau2)
struct TauTransform {
  ThetaChar c2;
  Complex prefactor;
  Complex z2;
  Modulus m2;
};

inline TauTransform transform_tau(const ThetaChar& c, Complex z, const Modulus& m, TauMove which) {
  if (!(m.tau.imag() > 0.0)) throw domain_error("transform_tau: Im(tau) must be positive");
  const Rational a = c.a, b = c.b;
  if (which == TauMove::shift) {
    const Rational e = a * (Rational(1) - a) * Rational(1, 2);
    return {{a, a + b - Rational(1, 2)}, e_of(e.value()), z, Modulus::generic(m.tau - 1.0)};
  }
  const Complex s = -1.0 / m.tau;
  const Complex z2 = -z / m.tau;
  const Complex pre = e_of((a * b).value()) * std::sqrt(s / I) * e_of(z2 * z2 / (2.0 * s));
  return {{b, -a}, pre, z2, Modulus::generic(s)};
}

// both sides of one displayed identity
struct IdentitySides {
  std::string name;
  Complex lhs, rhs;
  double residual() const { return scaled_diff(lhs, rhs); }
};

inline std::vector<Residual> residuals_of(const std::vector<IdentitySides>& v) {
  std::vector<Residual> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back({s.name, s.residual()});
  return out;
}

struct ThetaQuad {
  Complex t00, t01, t10, t11;
};

inline ThetaQuad theta_quad(Complex z, const Modulus& m) {
  return {theta(TH00, z, m), theta(TH01, z, m), theta(TH10, z, m), theta(TH11, z, m)};
}

inline std::vector<IdentitySides> addition_identities(Complex z1, Complex z2, const Modulus& m) {
  const ThetaQuad p = theta_quad(z1 + z2, m), q = theta_quad(z1 - z2, m);
  const ThetaQuad x = theta_quad(z1, m), y = theta_quad(z2, m), o = theta_quad(0.0, m);
  auto sq = [](Complex v) { return v * v; };
  const Complex x00 = sq(x.t00), x01 = sq(x.t01), x10 = sq(x.t10), x11 = sq(x.t11);
  const Complex y00 = sq(y.t00), y01 = sq(y.t01), y10 = sq(y.t10), y11 = sq(y.t11);
  const Complex l00 = p.t00 * q.t00 * sq(o.t00);
  const Complex l01 = p.t01 * q.t01 * sq(o.t01);
  const Complex l10 = p.t10 * q.t10 * sq(o.t10);
  const Complex l11 = p.t11 * q.t11 * sq(o.t00);
  return {
      {"add_00_a", l00, x00 * y00 + x11 * y11},
      {"add_00_b", l00, x01 * y01 + x10 * y10},
      {"add_01_a", l01, x00 * y00 - x10 * y10},
      {"add_01_b", l01, x01 * y01 - x11 * y11},
      {"add_10_a", l10, x00 * y00 - x01 * y01},
      {"add_10_b", l10, x10 * y10 - x11 * y11},
      {"add_11_a", l11, x11 * y00 - x00 * y11},
      {"add_11_b", l11, x01 * y10 - x10 * y01},
      {"jacobi_identity", sq(sq(o.t00)), sq(sq(o.t01)) + sq(sq(o.t10))},
  };
}

inline std::vector<Residual> addition_check(Complex z1, Complex z2, const Modulus& m) {
  return residuals_of(addition_identities(z1, z2, m));
}

inline IdentitySides jacobi_derivative(const Modulus& m) {
  const ThetaQuad o = theta_quad(0.0, m);
  return {"jacobi_derivative", theta_dz(TH11, 0.0, m), -pi * o.t00 * o.t01 * o.t10};
}

// theta_{a,b}(i z, i) = prefactor * theta_{c2}(z, i)
struct MultipleLaw {
  Complex prefactor;
  ThetaChar c2;
};

inline MultipleLaw i_multiple(const ThetaChar& c, Complex z) {
  return {e_of((c.a * c.b).value()) * std::exp(pi * z * z), {-c.b, c.a}};
}

inline std::vector<IdentitySides> one_plus_i_multiple(Complex z) {
  const Modulus m = Modulus::i();
  const Complex w = (1.0 + I) * z;
  const ThetaQuad t = theta_quad(z, m), o = theta_quad(0.0, m), s = theta_quad(w, m);
  const Complex g = std::exp(pi * I * (1.0 + I) * z * z);
  const Complex den = o.t01 * o.t10;
  return {
      {"one_plus_i_00", s.t00, o.t00 * t.t01 * t.t10 / (g * den)},
      {"one_plus_i_11", s.t11, e_of(0.125) * o.t00 * t.t00 * t.t11 / (g * den)},
      {"one_plus_i_01x10", s.t01 * s.t10,
       (ipow(t.t00, 4) - t.t01 * t.t01 * t.t10 * t.t10) / (g * g * den)},
  };
}

enum class OmegaPower { omega, omega_sq };

// theta_{a,b}(w z, zeta) for w = omega or omega^2
inline MultipleLaw omega_multiple(const ThetaChar& c, Complex z, OmegaPower power) {
  const Rational a = c.a, b = c.b, h(1, 2);
  if (power == OmegaPower::omega) {
    const Rational e = a * a * h + a * b - Rational(1, 24);
    return {e_of(e.value()) * e_of(z * z / (2.0 * ZETA)), {-a - b - h, a}};
  }
  const Rational e = a * b + (b * b + b) * h + Rational(1, 24);
  return {e_of(e.value()) * e_of(z * z / (2.0 * OMEGA)), {b, -a - b - h}};
}

// the eight specialized lines, with the displayed constants
inline std::vector<IdentitySides> omega_lines(Complex z) {
  const Modulus m = Modulus::zeta();
  const Complex w = OMEGA * z, w2 = OMEGA * OMEGA * z;
  const Complex g1 = e_of(z * z / (2.0 * ZETA)), g2 = e_of(z * z / (2.0 * OMEGA));
  const ThetaQuad t = theta_quad(z, m), a = theta_quad(w, m), b = theta_quad(w2, m);
  return {
      {"omega_00", a.t00, e_of(-1.0 / 24) * g1 * t.t10},
      {"omega_01", a.t01, e_of(-1.0 / 24) * g1 * t.t00},
      {"omega_10", a.t10, e_of(1.0 / 12) * g1 * t.t01},
      {"omega_11", a.t11, OMEGA * g1 * t.t11},
      {"omega2_00", b.t00, e_of(1.0 / 24) * g2 * t.t01},
      {"omega2_01", b.t01, e_of(-1.0 / 12) * g2 * t.t10},
      {"omega2_10", b.t10, e_of(1.0 / 24) * g2 * t.t00},
      {"omega2_11", b.t11, OMEGA * OMEGA * g2 * t.t11},
  };
}

inline std::vector<IdentitySides> one_plus_zeta_multiple(Complex z) {
  const Modulus m = Modulus::zeta();
  const ThetaQuad t = theta_quad(z, m), o = theta_quad(0.0, m), s = theta_quad((1.0 + ZETA) * z, m);
  const Complex g = e_of((OMEGA * OMEGA + OMEGA / 2.0) * z * z);
  const Complex e8 = e_of(0.125);
  auto sq = [](Complex v) { return v * v; };
  return {
      {"one_plus_zeta_00", s.t00, e8 * g / sq(o.t00) * t.t10 * (sq(t.t00) - I * sq(t.t01))},
      {"one_plus_zeta_01", s.t01, e8 * g / sq(o.t01) * t.t00 * (sq(t.t01) - sq(t.t10))},
      {"one_plus_zeta_10", s.t10, g / sq(o.t10) * t.t01 * (sq(t.t00) + I * sq(t.t10))},
      {"one_plus_zeta_11", s.t11, g / sq(o.t00) * t.t11 * (sq(t.t00) + I * sq(t.t01))},
  };
}

// sqrt2 theta01^2 = theta00^2 + theta11^2 and sqrt2 theta10^2 = theta00^2 - theta11^2 at tau = i
inline std::vector<IdentitySides> tau_i_relations(Complex z) {
  const ThetaQuad t = theta_quad(z, Modulus::i());
  const double r2 = std::sqrt(2.0);
  return {
      {"tau_i_01", r2 * t.t01 * t.t01, t.t00 * t.t00 + t.t11 * t.t11},
      {"tau_i_10", r2 * t.t10 * t.t10, t.t00 * t.t00 - t.t11 * t.t11},
  };
}

// theta01^2 and theta10^2 as combinations of theta00^2 and theta11^2 at tau = zeta
inline std::vector<IdentitySides> zeta_linear_combination(Complex z) {
  const ThetaQuad t = theta_quad(z, Modulus::zeta());
  const Complex a = t.t00 * t.t00, d = t.t11 * t.t11;
  return {
      {"zeta_lin_01", t.t01 * t.t01, e_of(-1.0 / 12) * (a - OMEGA * OMEGA * d)},
      {"zeta_lin_10", t.t10 * t.t10, e_of(1.0 / 12) * (a + OMEGA * d)},
  };
}

inline std::vector<IdentitySides> hi_theta_relations() {
  const Modulus m = Modulus::zeta();
  const Complex t00 = theta(TH00, 0.0, m);
  const Complex t33 = theta(ch(1, 3, 1, 3), 0.0, m);
  const double c2 = std::cbrt(2.0);
  return {
      {"hi_theta_01", theta(TH01, 0.0, m), e_of(-1.0 / 24) * t00},
      {"hi_theta_10", theta(TH10, 0.0, m), e_of(1.0 / 24) * t00},
      {"hi_theta_5/6,1/3", theta(ch(5, 6, 1, 3), 0.0, m), e_of(-1.0 / 8) * t33},
      {"hi_theta_1/3,5/6", theta(ch(1, 3, 5, 6), 0.0, m), e_of(-17.0 / 24) * t33},
      {"hi_theta_1/3,1/3", t33, e_of(1.0 / 18) / c2 * t00},
      {"hi_theta_1/6,1/6", theta(ch(1, 6, 1, 6), 0.0, m), e_of(1.0 / 72) * std::pow(3.0, 0.25) / c2 * t00},
  };
}

struct ThetaConstant {
  ThetaChar c;
  Complex value;
};

// closed forms of theta_{a,b}(0, tau) for tau = i and tau = zeta
inline std::vector<ThetaConstant> theta_constants(const Modulus& m) {
  if (m.tag == ModulusTag::tau_i) {
    const double g = gamma_real(0.25);
    const double c00 = g / std::pow(4.0 * pi * pi * pi, 0.25);
    const double c01 = g / std::pow(2.0 * pi, 0.75);
    return {{TH00, c00}, {TH01, c01}, {TH10, c01}};
  }
  if (m.tag != ModulusTag::tau_zeta) throw domain_error("theta_constants: only tau = i or tau = zeta are tabulated");
  const double g32 = std::pow(gamma_real(1.0 / 3.0), 1.5);
  const double k4 = std::pow(3.0, 0.125) / (std::cbrt(4.0) * pi) * g32;
  const double k2 = std::pow(3.0, 0.125) / (2.0 * pi) * g32;
  const double k27 = std::pow(27.0, 0.125) / (2.0 * pi) * g32;
  return {
      {TH00, e_of(1.0 / 48) * k4},
      {TH01, e_of(-1.0 / 48) * k4},
      {TH10, e_of(1.0 / 16) * k4},
      {ch(1, 3, 1, 3), e_of(11.0 / 144) * k2},
      {ch(1, 6, 1, 6), e_of(5.0 / 144) * k27},
      {ch(5, 6, 1, 3), e_of(-7.0 / 144) * k2},
      {ch(1, 3, 5, 6), e_of(53.0 / 144) * k2},
  };
}

}  // namespace lemnis

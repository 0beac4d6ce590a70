#include <gtest/gtest.h>

#include "lemnis/report.hpp"
#include "lemnis/theta.hpp"

using namespace lemnis;

namespace {

constexpr int N = 100;

ThetaChar random_char(SplitMix64& r) {
  static constexpr int dens[] = {1, 2, 3, 4, 6};
  auto pick = [&] {
    const int q = dens[r.integer(0, 4)];
    return Rational(r.integer(-q, 2 * q), q);
  };
  const Rational a = pick();
  return {a, pick()};
}

Complex cell_point(SplitMix64& r, Complex tau) { return r.uniform(-0.5, 0.5) * tau + r.uniform(-0.5, 0.5); }

void expect_all(const std::vector<IdentitySides>& v, double tol) {
  for (const auto& s : v) EXPECT_LT(s.residual(), tol) << s.name;
}

}  // namespace

TEST(Rational, ArithmeticAndParsing) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("5/6").str(), "5/6");
  EXPECT_THROW(parse_rational("1/0"), domain_error);
  EXPECT_THROW(parse_rational("x"), domain_error);
  EXPECT_THROW(parse_rational("1/2junk"), domain_error);
}

TEST(Theta, Oracles) {
  EXPECT_NEAR(std::abs(theta(TH00, 0.0, Modulus::i()) - 1.0864348112133080146), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(theta(TH01, 0.0, Modulus::i()) - 0.91357913815611682141), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(theta(TH00, 0.0, Modulus::zeta()) - Complex(1.0000375570666326851, 0.13165744206902010272)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(theta(ch(1, 3, 1, 6), Complex(0.2, 0.1), Modulus::generic(Complex(0.3, 1.1))) -
                       Complex(0.49865938475707987576, 0.12794667629404507379)),
              0.0, 1e-15);
  EXPECT_NEAR(std::abs(theta_dz(TH11, 0.0, Modulus::i()) - (-2.8486946039877873161)), 0.0, 1e-14);
}

TEST(Theta, OddCharacteristicVanishesAtZero) {
  EXPECT_LT(std::abs(theta(TH11, 0.0, Modulus::i())), 1e-15);
  EXPECT_LT(std::abs(theta(TH11, 0.0, Modulus::zeta())), 1e-15);
}

TEST(Theta, ZeroLocus) {
  for (const Modulus m : {Modulus::i(), Modulus::zeta()})
    for (const ThetaChar& c : {TH00, TH01, TH10, TH11, ch(1, 3, 1, 6)})
      EXPECT_LT(std::abs(theta(c, zero_locus(c, m).z, m)), 1e-14);
}

TEST(Theta, RejectsBadInput) {
  EXPECT_THROW(theta(TH00, Complex(INFINITY, 0.0), Modulus::i()), domain_error);
  Modulus bad{ModulusTag::generic, Complex(0.0, -1.0)};
  EXPECT_THROW(theta(TH00, 0.0, bad), domain_error);
}

TEST(Theta, ConstantsAtI) {
  const auto ks = theta_constants(Modulus::i());
  ASSERT_EQ(ks.size(), 3u);
  const double g = 3.6256099082219083119;
  EXPECT_NEAR(ks[0].value.real(), g / std::pow(4 * pi * pi * pi, 0.25), 1e-15);
  for (const auto& k : ks) EXPECT_LT(scaled_diff(theta(k.c, 0.0, Modulus::i()), k.value), 1e-11);
}

TEST(Theta, ConstantsAtZeta) {
  const auto ks = theta_constants(Modulus::zeta());
  ASSERT_EQ(ks.size(), 7u);
  for (const auto& k : ks)
    EXPECT_LT(scaled_diff(theta(k.c, 0.0, Modulus::zeta()), k.value), 1e-10) << k.c.a.str() << "," << k.c.b.str();
  EXPECT_THROW(theta_constants(Modulus::generic(Complex(0.1, 2.0))), domain_error);
}

TEST(ThetaProperty, QuasiPeriodicity) {
  SplitMix64 r(1);
  for (const Modulus m : {Modulus::i(), Modulus::zeta(), Modulus::generic(Complex(-0.2, 0.9))})
    for (int k = 0; k < N; ++k) {
      const ThetaChar c = random_char(r);
      const Complex z = cell_point(r, m.tau);
      const long long p = r.integer(-2, 2), q = r.integer(-2, 2);
      const Complex lhs = theta(c, z + static_cast<double>(p) * m.tau + static_cast<double>(q), m);
      EXPECT_LT(scaled_diff(lhs, quasi_period_factor(c, p, q, z, m) * theta(c, z, m)), 1e-10);
    }
}

TEST(ThetaProperty, ParityAndCharacteristicShift) {
  SplitMix64 r(2);
  for (const Modulus m : {Modulus::i(), Modulus::zeta()})
    for (int k = 0; k < N; ++k) {
      const ThetaChar c = random_char(r);
      const Complex z = cell_point(r, m.tau);
      EXPECT_LT(scaled_diff(theta(c, -z, m), theta({-c.a, -c.b}, z, m)), 1e-10);
      const ReducedChar rc = reduce_char(c);
      EXPECT_LT(scaled_diff(theta(c, z, m), rc.factor * theta(rc.reduced, z, m)), 1e-10);
    }
}

TEST(ThetaProperty, ModularMoves) {
  SplitMix64 r(3);
  for (const Modulus m : {Modulus::i(), Modulus::zeta(), Modulus::generic(Complex(0.4, 0.8))})
    for (int k = 0; k < N; ++k) {
      const ThetaChar c = random_char(r);
      const Complex z = cell_point(r, m.tau);
      for (TauMove mv : {TauMove::shift, TauMove::invert}) {
        const TauTransform t = transform_tau(c, z, m, mv);
        EXPECT_LT(scaled_diff(theta(c, z, m), t.prefactor * theta(t.c2, t.z2, t.m2)), 1e-10);
      }
    }
}

TEST(ThetaProperty, AdditionFormulasAndJacobi) {
  SplitMix64 r(4);
  for (const Modulus m : {Modulus::i(), Modulus::zeta()}) {
    EXPECT_LT(jacobi_derivative(m).residual(), 1e-12);
    for (int k = 0; k < N; ++k) expect_all(addition_identities(cell_point(r, m.tau), cell_point(r, m.tau), m), 1e-10);
  }
}

TEST(ThetaProperty, IMultiple) {
  SplitMix64 r(5);
  const Modulus m = Modulus::i();
  for (int k = 0; k < N; ++k) {
    const ThetaChar c = random_char(r);
    const Complex z = cell_point(r, m.tau);
    const MultipleLaw law = i_multiple(c, z);
    EXPECT_LT(scaled_diff(theta(c, I * z, m), law.prefactor * theta(law.c2, z, m)), 1e-10);
  }
}

TEST(ThetaProperty, IMultipleOddCharacteristicUsesZ) {
  // the right side is evaluated at z, not at iz
  const Complex z(0.17, -0.23);
  const Modulus m = Modulus::i();
  const MultipleLaw law = i_multiple(TH11, z);
  EXPECT_LT(scaled_diff(theta(TH11, I * z, m), law.prefactor * theta(law.c2, z, m)), 1e-13);
  EXPECT_GT(scaled_diff(theta(TH11, I * z, m), law.prefactor * theta(law.c2, I * z, m)), 1e-3);
}

TEST(ThetaProperty, OnePlusIMultiple) {
  SplitMix64 r(6);
  for (int k = 0; k < N; ++k) expect_all(one_plus_i_multiple(cell_point(r, I)), 1e-10);
}

TEST(ThetaProperty, TauIRelations) {
  SplitMix64 r(7);
  for (int k = 0; k < N; ++k) expect_all(tau_i_relations(cell_point(r, I)), 1e-10);
}

TEST(ThetaProperty, OmegaMultiples) {
  SplitMix64 r(8);
  const Modulus m = Modulus::zeta();
  for (int k = 0; k < N; ++k) {
    const ThetaChar c = random_char(r);
    const Complex z = cell_point(r, m.tau);
    for (OmegaPower pw : {OmegaPower::omega, OmegaPower::omega_sq}) {
      const MultipleLaw law = omega_multiple(c, z, pw);
      const Complex w = pw == OmegaPower::omega ? OMEGA : OMEGA * OMEGA;
      EXPECT_LT(scaled_diff(theta(c, w * z, m), law.prefactor * theta(law.c2, z, m)), 1e-10);
    }
    expect_all(omega_lines(z), 1e-10);
  }
}

TEST(ThetaProperty, OnePlusZetaMultiple) {
  SplitMix64 r(9);
  for (int k = 0; k < N; ++k) expect_all(one_plus_zeta_multiple(cell_point(r, ZETA)), 1e-10);
}

TEST(ThetaProperty, ZetaLinearCombination) {
  SplitMix64 r(10);
  for (int k = 0; k < N; ++k) expect_all(zeta_linear_combination(cell_point(r, ZETA)), 1e-10);
}

TEST(ThetaProperty, HiThetaRelations) { expect_all(hi_theta_relations(), 1e-12); }

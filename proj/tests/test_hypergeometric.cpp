#include <gtest/gtest.h>

#include "lemnis/hypergeometric.hpp"
#include "lemnis/report.hpp"

using namespace lemnis;

namespace {
const GaussParams QUARTIC_F(0.25, 0.5, 1.25);
const GaussParams SEXTIC_F(1.0 / 6.0, 0.5, 7.0 / 6.0);

// F(0.1, 0.2, 1.5; z) on the unit circle
constexpr double BOUNDARY_I_RE = 0.99709336845974489947, BOUNDARY_I_IM = 0.012151041576302377072;
constexpr double BOUNDARY_05_RE = 1.0123923940579187816, BOUNDARY_05_IM = 0.011578637327461156491;
constexpr double BOUNDARY_M1 = 0.98916994353685897302;
}  // namespace

TEST(Pochhammer, Values) {
  EXPECT_DOUBLE_EQ(pochhammer(0.3, 0), 1.0);
  EXPECT_DOUBLE_EQ(pochhammer(1.0, 4), 24.0);
  EXPECT_DOUBLE_EQ(pochhammer(0.5, 2), 0.75);
  EXPECT_THROW(pochhammer(1.0, -1), domain_error);
}

TEST(GaussParams, RejectsNonpositiveIntegerGamma) {
  EXPECT_THROW(GaussParams(0.5, 0.5, 0.0), domain_error);
  EXPECT_THROW(GaussParams(0.5, 0.5, -2.0), domain_error);
  EXPECT_NO_THROW(GaussParams(0.5, 0.5, -0.5));
}

TEST(Gauss2F1, Oracles) {
  EXPECT_EQ(gauss_2f1(GaussParams(0.3, 0.4, 0.9), 0.0), Complex(1.0, 0.0));
  EXPECT_NEAR(gauss_2f1(GaussParams(1, 1, 2), 0.5).real(), 1.3862943611198906, 1e-15);
  EXPECT_NEAR(std::abs(gauss_2f1(GaussParams(0.3, 0.7, 1.4), Complex(0.5, 0.3)) -
                       Complex(1.0815003251425957795, 0.076962271288110422121)),
              0.0, 1e-15);
  EXPECT_NEAR(gauss_2f1(QUARTIC_F, 0.9).real(), 1.1793998373038455428, 1e-14);
  EXPECT_NEAR(gauss_2f1(SEXTIC_F, -0.7).real(), 0.96024693045773655635, 1e-15);
  EXPECT_NEAR(gauss_2f1(GaussParams(-3, 2, 1.5), 0.4).real(), 0.0509714285714285714, 1e-15);
}

TEST(Gauss2F1, NearIntegerGapCloseToOne) {
  // c - a - b = 0.02: the connection formula is avoided and the series still converges
  EXPECT_NEAR(std::abs(gauss_2f1(GaussParams(0.2, 0.3, 0.52), Complex(0.93, 0.1)) -
                       Complex(1.2466609024095780971, 0.11317949619067256467)),
              0.0, 1e-12);
}

TEST(Gauss2F1, KummerAtOne) {
  EXPECT_NEAR(gauss_2f1(QUARTIC_F, 1.0).real(), 1.3110287771460599052, 1e-14);
  EXPECT_NEAR(gauss_kummer_value(QUARTIC_F), 1.3110287771460599052, 1e-14);
  EXPECT_NEAR(gauss_kummer_value(SEXTIC_F), 1.2143253239437908059, 1e-14);
  EXPECT_DOUBLE_EQ(gauss_kummer_value(GaussParams(0, 0, 1)), 1.0);
  EXPECT_THROW(gauss_kummer_value(GaussParams(1, 1, 1.5)), domain_error);
}

TEST(Gauss2F1, SeriesAndConnectionAgree) {
  // both routes are valid where the switch happens
  for (const Complex z : {Complex(0.85, 0.1), Complex(0.9, -0.3), Complex(0.82, 0.0)})
    for (const GaussParams& p : {QUARTIC_F, SEXTIC_F, GaussParams(0.3, 0.7, 1.4)}) {
      const Complex s = detail::series_2f1(p.alpha, p.beta, p.gamma, z);
      EXPECT_NEAR(std::abs(detail::connection_2f1(p.alpha, p.beta, p.gamma, z) - s), 0.0, 1e-13) << z;
      EXPECT_NEAR(std::abs(gauss_2f1(p, z) - s), 0.0, 1e-13);
    }
}

TEST(Gauss2F1, DomainErrors) {
  EXPECT_THROW(gauss_2f1(QUARTIC_F, 1.5), domain_error);
  EXPECT_THROW(gauss_2f1(GaussParams(1, 1, 1.5), 1.0), domain_error);
  EXPECT_THROW(gauss_2f1(GaussParams(1, 1, 1.5), Complex(0.0, 1.0)), domain_error);
  EXPECT_THROW(gauss_2f1(QUARTIC_F, Complex(NAN, 0.0)), domain_error);
}

TEST(Gauss2F1, BoundarySummation) {
  // Re(c - a - b) > 0 on |z| = 1; mpmath reference
  const GaussParams p(0.1, 0.2, 1.5);
  EXPECT_NEAR(std::abs(gauss_2f1(p, Complex(0.0, 1.0)) - Complex(BOUNDARY_I_RE, BOUNDARY_I_IM)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(gauss_2f1(p, std::polar(1.0, 0.5)) - Complex(BOUNDARY_05_RE, BOUNDARY_05_IM)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(gauss_2f1(p, -1.0) - BOUNDARY_M1), 0.0, 1e-13);
}

TEST(Gauss2F1, ParameterSymmetry) {
  SplitMix64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const double a = rng.uniform(-1, 2), b = rng.uniform(-1, 2), c = rng.uniform(0.3, 3);
    const Complex z = std::polar(rng.uniform(0, 0.95), rng.uniform(-pi, pi));
    EXPECT_NEAR(std::abs(gauss_2f1(GaussParams(a, b, c), z) - gauss_2f1(GaussParams(b, a, c), z)), 0.0, 1e-14);
  }
}

TEST(Gauss2F1, PfaffAgreesInsideDisk) {
  SplitMix64 rng(3);
  for (int k = 0; k < 30; ++k) {
    const Complex z(rng.uniform(-0.45, -0.01), rng.uniform(-0.3, 0.3));
    EXPECT_NEAR(std::abs(detail::gauss_2f1_pfaff(QUARTIC_F, z) - gauss_2f1(QUARTIC_F, z)), 0.0, 1e-14);
  }
}

TEST(EulerPair, AtOne) {
  const EulerPair q = euler_f1_f2(SchwarzVariant::quartic, 1.0);
  EXPECT_EQ(q.f1, Complex(0.0, 0.0));
  EXPECT_NEAR(q.f2.real(), 7.4162987092054876737, 1e-13);
  const EulerPair s = euler_f1_f2(SchwarzVariant::sextic, 1.0);
  EXPECT_NEAR(s.f2.real(), 8.4130926319527255671, 1e-13);
  EXPECT_THROW(euler_f1_f2(SchwarzVariant::quartic, -0.5), domain_error);
}

TEST(EulerPair, ModulusOfF1) {
  const double x = 0.96;
  const EulerPair q = euler_f1_f2(SchwarzVariant::quartic, x);
  const double want = std::pow(1 - x, 0.25) * gauss_2f1(GaussParams(0.25, 0.5, 1.25), 1 - x).real() / 0.25;
  EXPECT_NEAR(std::abs(q.f1), want, 1e-13);
}

TEST(SchwarzMap, SpecialValues) {
  EXPECT_EQ(schwarz_map(SchwarzVariant::quartic, 1.0), Complex(0.0, 0.0));
  EXPECT_NEAR(std::abs(schwarz_map(SchwarzVariant::quartic, 1e-8) - 0.5 * I), 0.0, 1e-2);
  EXPECT_NEAR(std::abs(schwarz_map(SchwarzVariant::sextic, 1e-8) - 0.5 * ZETA), 0.0, 1e-2);
  // the limit itself, through Gauss-Kummer
  const Complex k = 2.0 * std::sqrt(2.0) * I / beta(0.25, 0.25) * gauss_kummer_value(QUARTIC_F);
  EXPECT_NEAR(std::abs(k - 0.5 * I), 0.0, 1e-14);
  const Complex ks = 2.0 * std::sqrt(3.0) * ZETA / beta(1.0 / 3.0, 1.0 / 6.0) * gauss_kummer_value(SEXTIC_F);
  EXPECT_NEAR(std::abs(ks - 0.5 * ZETA), 0.0, 1e-14);
}

TEST(SchwarzMap, QuarticArgumentOnUnitInterval) {
  for (double x = 0.05; x < 1.0; x += 0.05)
    EXPECT_NEAR(std::arg(schwarz_map(SchwarzVariant::quartic, x)), pi / 2, 1e-10) << x;
}

TEST(SchwarzMap, MatchesEulerRatio) {
  for (double x : {0.2, 0.6, 0.95}) {
    const EulerPair q = euler_f1_f2(SchwarzVariant::quartic, x);
    EXPECT_NEAR(std::abs(schwarz_map(SchwarzVariant::quartic, x) - q.f1 / ((1.0 - I) * q.f2)), 0.0, 1e-13);
    const EulerPair s = euler_f1_f2(SchwarzVariant::sextic, x);
    EXPECT_NEAR(std::abs(schwarz_map(SchwarzVariant::sextic, x) - s.f1 / ((1.0 - ZETA * ZETA) * s.f2)), 0.0, 1e-13);
  }
}

TEST(HgfIdentities, EqHgf) {
  SplitMix64 rng(21);
  for (int k = 0; k < 50; ++k) EXPECT_LT(eq_hgf_residual(rng.uniform(0.7, 1.3)), 1e-10);
}

TEST(HgfIdentities, OnePlusZeta) {
  SplitMix64 rng(22);
  for (int k = 0; k < 50; ++k) EXPECT_LT(one_plus_z_hgf_residual(rng.uniform(0.8, 1.12)), 1e-10);
  EXPECT_LT(one_plus_z_hgf_residual(1.0), 1e-15);
}

TEST(HgfIdentities, OnePlusZetaSwitchesSheetPastNineEighths) {
  // (9 - 8x) changes sign at 9/8; the displayed identity then needs the other square root
  EXPECT_GT(one_plus_z_hgf_residual(1.19), 1e-3);
}

TEST(Gauss2F1, OdeResidualTypical) {
  // central differences with h = 1e-5 on a fixed well-conditioned point
  const GaussParams p(0.3, -0.4, 1.2);
  const Complex z(0.3, 0.2);
  const double h = 1e-5;
  const Complex f0 = gauss_2f1(p, z), fp = gauss_2f1(p, z + h), fm = gauss_2f1(p, z - h);
  const Complex d1 = (fp - fm) / (2 * h), d2 = (fp - 2.0 * f0 + fm) / (h * h);
  EXPECT_LT(std::abs(z * (1.0 - z) * d2 + (p.gamma - (p.alpha + p.beta + 1) * z) * d1 - p.alpha * p.beta * f0), 1e-6);
}

#include <gtest/gtest.h>

#include <cstdlib>

#include "lemnis/lattice.hpp"
#include "lemnis/numerics.hpp"

using namespace lemnis;

// reference values from mpmath at 30 digits (tests/oracle/gen_expected.py)
constexpr double GAMMA_QUARTER = 3.62560990822190831;
constexpr double BETA_QQ = 7.41629870920548767;
constexpr double BETA_THIRD_SIXTH = 8.41309263195272557;

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(gamma_real(0.25), GAMMA_QUARTER, 1e-14);
  EXPECT_NEAR(gamma_real(0.5), std::sqrt(pi), 1e-14);
  EXPECT_DOUBLE_EQ(gamma_real(5.0), 24.0);
  EXPECT_DOUBLE_EQ(gamma_real(1.0), 1.0);
  EXPECT_NEAR(gamma_real(1.0 / 3.0), 2.67893853470774763, 1e-14);
}

TEST(Gamma, Recurrence) {
  for (double x : {0.1, 0.37, 1.5, 2.25, 7.9}) EXPECT_NEAR(gamma_real(x + 1.0) / (x * gamma_real(x)), 1.0, 1e-13) << x;
}

TEST(Gamma, RejectsNonpositive) {
  EXPECT_THROW(gamma_real(0.0), domain_error);
  EXPECT_THROW(gamma_real(-1.5), domain_error);
}

TEST(Beta, OracleValues) {
  EXPECT_NEAR(beta(0.25, 0.25), BETA_QQ, 1e-13);
  EXPECT_NEAR(beta(1.0 / 3.0, 1.0 / 6.0), BETA_THIRD_SIXTH, 1e-13);
  EXPECT_NEAR(beta(1.0 / 6.0, 1.0 / 3.0), BETA_THIRD_SIXTH, 1e-13);
}

TEST(Beta, Symmetric) {
  for (double x : {0.2, 0.7, 1.3})
    for (double y : {0.4, 2.5}) EXPECT_NEAR(beta(x, y), beta(y, x), 1e-14);
}

TEST(EOf, QuarterValuesAreExact) {
  EXPECT_EQ(e_of(0.0), Complex(1.0, 0.0));
  EXPECT_EQ(e_of(0.25), Complex(0.0, 1.0));
  EXPECT_EQ(e_of(0.5), Complex(-1.0, 0.0));
  EXPECT_EQ(e_of(-0.25), Complex(0.0, -1.0));
  EXPECT_EQ(e_of(3.0), Complex(1.0, 0.0));
  EXPECT_EQ(e_of(1.75), Complex(0.0, -1.0));
}

TEST(EOf, SixthRoots) {
  EXPECT_NEAR(std::abs(e_of(1.0 / 6.0) - ZETA), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e_of(1.0 / 3.0) - OMEGA), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e_of(Complex(0.25, 0.0)) - I), 0.0, 1e-15);
}

TEST(Ipow, MatchesRepeatedProduct) {
  const Complex z(0.3, -1.2);
  EXPECT_EQ(ipow(z, 0), Complex(1.0, 0.0));
  EXPECT_NEAR(std::abs(ipow(z, 3) - z * z * z), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ipow(z, -2) * z * z - 1.0), 0.0, 1e-15);
  EXPECT_EQ(ipow(Complex(0.0, 0.0), 4), Complex(0.0, 0.0));
  EXPECT_EQ(ipow(I, 4), Complex(1.0, 0.0));
}

TEST(BranchRoot, WindowAroundCenter) {
  const Complex w(-8.0, 1e-300);
  const Complex r = branch_root(w, 3, 0.0);
  EXPECT_NEAR(std::abs(ipow(r, 3) - w), 0.0, 1e-13);
  EXPECT_LE(std::abs(std::arg(r)), pi / 3 + 1e-15);
  const Complex r2 = branch_root(Complex(-1.0, 0.0), 2, pi / 2);
  EXPECT_NEAR(std::abs(r2 - I), 0.0, 1e-15);
  EXPECT_EQ(branch_root(0.0, 5, 1.0), Complex(0.0, 0.0));
  EXPECT_THROW(branch_root(1.0, 0, 0.0), domain_error);
}

TEST(BranchRoot, AllRootsRecovered) {
  SCOPED_TRACE("each window center recovers the root nearest to it");
  const Complex w(2.0, 3.0);
  for (int k = 0; k < 5; ++k) {
    const double c = 2.0 * pi * k / 5 + std::arg(w) / 5;
    const Complex r = branch_root(w, 5, c);
    EXPECT_NEAR(std::remainder(std::arg(r) - c, 2.0 * pi), 0.0, 1e-12);
  }
}

TEST(BranchRoot, BoundaryDetection) {
  // the principal square root of -1 sits on the edge of the window centered at 0
  EXPECT_TRUE(on_branch_boundary(Complex(-1.0, 0.0), 2, 0.0));
  EXPECT_FALSE(on_branch_boundary(Complex(1.0, 0.0), 2, 0.0));
}

TEST(Tolerance, Validation) {
  EXPECT_THROW(Tolerance(-1.0, 0.1), domain_error);
  EXPECT_THROW(Tolerance(0.1, 1.0), domain_error);
  const Tolerance t(1e-12, 1e-9);
  EXPECT_TRUE(t.close(1.0, 1.0 + 5e-10));
  EXPECT_FALSE(t.close(1.0, 1.0 + 5e-9));
}

TEST(Tolerance, EnvironmentOverride) {
  ::setenv("LEMNIS_TOL", "1e-7", 1);
  EXPECT_DOUBLE_EQ(default_tolerance().abs_tol, 1e-7);
  ::setenv("LEMNIS_TOL", "garbage", 1);
  EXPECT_DOUBLE_EQ(default_tolerance().abs_tol, 1e-10);
  ::unsetenv("LEMNIS_TOL");
  EXPECT_DOUBLE_EQ(default_tolerance().rel_tol, 1e-10);
}

TEST(ScaledDiff, UnitFloor) {
  EXPECT_DOUBLE_EQ(scaled_diff(1e-20, 2e-20), 1e-20);
  EXPECT_DOUBLE_EQ(scaled_diff(100.0, 101.0), 1.0 / 101.0);
}

TEST(Lattice, CanonicalRepresentative) {
  const Modulus m = Modulus::zeta();
  const Complex z(0.3, 0.2);
  const TorusPoint a(m, z), b(m, z + 3.0 * m.tau - 2.0);
  EXPECT_NEAR(std::abs(a.z - b.z), 0.0, 1e-13);
  const auto [x, y] = lattice_coords(a.z, m.tau);
  EXPECT_GE(x, 0.0);
  EXPECT_LT(x, 1.0);
  EXPECT_GE(y, 0.0);
  EXPECT_LT(y, 1.0);
}

TEST(Lattice, FoldsNearOne) {
  const TorusPoint p(Modulus::i(), Complex(1.0 - 1e-15, 0.0));
  EXPECT_NEAR(std::abs(p.z), 0.0, 1e-14);
}

TEST(Lattice, Distances) {
  const Complex tau = I;
  EXPECT_NEAR(lattice_distance(Complex(2.1, -3.05), tau), std::hypot(0.1, 0.05), 1e-14);
  const auto [p, q] = nearest_lattice_point(Complex(2.1, -3.05), tau);
  EXPECT_EQ(p, -3);
  EXPECT_EQ(q, 2);
  EXPECT_NEAR(torus_distance(0.5 * I, 0.5 * I + 7.0, tau), 0.0, 1e-14);
}

TEST(Modulus, GenericNeedsUpperHalfPlane) {
  EXPECT_THROW(Modulus::generic(Complex(0.3, -0.1)), domain_error);
  EXPECT_NO_THROW(Modulus::generic(Complex(0.3, 0.1)));
}

TEST(TorusPoint, RejectsNonFinite) {
  EXPECT_THROW(TorusPoint(Modulus::i(), Complex(NAN, 0.0)), domain_error);
}

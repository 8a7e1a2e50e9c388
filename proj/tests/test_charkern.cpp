#include <gtest/gtest.h>

#include <cmath>

#include "shocklayer/acceptance.hpp"
#include "shocklayer/charkern.hpp"
#include "shocklayer/errors.hpp"

using namespace sl;

TEST(CharKern, AnglesAndSlopesAgree) {
  const GasModel g = make_gas(2.0);
  const FlowState s{0.8, 0.15};
  const CharAngles a = char_angles(s, g);
  EXPECT_NEAR(std::tan(a.alpha), a.lambda_plus, 1e-12);
  EXPECT_NEAR(std::tan(a.beta), a.lambda_minus, 1e-12);
  EXPECT_NEAR(std::sin(a.omega), std::sqrt(g.c2_of_q2(s.q2())) / s.q(), 1e-14);
  EXPECT_GT(a.lambda_plus, a.lambda_minus);
}

TEST(CharKern, SubsonicRejected) {
  const GasModel g = make_gas(2.0);
  EXPECT_THROW(char_angles(FlowState{0.3, 0.0}, g), Error);
  EXPECT_THROW(char_angles(FlowState{1.2, 0.0}, g), Error);
}

// Hand 2x2 case: c through Bernoulli, projected on the Mach directions.
TEST(CharKern, DerivativesFromGradient) {
  const GasModel g = make_gas(1.4);
  const FlowState s{0.9, 0.0};
  const double ux = 0.3, uy = -0.2, vx = 0.1, vy = 0.5;
  const CharDerivs d = char_derivs_from_gradient(s, ux, uy, vx, vy, g);
  const double c = std::sqrt(0.2 * (1.0 - 0.81));
  const double w = std::asin(c / 0.9);
  const double cx = -0.4 / (2 * c) * 0.9 * ux, cy = -0.4 / (2 * c) * 0.9 * uy;
  EXPECT_NEAR(d.dplus_c, std::cos(w) * cx + std::sin(w) * cy, 1e-13);
  EXPECT_NEAR(d.dminus_c, std::cos(w) * cx - std::sin(w) * cy, 1e-13);
}

TEST(CharKern, CompatibilityHoldsAlongSimpleWaveCharacteristic) {
  // a C- centred wave keeps its C+ invariant, so C+ compatibility holds between any two states
  const GasModel g = make_gas(2.0);
  const oracle::SimpleWave w{g, Family::Minus, 0.0};
  const FlowState a = w(1.0, 0.3), b = w(1.0, 0.31);
  EXPECT_LT(std::abs(compat_residual(a, b, Family::Plus, g)), 1e-6);
}

TEST(CharKern, SimpleWaveRaysAreCharacteristics) {
  const GasModel g = make_gas(2.0);
  for (Family f : {Family::Minus, Family::Plus}) {
    const oracle::SimpleWave w{g, f, f == Family::Minus ? 0.0 : 0.6};
    for (double phi : {0.3, 0.45}) {
      const FlowState s = w(std::cos(phi), std::sin(phi));
      const CharAngles a = char_angles(s, g);
      EXPECT_NEAR(f == Family::Minus ? a.beta : a.alpha, phi, 1e-9);
    }
  }
}

// The exact field satisfies the decomposition: the residual falls as h^2.
TEST(CharKern, DecompositionResidualOnSimpleWave) {
  const GasModel g = make_gas(2.0);
  const oracle::SimpleWave w{g, Family::Minus, 0.0};
  const StateField f = [&](double x, double y) { return w(x, y); };
  const double phi = 0.35;
  const auto r1 = decomposition_residual(f, std::cos(phi), std::sin(phi), 0.02, g);
  const auto r2 = decomposition_residual(f, std::cos(phi), std::sin(phi), 0.01, g);
  EXPECT_NEAR(r1.r_minus, 0.0, 1e-12);  // the C+ invariant is uniform
  EXPECT_GT(std::abs(r1.r_plus) / std::abs(r2.r_plus), 3.0);
  EXPECT_LT(std::abs(r2.r_plus), 1e-4);
}

TEST(CharKern, RiemannDirectionAgainstFlowTangent) {
  const GasModel g = make_gas(2.0);
  const FlowState s{0.8, 0.1};
  const auto d = riemann_direction_checks(s, g);
  // the C+ normal meets the flow-normal at the Mach angle
  EXPECT_NEAR(d.dot_tangent, std::cos(char_angles(s, g).omega), 1e-14);
  EXPECT_TRUE(std::isnan(d.dot_polar_normal));
  const auto e = riemann_direction_checks(FlowState{0.8, 0.1}, g, 0.04275);
  EXPECT_FALSE(std::isnan(e.dot_polar_normal));
}

#include <gtest/gtest.h>

#include <cmath>

#include "shocklayer/limitsol.hpp"
#include "shocklayer/polar.hpp"
#include "shocklayer/wedge.hpp"

using namespace sl;

const double kTan10 = std::tan(10.0 * M_PI / 180.0);

TEST(Wedge, StraightArcLengthIsSecant) {
  const WedgeProfile w = WedgeProfile::straight(kTan10);
  for (double x : {0.0, 0.5, 7.0, 300.0}) EXPECT_NEAR(w.xi(x), x * std::sqrt(1.0 + kTan10 * kTan10), 1e-10 * (1 + x));
}

TEST(Wedge, ArcLengthMatchesQuadrature) {
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  // Simpson on sqrt(1 + f'^2), independent of the table inside the profile
  const double X = 40.0;
  const int n = 40000;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = X * i / n;
    const double k = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    s += k * std::sqrt(1.0 + w.fp(x) * w.fp(x));
  }
  s *= X / n / 3.0;
  EXPECT_NEAR(w.xi(X), s, 1e-8);
}

TEST(Wedge, DerivativesMatchDifferences) {
  for (const WedgeProfile& w : {WedgeProfile::power_decay_bend(0.3, 0.1, 1.0), WedgeProfile::oscillatory_bend(0.2, 0.05, 0.5),
                                WedgeProfile::log_bullet(kTan10)}) {
    for (double x : {0.3, 2.0, 11.0}) {
      const double h = 1e-5;
      EXPECT_NEAR(w.fp(x), (w.f(x + h) - w.f(x - h)) / (2 * h), 1e-8) << w.describe();
      EXPECT_NEAR(w.fpp(x), (w.fp(x + h) - w.fp(x - h)) / (2 * h), 1e-7) << w.describe();
    }
  }
}

TEST(Wedge, ProjectionRecoversNormalOffset) {
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  const WallPointFrame fr = eval_profile(w, 3.0);
  const double d = 0.05;
  const Point2 p{fr.x - d * std::sin(fr.tangent_angle), fr.y + d * std::cos(fr.tangent_angle)};
  const WallProjection pr = project_to_wall(w, p);
  EXPECT_NEAR(pr.eta, d, 1e-10);
  EXPECT_NEAR(pr.xi, w.xi(3.0), 1e-10);
}

TEST(Wedge, CaseClassification) {
  const GasModel g = make_gas(2.0);
  EXPECT_EQ(classify_case(WedgeProfile::power_decay_bend(0.3, 0.1, 1.0), g).kind, CaseKind::CaseA);
  EXPECT_EQ(classify_case(WedgeProfile::log_bullet(kTan10), g).kind, CaseKind::CaseB);
  // wall steeper than any attached shock allows
  EXPECT_EQ(classify_case(WedgeProfile::straight(2.0), g).kind, CaseKind::Invalid);
}

TEST(LimitSol, VacuumReflectionCoefficient) {
  EXPECT_NEAR(limit_g_at_vacuum(make_gas(2.0)), 3.0 - 2.0 * std::sqrt(2.0), 1e-12);
  const double r = std::sqrt(2.0 / 0.4);
  EXPECT_NEAR(limit_g_at_vacuum(make_gas(1.4)), (r - 1) / (r + 1), 1e-12);
}

TEST(LimitSol, StateOnLimitPolar) {
  const GasModel g = make_gas(2.0);
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  for (double x : {0.5, 5.0, 50.0}) {
    const LimitState s = limit_state(w, x, g);
    EXPECT_NEAR(s.v_s, s.u_s * w.fp(x), 1e-12);
    // on the eps = 0 polar: u (u - qbar) + v^2 = 0
    EXPECT_NEAR(s.u_s * (s.u_s - 1.0) + s.v_s * s.v_s, 0.0, 1e-12);
    EXPECT_NEAR(s.q_s, std::hypot(s.u_s, s.v_s), 1e-14);
  }
}

TEST(LimitSol, FormalDerivativesFollowWallTurning) {
  const GasModel g = make_gas(2.0);
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  // the wall bends away from the flow, so c falls along both families
  for (double x : {0.5, 3.0}) {
    const FormalDerivatives d = formal_derivatives(w, x, g);
    EXPECT_LT(d.dplus_c, 0.0);
    EXPECT_LT(d.dminus_c, 0.0);
  }
}

#include <gtest/gtest.h>

#include <cmath>

#include "shocklayer/acceptance.hpp"
#include "shocklayer/diag.hpp"
#include "shocklayer/moc.hpp"
#include "shocklayer/netfield.hpp"
#include "shocklayer/polar.hpp"

using namespace sl;

namespace {

const double kTan10 = std::tan(10.0 * M_PI / 180.0);

RunConfig base(const WedgeProfile& w, double x_max, int n = 20) {
  RunConfig c;
  c.wedge = w;
  c.x_max = x_max;
  c.n_across = n;
  return c;
}

}  // namespace

TEST(Moc, StraightWedgeKeepsUniformState) {
  RunConfig cfg = base(WedgeProfile::straight(kTan10), 1e9);
  cfg.max_lines = 60;
  const MarchResult r = march(cfg);
  ASSERT_FALSE(r.has_error) << r.error_message;
  FlowState U0;
  ASSERT_TRUE(oracle::ray_state(std::atan(kTan10), cfg.epsilon, cfg.gas, U0));
  for (const auto& l : r.net.lines)
    for (const auto& p : l.points) {
      EXPECT_NEAR(p.state.u, U0.u, 1e-10);
      EXPECT_NEAR(p.state.v, U0.v, 1e-10);
    }
}

TEST(Moc, CurvedRunSatisfiesBoundaryConditions) {
  const RunConfig cfg = base(WedgeProfile::log_bullet(kTan10), 3.0);
  const MarchResult r = march(cfg);
  ASSERT_TRUE(r.complete) << r.error_message;
  // the seed line carries the tip's straight-wedge state
  for (std::size_t k = 1; k < r.net.lines.size(); ++k) {
    const NetPoint& w = r.net.lines[k].points.front();
    EXPECT_NEAR(w.state.v, w.state.u * cfg.wedge.fp(w.x), 1e-11);
    EXPECT_NEAR(w.y, cfg.wedge.f(w.x), 1e-12);
  }
  for (const auto& n : r.shock.nodes) EXPECT_LT(std::abs(polar_residual(n.state, r.fs, cfg.gas).G), 1e-11);
  const NetAudit a = audit_net(r, cfg, default_window(cfg));
  EXPECT_LT(a.mass_rel_err, 0.02);
  EXPECT_GT(a.entropy_min, 0.0);
  EXPECT_TRUE(a.lambda_order);
  EXPECT_TRUE(a.eta_increasing);
}

TEST(Moc, InvalidConfigRejected) {
  RunConfig cfg = base(WedgeProfile::log_bullet(kTan10), 3.0);
  cfg.n_across = 1;
  EXPECT_THROW(validate_run_config(cfg), Error);
}

// A quadratic field is reproduced exactly by the local quadratic model.
TEST(NetField, QuadraticFieldExact) {
  auto fu = [](double x, double y) { return 0.8 + 0.01 * x - 0.02 * y + 0.003 * x * x + 0.004 * x * y - 0.001 * y * y; };
  auto fv = [](double x, double y) { return 0.1 - 0.01 * x + 0.03 * y + 0.002 * x * x - 0.001 * x * y + 0.002 * y * y; };
  CharNet net;
  for (int i = 0; i < 5; ++i) {
    DataLine l;
    for (int j = 0; j < 6; ++j) {
      NetPoint p;
      p.x = 1.0 + 0.1 * i + 0.013 * j;
      p.y = 0.05 * j + 0.01 * i;
      p.state = FlowState{fu(p.x, p.y), fv(p.x, p.y)};
      p.line_index = i;
      p.point_index = j;
      l.points.push_back(p);
    }
    net.lines.push_back(l);
  }
  const NetField field(net, make_gas(2.0));
  for (auto [li, pj] : {std::pair{2, 3}, std::pair{0, 0}, std::pair{4, 5}}) {
    const LocalFit f = field.fit(li, pj);
    const NetPoint& p = net.lines[li].points[pj];
    double ux, uy, vx, vy;
    f.gradient(p.x, p.y, ux, uy, vx, vy);
    EXPECT_NEAR(ux, 0.01 + 0.006 * p.x + 0.004 * p.y, 1e-10);
    EXPECT_NEAR(uy, -0.02 + 0.004 * p.x - 0.002 * p.y, 1e-10);
    EXPECT_NEAR(vx, -0.01 + 0.004 * p.x - 0.001 * p.y, 1e-10);
    EXPECT_NEAR(vy, 0.03 - 0.001 * p.x + 0.004 * p.y, 1e-10);
    const FlowState e = f.eval(p.x + 0.02, p.y - 0.01);
    EXPECT_NEAR(e.u, fu(p.x + 0.02, p.y - 0.01), 1e-12);
  }
}

TEST(Diag, RichardsonWithKnownGauge) {
  std::vector<double> xi, val;
  for (int i = 1; i <= 4000; ++i) {
    const double x = 0.1 * i;
    xi.push_back(x);
    val.push_back(2.5 + 0.7 / std::sqrt(x));
  }
  const TailEstimate t = tail_extrapolate(xi, val, [](double x) { return 1.0 / std::sqrt(x); });
  EXPECT_TRUE(t.gauged);
  EXPECT_NEAR(t.value, 2.5, 1e-6);
}

TEST(Diag, AitkenOnGeometricTail) {
  std::vector<double> xi, val;
  for (int i = 1; i <= 4000; ++i) {
    const double x = 0.1 * i;
    xi.push_back(x);
    val.push_back(-1.0 + 3.0 / x);
  }
  const TailEstimate t = tail_extrapolate(xi, val);
  EXPECT_FALSE(t.gauged);
  EXPECT_NEAR(t.value, -1.0, 1e-3);
  EXPECT_LT(std::abs(t.value + 1.0), std::abs(t.last + 1.0));
}

TEST(Diag, GaugeOnlyForFlatteningWedges) {
  EXPECT_FALSE(far_field_gauge(WedgeProfile::straight(kTan10)));
  EXPECT_FALSE(far_field_gauge(WedgeProfile::power_decay_bend(0.3, 0.1, 1.0)));
  EXPECT_TRUE(far_field_gauge(WedgeProfile::log_bullet(kTan10)));
  EXPECT_TRUE(far_field_gauge(WedgeProfile::power_decay_bend(0.0, 0.2, 0.5)));
}

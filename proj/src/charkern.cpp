#include "shocklayer/charkern.hpp"

#include <cmath>
#include <limits>

#include "shocklayer/errors.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

CharAngles char_angles(const FlowState& s, const GasModel& g) {
  const double q2 = s.q2();
  const double c2 = g.c2_of_q2(q2);
  if (!(c2 > 0.0)) fail(Errc::VacuumState, "state on or beyond the vacuum circle");
  if (!(q2 > c2)) fail(Errc::NotSupersonic, "state is not supersonic");
  const double q = std::sqrt(q2), c = std::sqrt(c2);
  CharAngles a;
  a.tau = std::atan2(s.v, s.u);
  a.omega = std::asin(c / q);
  a.alpha = a.tau + a.omega;
  a.beta = a.tau - a.omega;
  const double den = s.u * s.u - c2;
  if (std::abs(s.u - c) >= 1e-8 * g.qbar) {
    const double r = c * std::sqrt(q2 - c2);
    a.lambda_plus = (s.u * s.v + r) / den;
    a.lambda_minus = (s.u * s.v - r) / den;
  } else {
    a.lambda_plus = std::tan(a.alpha);
    a.lambda_minus = std::tan(a.beta);
  }
  const double t = std::tan(a.omega);
  a.Xi = g.m_const - t * t;
  return a;
}

double compat_residual(const FlowState& a, const FlowState& b, Family family, const GasModel& g) {
  const CharAngles ca = char_angles(a, g), cb = char_angles(b, g);
  const double lam = family == Family::Plus ? 0.5 * (ca.lambda_minus + cb.lambda_minus)
                                            : 0.5 * (ca.lambda_plus + cb.lambda_plus);
  return (b.u - a.u) + lam * (b.v - a.v);
}

namespace {

double sound_speed(const FlowState& s, const GasModel& g) {
  const double c2 = g.c2_of_q2(s.q2());
  if (!(c2 > 0.0)) fail(Errc::VacuumState, "field sample at vacuum");
  return std::sqrt(c2);
}

// derivative of c along the C+ (plus=true) or C- direction taken at (x, y)
double dir_deriv_c(const StateField& field, double x, double y, double h, bool plus, const GasModel& g) {
  const CharAngles a = char_angles(field(x, y), g);
  const double th = plus ? a.alpha : a.beta;
  const double ex = std::cos(th), ey = std::sin(th);
  const double cp = sound_speed(field(x + h * ex, y + h * ey), g);
  const double cm = sound_speed(field(x - h * ex, y - h * ey), g);
  return (cp - cm) / (2.0 * h);
}

}  // namespace

DecompositionResidual decomposition_residual(const StateField& field, double px, double py, double h,
                                             const GasModel& g) {
  if (!(h > 0.0)) fail(Errc::InsufficientStencil, "step must be positive");
  const FlowState s = field(px, py);
  const CharAngles a = char_angles(s, g);
  const double c = sound_speed(s, g);
  const double epx = std::cos(a.alpha), epy = std::sin(a.alpha);
  const double emx = std::cos(a.beta), emy = std::sin(a.beta);

  const double dp = dir_deriv_c(field, px, py, h, true, g);
  const double dm = dir_deriv_c(field, px, py, h, false, g);
  // d-(d+ c) and d+(d- c)
  const double dm_dp = (dir_deriv_c(field, px + h * emx, py + h * emy, h, true, g) -
                        dir_deriv_c(field, px - h * emx, py - h * emy, h, true, g)) / (2.0 * h);
  const double dp_dm = (dir_deriv_c(field, px + h * epx, py + h * epy, h, false, g) -
                        dir_deriv_c(field, px - h * epx, py - h * epy, h, false, g)) / (2.0 * h);

  const double t = std::tan(a.omega), T = t * t;
  const double k1 = g.nu * (1.0 + T);
  const double k2 = (g.nu * (T - 1.0) * (T - 1.0) + 2.0 * T) / (T + 1.0);
  DecompositionResidual r;
  r.r_plus = c * dm_dp - dp * (k1 * dp + k2 * dm);
  r.r_minus = c * dp_dm - dm * (k1 * dm + k2 * dp);
  r.dplus_c = dp;
  r.dminus_c = dm;
  return r;
}

RiemannDirectionDots riemann_direction_checks(const FlowState& s, const GasModel& g) {
  const CharAngles a = char_angles(s, g);
  const double nx = std::sin(a.alpha), ny = -std::cos(a.alpha);
  RiemannDirectionDots d;
  d.dot_tangent = nx * std::sin(a.tau) + ny * (-std::cos(a.tau));
  d.dot_inward = nx * (-std::cos(a.tau)) + ny * (-std::sin(a.tau));
  d.dot_polar_normal = std::numeric_limits<double>::quiet_NaN();
  return d;
}

RiemannDirectionDots riemann_direction_checks(const FlowState& s, const GasModel& g, double epsilon) {
  RiemannDirectionDots d = riemann_direction_checks(s, g);
  const CharAngles a = char_angles(s, g);
  const PolarResidual r = polar_residual(s, epsilon, g);
  d.dot_polar_normal = std::sin(a.alpha) * (-r.G_u) + (-std::cos(a.alpha)) * (-r.G_v);
  return d;
}

CharDerivs char_derivs_from_gradient(const FlowState& s, double ux, double uy, double vx, double vy,
                                     const GasModel& g) {
  const CharAngles a = char_angles(s, g);
  const double c = sound_speed(s, g);
  // c^2 = (gamma-1)/2 (qbar^2 - q^2)  =>  grad c = -(gamma-1)/(2c) (u grad u + v grad v)
  const double k = -(g.gamma - 1.0) / (2.0 * c);
  const double cx = k * (s.u * ux + s.v * vx);
  const double cy = k * (s.u * uy + s.v * vy);
  CharDerivs d;
  d.dplus_c = std::cos(a.alpha) * cx + std::sin(a.alpha) * cy;
  d.dminus_c = std::cos(a.beta) * cx + std::sin(a.beta) * cy;
  return d;
}

}  // namespace sl

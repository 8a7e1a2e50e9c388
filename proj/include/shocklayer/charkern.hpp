#pragma once

#include <functional>

#include "shocklayer/gas.hpp"

namespace sl {

struct CharAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double omega = 0.0;
  double tau = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double Xi = 0.0;
};

CharAngles char_angles(const FlowState& s, const GasModel& g);

enum class Family { Plus, Minus };

// Trapezoidal compatibility along a C+ (du + lambda_- dv = 0) or C- segment.
double compat_residual(const FlowState& a, const FlowState& b, Family family, const GasModel& g);

// A flow field that can be sampled anywhere near the evaluation point.
using StateField = std::function<FlowState(double x, double y)>;

struct DecompositionResidual {
  double r_plus = 0.0;
  double r_minus = 0.0;
  double dplus_c = 0.0;
  double dminus_c = 0.0;
};

// Central differences of step h. The inner derivative direction is taken from the
// field at each displaced point, so the mixed derivative is consistent.
DecompositionResidual decomposition_residual(const StateField& field, double px, double py, double h,
                                             const GasModel& g);

struct RiemannDirectionDots {
  double dot_tangent = 0.0;
  double dot_inward = 0.0;
  double dot_polar_normal = 0.0;  // NaN unless an epsilon is supplied
};

RiemannDirectionDots riemann_direction_checks(const FlowState& s, const GasModel& g);
RiemannDirectionDots riemann_direction_checks(const FlowState& s, const GasModel& g, double epsilon);

// Characteristic derivatives of c from the gradient of (u, v).
struct CharDerivs {
  double dplus_c = 0.0;
  double dminus_c = 0.0;
};
CharDerivs char_derivs_from_gradient(const FlowState& s, double ux, double uy, double vx, double vy,
                                     const GasModel& g);

}  // namespace sl

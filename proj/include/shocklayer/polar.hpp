#pragma once

#include <vector>

#include "shocklayer/gas.hpp"

namespace sl {

struct PolarResidual {
  double G = 0.0;
  double G_u = 0.0;
  double G_v = 0.0;
  double G_eps = 0.0;
};

// G(U, eps) = (u - eps/rho)(u - ubar(eps)) + v^2
PolarResidual polar_residual(const FlowState& s, double epsilon, const GasModel& g);
PolarResidual polar_residual(const FlowState& s, const FreeStream& fs, const GasModel& g);

FlowState downstream_from_ray(double theta, double epsilon, const GasModel& g);
FlowState downstream_from_ray(double theta, const FreeStream& fs, const GasModel& g);

double shock_angle(const FlowState& s, double epsilon, const GasModel& g);
double shock_angle(const FlowState& s, const FreeStream& fs, const GasModel& g);

struct Reflection {
  double g_value = 0.0;
  double t_plus = 0.0;
  double t_minus = 0.0;
  double k_angle = 0.0;
};

Reflection reflection_coeff_g(const FlowState& s, double epsilon, const GasModel& g);
Reflection reflection_coeff_g(const FlowState& s, const FreeStream& fs, const GasModel& g);

struct InnerProducts {
  double H = 0.0;
  double J = 0.0;
};

InnerProducts inner_products_HJ(const FlowState& s, double epsilon, const GasModel& g);
InnerProducts inner_products_HJ(const FlowState& s, const FreeStream& fs, const GasModel& g);

// v >= 0 on the polar above a given u; throws NotOnPolar when u is outside the polar's span
double polar_v_of_u(double u, const FreeStream& fs, const GasModel& g);

struct PolarPoint {
  FlowState state;
  double epsilon = 0.0;
  double G_value = 0.0;
  double G_u = 0.0;
  double G_v = 0.0;
  double G_eps = 0.0;
  double s_angle = 0.0;
  double k_angle = 0.0;
  double g_value = 0.0;
  double t_plus = 0.0;
  double t_minus = 0.0;
  double H = 0.0;
  double J = 0.0;
};

// Uniform in u from (ubar, 0) down to the first of the sonic point and the top of the polar.
// Quantities that are undefined at a point (the zero-strength corner) are NaN.
std::vector<PolarPoint> polar_trace(double epsilon, const GasModel& g, int n);

}  // namespace sl

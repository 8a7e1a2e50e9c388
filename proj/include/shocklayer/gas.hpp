#pragma once

#include <cmath>

namespace sl {

struct FlowState {
  double u = 0.0;
  double v = 0.0;
  double q() const { return std::hypot(u, v); }
  double q2() const { return u * u + v * v; }
};

// Polytropic gas p = A rho^gamma at a fixed Bernoulli constant.
struct GasModel {
  double gamma = 2.0;
  double pressure_const = 1.0;
  double bernoulli = 0.5;
  double qbar = 1.0;
  double nu = 1.5;
  double m_const = 1.0 / 3.0;
  double kappa_const = 0.5;

  // c^2 as a function of q^2 (Bernoulli).
  double c2_of_q2(double q2) const { return 0.5 * (gamma - 1.0) * (qbar * qbar - q2); }
  // rho from c^2 = A gamma rho^(gamma-1).
  double rho_of_c2(double c2) const;
  double q_crit() const { return qbar * std::sqrt((gamma - 1.0) / (gamma + 1.0)); }
};

GasModel make_gas(double gamma, double qbar = 1.0, double pressure_const = 1.0);

double gas_nu(double gamma);
double gas_m(double gamma);
double gas_kappa(double gamma);

struct StateQuantities {
  double rho = 0.0;
  double c = 0.0;
  double q = 0.0;
  double mach = 0.0;
  double p = 0.0;
};

StateQuantities state_quantities(const FlowState& s, const GasModel& g);

double epsilon_of_u(double u_inf, const GasModel& g);
// d(rho u)/du along v = 0, i.e. rho (1 - M^2).
double depsilon_du(double u_inf, const GasModel& g);

struct FreeStream {
  double epsilon = 0.0;
  double u_inf = 1.0;
  double rho_inf = 0.0;
  double c_inf = 0.0;
  double mach_inf = 0.0;
  double p_inf = 0.0;
};

FreeStream freestream_from_epsilon(double epsilon, const GasModel& g);

}  // namespace sl

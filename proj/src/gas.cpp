#include "shocklayer/gas.hpp"

#include <limits>
#include <sstream>

#include "shocklayer/errors.hpp"

namespace sl {

double gas_nu(double gamma) { return (gamma + 1.0) / (2.0 * (gamma - 1.0)); }
double gas_m(double gamma) { return (3.0 - gamma) / (gamma + 1.0); }
double gas_kappa(double gamma) { return (gamma - 1.0) / 2.0; }

GasModel make_gas(double gamma, double qbar, double pressure_const) {
  if (!(gamma > 1.0 && gamma < 3.0))
    fail(Errc::ValidationError, "gamma must lie in (1,3)");
  if (!(qbar > 0.0)) fail(Errc::ValidationError, "qbar must be positive");
  if (!(pressure_const > 0.0)) fail(Errc::ValidationError, "pressure constant must be positive");
  GasModel g;
  g.gamma = gamma;
  g.pressure_const = pressure_const;
  g.qbar = qbar;
  g.bernoulli = 0.5 * qbar * qbar;
  g.nu = gas_nu(gamma);
  g.m_const = gas_m(gamma);
  g.kappa_const = gas_kappa(gamma);
  return g;
}

double GasModel::rho_of_c2(double c2) const {
  if (c2 <= 0.0) return 0.0;
  if (gamma == 2.0) return c2 / (2.0 * pressure_const);
  return std::pow(c2 / (gamma * pressure_const), 1.0 / (gamma - 1.0));
}

StateQuantities state_quantities(const FlowState& s, const GasModel& g) {
  const double q2 = s.q2();
  if (q2 > g.qbar * g.qbar) {
    std::ostringstream os;
    os << "q=" << std::sqrt(q2) << " exceeds qbar=" << g.qbar;
    fail(Errc::SpeedExceedsLimit, os.str());
  }
  StateQuantities r;
  const double c2 = g.c2_of_q2(q2);
  r.q = std::sqrt(q2);
  r.c = std::sqrt(c2);
  r.rho = g.rho_of_c2(c2);
  r.mach = r.c > 0.0 ? r.q / r.c : std::numeric_limits<double>::infinity();
  r.p = g.pressure_const * std::pow(r.rho, g.gamma);
  return r;
}

double epsilon_of_u(double u_inf, const GasModel& g) {
  if (u_inf > g.qbar) fail(Errc::SpeedExceedsLimit, "incoming speed above qbar");
  if (u_inf <= g.q_crit()) fail(Errc::OutOfSupersonicBranch, "incoming speed not supersonic");
  return g.rho_of_c2(g.c2_of_q2(u_inf * u_inf)) * u_inf;
}

double depsilon_du(double u_inf, const GasModel& g) {
  const double c2 = g.c2_of_q2(u_inf * u_inf);
  const double rho = g.rho_of_c2(c2);
  if (c2 <= 0.0) {
    // vacuum end: rho ~ (qbar^2-u^2)^(1/(gamma-1))
    if (g.gamma < 2.0) return 0.0;
    if (g.gamma == 2.0) return -u_inf * u_inf / (2.0 * g.pressure_const);
    return -std::numeric_limits<double>::infinity();
  }
  return rho * (1.0 - u_inf * u_inf / c2);
}

FreeStream freestream_from_epsilon(double epsilon, const GasModel& g) {
  if (epsilon < 0.0) fail(Errc::EpsilonTooLarge, "negative mass flux");
  FreeStream fs;
  fs.epsilon = epsilon;
  double ub = g.qbar;
  if (epsilon > 0.0) {
    const double lo0 = g.q_crit();
    const double emax = g.rho_of_c2(g.c2_of_q2(lo0 * lo0)) * lo0;
    if (epsilon >= emax) fail(Errc::EpsilonTooLarge, "mass flux at or above the sonic maximum");
    auto eps_at = [&](double u) { return g.rho_of_c2(g.c2_of_q2(u * u)) * u; };
    // decreasing on (q_crit, qbar]
    double lo = lo0, hi = g.qbar;
    while (hi - lo > 1e-13 * g.qbar) {
      const double mid = 0.5 * (lo + hi);
      if (eps_at(mid) > epsilon) lo = mid; else hi = mid;
    }
    ub = 0.5 * (lo + hi);
    for (int k = 0; k < 2; ++k) {
      const double d = depsilon_du(ub, g);
      if (d != 0.0 && std::isfinite(d)) {
        const double nxt = ub - (eps_at(ub) - epsilon) / d;
        if (nxt > lo0 && nxt <= g.qbar) ub = nxt;
      }
    }
  }
  fs.u_inf = ub;
  const double c2 = g.c2_of_q2(ub * ub);
  fs.c_inf = std::sqrt(std::max(c2, 0.0));
  fs.rho_inf = epsilon > 0.0 ? epsilon / ub : 0.0;
  fs.mach_inf = fs.c_inf > 0.0 ? ub / fs.c_inf : std::numeric_limits<double>::infinity();
  fs.p_inf = g.pressure_const * std::pow(g.rho_of_c2(c2), g.gamma);
  return fs;
}

}  // namespace sl

#include "shocklayer/limitsol.hpp"

#include <cmath>

#include "shocklayer/charkern.hpp"
#include "shocklayer/errors.hpp"

namespace sl {

double limit_g_at_vacuum(const GasModel& g) {
  const double r = std::sqrt(2.0 / (g.gamma - 1.0));
  return (r - 1.0) / (r + 1.0);
}

LimitState limit_state(const WedgeProfile& w, double x, const GasModel& g) {
  const double d = w.fp(x);
  if (d < 0.0) fail(Errc::NegativeSlope, "limit solution needs f' >= 0");
  LimitState ls;
  const double den = 1.0 + d * d;
  ls.u_s = g.qbar / den;
  ls.v_s = g.qbar * d / den;
  ls.q_s = g.qbar / std::sqrt(den);
  const double c2 = 0.5 * (g.gamma - 1.0) * d * d / den * g.qbar * g.qbar;
  ls.c_s = std::sqrt(c2);
  ls.rho_s = g.rho_of_c2(c2);
  ls.supersonic = d < std::sqrt(2.0 / (g.gamma - 1.0));
  if (!ls.supersonic) return ls;
  if (d == 0.0) {
    ls.g0 = limit_g_at_vacuum(g);
  } else {
    const CharAngles a = char_angles(FlowState{ls.u_s, ls.v_s}, g);
    ls.g0 = std::sin(a.beta) / std::sin(a.alpha);
  }
  const double kw = eval_profile(w, x).curvature;
  if (std::abs(1.0 - ls.g0) >= 1e-10) {
    ls.dminus_c = (g.gamma - 1.0) * ls.q_s * kw / (1.0 - ls.g0);
    ls.dplus_c = ls.g0 * ls.dminus_c;
    ls.has_derivatives = true;
  }
  return ls;
}

FormalDerivatives formal_derivatives(const WedgeProfile& w, double x, const GasModel& g) {
  const LimitState ls = limit_state(w, x, g);
  if (!ls.supersonic) fail(Errc::NotSupersonic, "limit state is subsonic");
  if (!ls.has_derivatives) fail(Errc::SingularSystem, "g0 = 1: wall and shock relations are dependent");
  return {ls.dplus_c, ls.dminus_c};
}

}  // namespace sl

#pragma once

#include "shocklayer/gas.hpp"
#include "shocklayer/wedge.hpp"

namespace sl {

struct LimitState {
  double u_s = 0.0;
  double v_s = 0.0;
  double q_s = 0.0;
  double c_s = 0.0;
  double rho_s = 0.0;
  double g0 = 0.0;
  bool supersonic = false;
  bool has_derivatives = false;
  double dplus_c = 0.0;
  double dminus_c = 0.0;
};

// g0 on the limit circle as f' -> 0+
double limit_g_at_vacuum(const GasModel& g);

LimitState limit_state(const WedgeProfile& w, double x, const GasModel& g);

struct FormalDerivatives {
  double dplus_c = 0.0;
  double dminus_c = 0.0;
};

FormalDerivatives formal_derivatives(const WedgeProfile& w, double x, const GasModel& g);

}  // namespace sl

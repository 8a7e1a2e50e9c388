#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shocklayer/gas.hpp"
#include "shocklayer/charkern.hpp"

namespace sl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  std::string tolerance;
  std::string detail;
  double seconds = 0.0;
  std::string line() const;  // "AC07 PASS name: measured ... (tol ...) detail"
};

// The twelve desk-scale acceptance checks, each self-contained.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_done = {});

// Independent references used by the checks.
namespace oracle {

// Freestream speed for a mass flux, by bisection on the supersonic branch.
double freestream_speed(double epsilon, const GasModel& g);
// Weak root on the ray v = u tan(theta): first sign change of G scanning down from u_inf,
// then bisection. Returns false when that root is missing or subsonic.
bool ray_state(double theta, double epsilon, const GasModel& g, FlowState& out);

// Centred simple wave around a corner at the origin. With Family::Minus the straight rays
// are C- characteristics, with Family::Plus they are C+ characteristics.
struct SimpleWave {
  GasModel gas;
  Family rays = Family::Minus;
  double invariant = 0.0;
  double mach_at(double ray_angle) const;
  FlowState operator()(double x, double y) const;
};
double prandtl_meyer(double mach, double gamma);

}  // namespace oracle

}  // namespace sl

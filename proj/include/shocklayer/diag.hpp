#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "shocklayer/moc.hpp"
#include "shocklayer/netfield.hpp"

namespace sl {

// Lines whose wall point has xi in [xi_min, xi_max] are reported.
struct DiagWindow {
  double xi_min = 0.0;
  double xi_max = std::numeric_limits<double>::infinity();
};
// Drops the seed region x < 10 x_start.
DiagWindow default_window(const RunConfig& cfg);
std::vector<int> lines_in_window(const CharNet& net, const DiagWindow& win);

struct ThicknessRow {
  double xi = 0.0;
  double thickness = 0.0;
  double normalized = 0.0;  // thickness / (eps xi)
};
// Wall-normal distance from each line's wall point to the computed shock polyline.
// Lines whose normal passes beyond the last shock node are skipped.
std::vector<ThicknessRow> layer_thickness_report(const CharNet& net, const ShockFront& shock, const WedgeProfile& w,
                                                 const FreeStream& fs, const DiagWindow& win = {});

struct DecayRow {
  double xi = 0.0;
  double plus = 0.0;   // max over the line of xi |d+ c|
  double minus = 0.0;  // max over the line of xi |d- c|
};
std::vector<DecayRow> derivative_decay_report(const CharNet& net, const GasModel& g, const DiagWindow& win = {});
// Cauchy-style check: the last-decade tail of both columns is no larger than its start.
bool decay_tail_decreasing(const std::vector<DecayRow>& rows);

// Tail value from the last three dyadic xi-windows. With a gauge the tail is taken as
// L + A gauge(xi) (Richardson with a known rate); without one the rate is fitted (Aitken).
struct TailEstimate {
  double value = 0.0;
  double last = 0.0;
  double ratio = 0.0;
  double companion = 0.0;  // the same estimate one window earlier
  bool extrapolated = false;
  bool gauged = false;
  double window_means[3] = {0.0, 0.0, 0.0};
};
TailEstimate tail_extrapolate(const std::vector<double>& xi, const std::vector<double>& val,
                              const std::function<double(double)>& gauge = {});
// Decay law of the shock strength for wedges that flatten out (f_infty = 0); empty otherwise.
std::function<double(double)> far_field_gauge(const WedgeProfile& w);

struct AsymptoteReport {
  double predicted_u = 0.0, predicted_v = 0.0, predicted_slope = 0.0;
  double computed_u = 0.0, computed_v = 0.0, computed_slope = 0.0;
  double err_u = 0.0, err_v = 0.0, err_slope = 0.0;
  double last_u = 0.0, last_v = 0.0, last_slope = 0.0;
  bool extrapolated = false;
};
AsymptoteReport asymptotic_report(const CharNet& net, const ShockFront& shock, const WedgeProfile& w,
                                  const FreeStream& fs, const GasModel& g, const DiagWindow& win = {});

struct RelationResiduals {
  double wall_max = 0.0, wall_rms = 0.0, wall_scale = 0.0;
  double shock_max = 0.0, shock_rms = 0.0, shock_scale = 0.0;
  int n_wall = 0, n_shock = 0;
};
RelationResiduals relation_residuals(const CharNet& net, const WedgeProfile& w, const FreeStream& fs,
                                     const GasModel& g, const DiagWindow& win = {});

struct DecompositionNorms {
  double max_plus = 0.0, max_minus = 0.0;
  double rms_plus = 0.0, rms_minus = 0.0;
  int count = 0;
};
// Interior nodes only; the residual is taken on each node's local quadratic model with
// a difference step of h_factor times the node spacing.
DecompositionNorms decomposition_report(const CharNet& net, const GasModel& g, const DiagWindow& win = {},
                                        double h_factor = 0.25);

struct TrendRow {
  double epsilon = 0.0;
  double xi = 0.0;
  double err_plus = 0.0;
  double err_minus = 0.0;
};
struct TrendReport {
  std::vector<TrendRow> rows;
  double order_plus = 0.0;
  double order_minus = 0.0;
};
// runs: (epsilon, result) pairs on one wedge; xi0 picks the data line nearest that station.
TrendReport formal_derivative_trend(const std::vector<std::pair<double, const MarchResult*>>& runs,
                                    const WedgeProfile& w, const GasModel& g, double xi0);

struct SignAudit {
  double max_deriv = 0.0;  // max of d+c and d-c over the window
  int violations = 0;      // nodes with a derivative at or above the floor
  int nodes = 0;
  bool shock_q_increasing = true;
  double worst_q_drop = 0.0;
  bool pjump_decreasing = true;
  int vacuum_region_violations = 0;  // states outside v >= 0, q <= u_inf, G <= 0
};
SignAudit case_b_sign_audit(const CharNet& net, const ShockFront& shock, const FreeStream& fs, const GasModel& g,
                            double noise_floor, const DiagWindow& win = {});
// Largest |d+-c| seen on a net; applied to a straight-wedge run it is the derivative noise floor.
double derivative_noise_floor(const CharNet& net, const GasModel& g, const DiagWindow& win = {});

struct NetAudit {
  double entropy_min = 0.0;
  double mass_rel_err = 0.0;
  double wall_slip = 0.0;
  double shock_polar = 0.0;
  double slope_state = 0.0;
  double state_spread = 0.0;  // max |U - U0| over the net
  bool lambda_order = true;
  bool eta_increasing = true;
};
NetAudit audit_net(const MarchResult& r, const RunConfig& cfg, const DiagWindow& win);

struct Verdict {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct DiagnosticsReport {
  std::string config;
  std::vector<ThicknessRow> thickness_series;
  std::vector<DecayRow> decay_series;
  AsymptoteReport asymptote;
  RelationResiduals relation;
  NetAudit audit;
  double entropy_min = 0.0;
  std::vector<Verdict> verdicts;
  bool all_passed() const;
};
DiagnosticsReport build_report(const RunConfig& cfg, const MarchResult& r, double noise_floor = 0.0);

}  // namespace sl

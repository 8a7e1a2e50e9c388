#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shocklayer/errors.hpp"
#include "shocklayer/gas.hpp"
#include "shocklayer/wedge.hpp"

namespace sl {

struct NetPoint {
  double x = 0.0;
  double y = 0.0;
  FlowState state;
  double xi = 0.0;
  double eta = 0.0;
  int line_index = 0;
  int point_index = 0;
};

struct DataLine {
  std::vector<NetPoint> points;  // wall first, shock last
};

struct ShockNode {
  double x = 0.0;
  double y = 0.0;
  double slope = 0.0;
  FlowState state;
};

struct ShockFront {
  std::vector<ShockNode> nodes;  // nodes[0] is the wedge tip
};

struct CharNet {
  std::vector<DataLine> lines;
};

struct RunConfig {
  GasModel gas = make_gas(2.0);
  WedgeProfile wedge;
  double epsilon = 0.04275;
  int n_across = 20;
  double x_start = 1e-3;
  double x_max = 50.0;
  int corrector_passes = 2;
  bool regrid = true;
  // re-grid a line once some chord differs from the mean chord by more than this fraction;
  // 0 re-grids every line
  double regrid_threshold = 0.0;
  int max_lines = 0;  // 0: run to x_max
};

void validate_run_config(const RunConfig& cfg);

struct UnitOptions {
  int corrector_passes = 2;
};

NetPoint interior_point(const NetPoint& a, const NetPoint& b, const GasModel& g, UnitOptions opt = {});
NetPoint wall_point(const NetPoint& b, const WedgeProfile& w, const GasModel& g, UnitOptions opt = {});
std::pair<NetPoint, ShockNode> shock_point(const NetPoint& a, const ShockNode& s_prev, const FreeStream& fs,
                                           const GasModel& g, UnitOptions opt = {});

struct Seed {
  DataLine line;
  ShockNode tip;
  ShockNode top;
  FlowState tip_state;
};

Seed seed_tip(const RunConfig& cfg);

struct MarchResult {
  CharNet net;
  ShockFront shock;
  FreeStream fs;
  FlowState tip_state;
  bool complete = false;
  bool has_error = false;
  Errc error_code = Errc::ValidationError;
  std::string error_message;
};

MarchResult march(const RunConfig& cfg);

// Flux of rho U through the polyline of a data line.
double line_mass_flux(const DataLine& line, const GasModel& g);

}  // namespace sl

#pragma once

#include <string>
#include <vector>

#include "shocklayer/diag.hpp"
#include "shocklayer/gamma2.hpp"
#include "shocklayer/limitsol.hpp"
#include "shocklayer/moc.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

// All CSV numbers use '.' and 17 significant digits, so equal inputs give equal bytes.
std::string fmt17(double v);

std::string polar_csv(const std::vector<PolarPoint>& pts);

struct LimitRow {
  double x = 0.0;
  double xi = 0.0;
  LimitState state;
};
std::string limit_csv(const std::vector<LimitRow>& rows);

std::string net_csv(const CharNet& net, const GasModel& g);
std::string shock_csv(const ShockFront& shock, const FreeStream& fs, const GasModel& g);
std::string thickness_csv(const std::vector<ThicknessRow>& rows);
std::string decay_csv(const std::vector<DecayRow>& rows);

struct SweepRow {
  int job = 0;
  double epsilon = 0.0;
  int n_across = 0;
  int lines = 0;
  bool complete = false;
  double xi = 0.0;  // trend station actually used, NaN without a trend
  double err_plus = 0.0;
  double err_minus = 0.0;
  double entropy_min = 0.0;
  double mass_rel_err = 0.0;
};
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string report_json(const DiagnosticsReport& r);
std::string gamma2_json(const Gamma2Report& r);

// Throws ValidationError when the file cannot be written.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace sl

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shocklayer/gas.hpp"

namespace sl {

enum class WedgeFamily { Straight, PowerDecayBend, OscillatoryBend, LogBullet };

const char* wedge_family_name(WedgeFamily f);

struct WallPointFrame {
  double x = 0.0;
  double y = 0.0;
  double fp = 0.0;
  double fpp = 0.0;
  double xi = 0.0;
  double tangent_angle = 0.0;
  double curvature = 0.0;
};

class ArcTable;

// Closed-form wall y = f(x), x >= 0.
//   Straight         f' = m
//   PowerDecayBend   f' = m + b/(1+x)^a
//   OscillatoryBend  f' = m + b cos(ln(1+x))/(1+x)^(1+a)
//   LogBullet        f  = a ln(1+x)
class WedgeProfile {
 public:
  WedgeProfile() : WedgeProfile(straight(0.17632698070846498)) {}

  static WedgeProfile straight(double m, double horizon = 1e4);
  static WedgeProfile power_decay_bend(double m, double b, double a, double horizon = 1e4);
  static WedgeProfile oscillatory_bend(double m, double b, double a, double horizon = 1e4);
  static WedgeProfile log_bullet(double a, double horizon = 1e4);

  WedgeFamily family() const { return family_; }
  const std::vector<double>& params() const { return params_; }
  double f_infty() const { return f_infty_; }
  double horizon() const { return horizon_; }
  // exponent a' with |f''| (1+x)^(1+a') bounded by construction
  double decay_exponent() const;
  std::string describe() const;

  double f(double x) const;
  double fp(double x) const;
  double fpp(double x) const;
  double xi(double x) const;

 private:
  WedgeProfile(WedgeFamily fam, std::vector<double> params, double horizon);

  WedgeFamily family_;
  std::vector<double> params_;
  double f_infty_ = 0.0;
  double horizon_ = 1e4;
  std::shared_ptr<const ArcTable> arc_;
};

WallPointFrame eval_profile(const WedgeProfile& w, double x);

enum class CaseKind { CaseA, CaseB, Invalid };

struct CaseResult {
  CaseKind kind = CaseKind::Invalid;
  std::string reason;
};

const char* case_name(CaseKind k);

CaseResult classify_case(const WedgeProfile& w, const GasModel& g);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct WallProjection {
  double xi = 0.0;
  double eta = 0.0;
  WallPointFrame foot;
};

// x_hint < 0 means "start from p.x"
WallProjection project_to_wall(const WedgeProfile& w, Point2 p, double x_hint = -1.0);

}  // namespace sl

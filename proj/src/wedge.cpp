#include "shocklayer/wedge.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "shocklayer/errors.hpp"

namespace sl {

namespace {

double integrate_speed(const WedgeProfile& w, double a, double b) {
  if (b <= a) return 0.0;
  auto ds = [&w](double x) {
    const double d = w.fp(x);
    return std::sqrt(1.0 + d * d);
  };
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(ds, a, b, 10, 1e-13, &err);
}

}  // namespace

// Cumulative arc length on geometric breakpoints, filled once at construction.
class ArcTable {
 public:
  ArcTable(const WedgeProfile& w, double horizon) {
    xs_.push_back(0.0);
    const int per_decade = 24;
    const double x0 = 1e-8;
    const int n = static_cast<int>(std::ceil(per_decade * std::log10(horizon / x0)));
    for (int k = 0; k <= n; ++k) xs_.push_back(x0 * std::pow(horizon / x0, double(k) / n));
    cum_.assign(xs_.size(), 0.0);
    for (size_t k = 1; k < xs_.size(); ++k) cum_[k] = cum_[k - 1] + integrate_speed(w, xs_[k - 1], xs_[k]);
  }

  double xi(const WedgeProfile& w, double x) const {
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    size_t k = static_cast<size_t>(it - xs_.begin());
    if (k == 0) return 0.0;
    --k;
    return cum_[k] + integrate_speed(w, xs_[k], x);
  }

 private:
  std::vector<double> xs_;
  std::vector<double> cum_;
};

const char* wedge_family_name(WedgeFamily f) {
  switch (f) {
    case WedgeFamily::Straight: return "straight";
    case WedgeFamily::PowerDecayBend: return "power_decay_bend";
    case WedgeFamily::OscillatoryBend: return "oscillatory_bend";
    case WedgeFamily::LogBullet: return "log_bullet";
  }
  return "?";
}

WedgeProfile::WedgeProfile(WedgeFamily fam, std::vector<double> params, double horizon)
    : family_(fam), params_(std::move(params)), horizon_(horizon) {
  for (double p : params_)
    if (!std::isfinite(p)) fail(Errc::ValidationError, "non-finite wedge parameter");
  if (!(horizon_ > 0.0)) fail(Errc::ValidationError, "wedge horizon must be positive");
  switch (family_) {
    case WedgeFamily::Straight:
    case WedgeFamily::PowerDecayBend:
    case WedgeFamily::OscillatoryBend: f_infty_ = params_[0]; break;
    case WedgeFamily::LogBullet: f_infty_ = 0.0; break;
  }
  if (family_ == WedgeFamily::PowerDecayBend || family_ == WedgeFamily::OscillatoryBend) {
    if (!(params_[2] > 0.0)) fail(Errc::ValidationError, "decay exponent a must be positive");
  }
  arc_ = std::make_shared<ArcTable>(*this, horizon_);
}

WedgeProfile WedgeProfile::straight(double m, double horizon) {
  return WedgeProfile(WedgeFamily::Straight, {m}, horizon);
}
WedgeProfile WedgeProfile::power_decay_bend(double m, double b, double a, double horizon) {
  return WedgeProfile(WedgeFamily::PowerDecayBend, {m, b, a}, horizon);
}
WedgeProfile WedgeProfile::oscillatory_bend(double m, double b, double a, double horizon) {
  return WedgeProfile(WedgeFamily::OscillatoryBend, {m, b, a}, horizon);
}
WedgeProfile WedgeProfile::log_bullet(double a, double horizon) {
  return WedgeProfile(WedgeFamily::LogBullet, {a}, horizon);
}

double WedgeProfile::decay_exponent() const {
  switch (family_) {
    case WedgeFamily::Straight: return 1.0;
    case WedgeFamily::PowerDecayBend: return params_[2];
    case WedgeFamily::OscillatoryBend: return 1.0 + params_[2];
    case WedgeFamily::LogBullet: return 1.0;
  }
  return 0.0;
}

std::string WedgeProfile::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << wedge_family_name(family_);
  for (size_t k = 0; k < params_.size(); ++k) os << (k == 0 ? ":" : ",") << params_[k];
  return os.str();
}

double WedgeProfile::f(double x) const {
  switch (family_) {
    case WedgeFamily::Straight: return params_[0] * x;
    case WedgeFamily::PowerDecayBend: {
      const double m = params_[0], b = params_[1], a = params_[2];
      if (std::abs(a - 1.0) < 1e-14) return m * x + b * std::log1p(x);
      return m * x + b * std::expm1((1.0 - a) * std::log1p(x)) / (1.0 - a);
    }
    case WedgeFamily::OscillatoryBend: {
      const double m = params_[0], b = params_[1], a = params_[2];
      const double s = std::log1p(x);
      const double e = std::exp(-a * s);
      // integral of cos(s) e^{-a s} ds from 0
      const double I = (e * (std::sin(s) - a * std::cos(s)) + a) / (1.0 + a * a);
      return m * x + b * I;
    }
    case WedgeFamily::LogBullet: return params_[0] * std::log1p(x);
  }
  return 0.0;
}

double WedgeProfile::fp(double x) const {
  switch (family_) {
    case WedgeFamily::Straight: return params_[0];
    case WedgeFamily::PowerDecayBend:
      return params_[0] + params_[1] * std::pow(1.0 + x, -params_[2]);
    case WedgeFamily::OscillatoryBend:
      return params_[0] + params_[1] * std::cos(std::log1p(x)) * std::pow(1.0 + x, -1.0 - params_[2]);
    case WedgeFamily::LogBullet: return params_[0] / (1.0 + x);
  }
  return 0.0;
}

double WedgeProfile::fpp(double x) const {
  switch (family_) {
    case WedgeFamily::Straight: return 0.0;
    case WedgeFamily::PowerDecayBend:
      return -params_[2] * params_[1] * std::pow(1.0 + x, -params_[2] - 1.0);
    case WedgeFamily::OscillatoryBend: {
      const double s = std::log1p(x);
      return params_[1] * std::pow(1.0 + x, -2.0 - params_[2]) *
             (-std::sin(s) - (1.0 + params_[2]) * std::cos(s));
    }
    case WedgeFamily::LogBullet: return -params_[0] / ((1.0 + x) * (1.0 + x));
  }
  return 0.0;
}

double WedgeProfile::xi(double x) const { return arc_->xi(*this, x); }

WallPointFrame eval_profile(const WedgeProfile& w, double x) {
  if (x < 0.0 || !std::isfinite(x)) fail(Errc::NegativeAbscissa, "x must be >= 0");
  WallPointFrame fr;
  fr.x = x;
  fr.y = w.f(x);
  fr.fp = w.fp(x);
  fr.fpp = w.fpp(x);
  fr.xi = w.xi(x);
  fr.tangent_angle = std::atan(fr.fp);
  fr.curvature = fr.fpp / std::pow(1.0 + fr.fp * fr.fp, 1.5);
  return fr;
}

const char* case_name(CaseKind k) {
  switch (k) {
    case CaseKind::CaseA: return "CaseA";
    case CaseKind::CaseB: return "CaseB";
    case CaseKind::Invalid: return "Invalid";
  }
  return "?";
}

CaseResult classify_case(const WedgeProfile& w, const GasModel& g) {
  const double bound_a = std::sqrt(2.0 / (g.gamma - 1.0));
  const double bound_b = std::sqrt((3.0 - g.gamma) / (g.gamma - 1.0));
  std::vector<double> xs{0.0};
  const int per_decade = 40;
  const double x0 = 1e-6, x1 = w.horizon();
  const int n = static_cast<int>(std::ceil(per_decade * std::log10(x1 / x0)));
  for (int k = 0; k <= n; ++k) xs.push_back(x0 * std::pow(x1 / x0, double(k) / n));

  double fp_min = 1e300, fp_max = -1e300;
  bool concave = true;
  const double ad = w.decay_exponent();
  double env_body = 0.0, env_tail = 0.0;
  for (double x : xs) {
    const double d = w.fp(x), dd = w.fpp(x);
    if (x > 0.0 && !(w.f(x) > 0.0)) return {CaseKind::Invalid, "f(x) <= 0 for some x > 0"};
    fp_min = std::min(fp_min, d);
    fp_max = std::max(fp_max, d);
    if (dd > 1e-15) concave = false;
    const double env = std::abs(dd) * std::pow(1.0 + x, 1.0 + ad);
    if (x < 0.1 * x1) env_body = std::max(env_body, env); else env_tail = std::max(env_tail, env);
  }
  fp_min = std::min(fp_min, w.f_infty());
  fp_max = std::max(fp_max, w.f_infty());
  const bool envelope_bounded = ad > 0.0 && env_tail <= env_body * (1.0 + 1e-9) + 1e-300;

  if (fp_min > 0.0 && fp_max < bound_a && envelope_bounded) return {CaseKind::CaseA, ""};
  const double fp0 = w.fp(0.0);
  if (concave && fp0 > 0.0 && fp0 < bound_a && w.f_infty() >= 0.0 && w.f_infty() < bound_b)
    return {CaseKind::CaseB, ""};

  std::ostringstream os;
  os.precision(6);
  if (fp_max >= bound_a) os << "f' reaches " << fp_max << " >= sqrt(2/(gamma-1)) = " << bound_a;
  else if (fp_min <= 0.0 && !concave) os << "f' not bounded away from 0 and wall not concave";
  else if (fp_min <= 0.0 && w.f_infty() >= bound_b)
    os << "f_infty = " << w.f_infty() << " >= sqrt((3-gamma)/(gamma-1)) = " << bound_b;
  else if (fp_min <= 0.0) os << "f' <= 0 somewhere";
  else os << "curvature envelope not bounded";
  return {CaseKind::Invalid, os.str()};
}

WallProjection project_to_wall(const WedgeProfile& w, Point2 p, double x_hint) {
  double x = x_hint >= 0.0 ? x_hint : std::max(p.x, 0.0);
  bool ok = false;
  for (int it = 0; it < 100; ++it) {
    const double f = w.f(x), d = w.fp(x), dd = w.fpp(x);
    const double r = (x - p.x) + (f - p.y) * d;
    const double dr = 1.0 + d * d + (f - p.y) * dd;
    if (!(dr > 0.0)) fail(Errc::OutsideTube, "projection Hessian not positive");
    double step = r / dr;
    double xn = x - step;
    if (xn < 0.0) xn = 0.5 * x;
    const bool small = std::abs(xn - x) <= 1e-15 * (1.0 + std::abs(x));
    x = xn;
    if (small) { ok = true; break; }
  }
  if (!ok) fail(Errc::OutsideTube, "projection Newton did not converge");
  WallProjection out;
  out.foot = eval_profile(w, x);
  const double dx = p.x - out.foot.x, dy = p.y - out.foot.y;
  out.eta = std::hypot(dx, dy);
  const double sq = std::sqrt(1.0 + out.foot.fp * out.foot.fp);
  const double nx = -out.foot.fp / sq, ny = 1.0 / sq;
  const double scale = std::max(1.0, std::hypot(p.x, p.y));
  if (out.eta > 1e-13 * scale) {
    const double cross = (dx * ny - dy * nx) / out.eta;
    if (std::abs(cross) > 1e-10) fail(Errc::OutsideTube, "segment to foot not normal to wall");
    if (dx * nx + dy * ny < 0.0) fail(Errc::OutsideTube, "point below the wall");
  }
  out.xi = out.foot.xi;
  return out;
}

}  // namespace sl

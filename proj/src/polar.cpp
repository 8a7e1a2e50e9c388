#include "shocklayer/polar.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "shocklayer/charkern.hpp"
#include "shocklayer/errors.hpp"

namespace sl {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

PolarResidual polar_residual(const FlowState& s, const FreeStream& fs, const GasModel& g) {
  const double q2 = s.q2();
  if (q2 > g.qbar * g.qbar) fail(Errc::SpeedExceedsLimit, "state beyond the vacuum circle");
  const double eps = fs.epsilon, ub = fs.u_inf;
  const double c2 = g.c2_of_q2(q2);
  const double rho = g.rho_of_c2(c2);
  double E = 0.0, Eu = 0.0, Ev = 0.0;
  if (eps > 0.0) {
    E = eps / rho;
    Eu = eps * s.u / (rho * c2);
    Ev = eps * s.v / (rho * c2);
  }
  PolarResidual r;
  r.G = (s.u - E) * (s.u - ub) + s.v * s.v;
  r.G_u = (1.0 - Eu) * (s.u - ub) + (s.u - E);
  r.G_v = -Ev * (s.u - ub) + 2.0 * s.v;
  const double dub = 1.0 / depsilon_du(ub, g);
  r.G_eps = (rho > 0.0 ? -(s.u - ub) / rho : kNaN) - dub * (s.u - E);
  return r;
}

PolarResidual polar_residual(const FlowState& s, double epsilon, const GasModel& g) {
  return polar_residual(s, freestream_from_epsilon(epsilon, g), g);
}

namespace {

double ray_G(double u, double t, const FreeStream& fs, const GasModel& g) {
  return polar_residual(FlowState{u, u * t}, fs, g).G;
}

// root of G along the ray in [lo, hi] with G(lo) <= 0 < G(hi)
double refine_ray_root(double lo, double hi, double t, const FreeStream& fs, const GasModel& g) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const PolarResidual r = polar_residual(FlowState{x, x * t}, fs, g);
    if (r.G == 0.0) return x;
    if (r.G > 0.0) hi = x; else lo = x;
    const double d = r.G_u + t * r.G_v;
    double xn = d != 0.0 ? x - r.G / d : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= 2e-16 * std::abs(x) || hi - lo <= 2e-16 * std::abs(x)) return xn;
    x = xn;
  }
  return x;
}

}  // namespace

FlowState downstream_from_ray(double theta, const FreeStream& fs, const GasModel& g) {
  if (theta == 0.0) return FlowState{fs.u_inf, 0.0};
  if (!(theta > 0.0 && theta < 0.5 * M_PI)) fail(Errc::DetachedShock, "ray angle outside (0, pi/2)");
  const double t = std::tan(theta);
  const double hi = std::min(fs.u_inf, g.qbar * std::cos(theta) * (1.0 - 1e-14));
  const double lo = 1e-9 * g.qbar;
  const int n = 4096;
  double u_prev = hi, G_prev = ray_G(hi, t, fs, g);
  double best_u = hi, best_G = G_prev;
  for (int k = 1; k <= n; ++k) {
    const double u = hi + (lo - hi) * double(k) / n;
    const double Gk = ray_G(u, t, fs, g);
    if (G_prev > 0.0 && Gk <= 0.0) {
      const double root = refine_ray_root(u, u_prev, t, fs, g);
      const FlowState st{root, root * t};
      if (!(st.q2() > g.c2_of_q2(st.q2())))
        fail(Errc::NotSupersonic, "weak root on the ray is subsonic");
      return st;
    }
    if (Gk < best_G) { best_G = Gk; best_u = u; }
    u_prev = u;
    G_prev = Gk;
  }
  // two roots may hide inside one cell near detachment: look at the minimum
  double a = std::max(lo, best_u - (hi - lo) / n), b = std::min(hi, best_u + (hi - lo) / n);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 100; ++it) {
    const double c = b - gr * (b - a), d = a + gr * (b - a);
    if (ray_G(c, t, fs, g) < ray_G(d, t, fs, g)) b = d; else a = c;
  }
  const double um = 0.5 * (a + b);
  if (ray_G(um, t, fs, g) <= 0.0) {
    const double root = refine_ray_root(um, std::min(hi, um + (hi - lo) / n), t, fs, g);
    const FlowState st{root, root * t};
    if (!(st.q2() > g.c2_of_q2(st.q2()))) fail(Errc::NotSupersonic, "weak root on the ray is subsonic");
    return st;
  }
  std::ostringstream os;
  os << "ray at " << theta * 180.0 / M_PI << " deg misses the polar for eps=" << fs.epsilon;
  fail(Errc::DetachedShock, os.str());
}

FlowState downstream_from_ray(double theta, double epsilon, const GasModel& g) {
  return downstream_from_ray(theta, freestream_from_epsilon(epsilon, g), g);
}

double shock_angle(const FlowState& s, const FreeStream& fs, const GasModel& g) {
  const StateQuantities sq = state_quantities(s, g);
  const double num = sq.rho * s.v, den = sq.rho * s.u - fs.epsilon;
  // relative test: at eps = 0 the density may be tiny while the angle is still tau
  if (std::hypot(num, den) <= 1e-12 * (fs.epsilon + sq.rho * sq.q))
    fail(Errc::DegenerateShock, "zero-strength shock: shock angle is 0/0");
  return std::atan2(num, den);
}

double shock_angle(const FlowState& s, double epsilon, const GasModel& g) {
  return shock_angle(s, freestream_from_epsilon(epsilon, g), g);
}

Reflection reflection_coeff_g(const FlowState& s, const FreeStream& fs, const GasModel& g) {
  const PolarResidual r = polar_residual(s, fs, g);
  if (!(std::abs(r.G) < 1e-9)) fail(Errc::NotOnPolar, "state is not on the shock polar");
  const CharAngles a = char_angles(s, g);
  const double sa = shock_angle(s, fs, g);
  if (std::sin(a.beta - a.alpha) == 0.0) fail(Errc::NotSupersonic, "alpha == beta");
  Reflection out;
  out.k_angle = r.G_v != 0.0 ? std::atan(-r.G_u / r.G_v) : -0.5 * M_PI;
  out.t_plus = std::sin(a.beta - sa) / std::sin(a.beta - a.alpha);
  out.t_minus = std::sin(sa - a.alpha) / std::sin(a.beta - a.alpha);
  out.g_value = std::sin(sa - a.alpha) * std::cos(out.k_angle - a.alpha) /
                (std::sin(a.beta - sa) * std::cos(out.k_angle - a.beta));
  return out;
}

Reflection reflection_coeff_g(const FlowState& s, double epsilon, const GasModel& g) {
  return reflection_coeff_g(s, freestream_from_epsilon(epsilon, g), g);
}

InnerProducts inner_products_HJ(const FlowState& s, const FreeStream& fs, const GasModel& g) {
  const PolarResidual r = polar_residual(s, fs, g);
  if (!(std::abs(r.G) < 1e-9)) fail(Errc::NotOnPolar, "state is not on the shock polar");
  const CharAngles a = char_angles(s, g);
  InnerProducts hj;
  hj.H = -r.G_u * std::sin(a.alpha) + r.G_v * std::cos(a.alpha);
  hj.J = -r.G_u * std::sin(a.beta) + r.G_v * std::cos(a.beta);
  return hj;
}

InnerProducts inner_products_HJ(const FlowState& s, double epsilon, const GasModel& g) {
  return inner_products_HJ(s, freestream_from_epsilon(epsilon, g), g);
}

double polar_v_of_u(double u, const FreeStream& fs, const GasModel& g) {
  // G is increasing in v for v > 0, and tends to +inf towards the vacuum circle when eps > 0
  const double g0 = polar_residual(FlowState{u, 0.0}, fs, g).G;
  if (g0 > 0.0) fail(Errc::NotOnPolar, "no polar point above this u");
  if (g0 == 0.0) return 0.0;
  double lo = 0.0, hi = std::sqrt(std::max(g.qbar * g.qbar - u * u, 0.0)) * (1.0 - 1e-15);
  if (polar_residual(FlowState{u, hi}, fs, g).G < 0.0) fail(Errc::NotOnPolar, "polar leaves the vacuum disc");
  double v = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const PolarResidual r = polar_residual(FlowState{u, v}, fs, g);
    if (r.G == 0.0) return v;
    if (r.G > 0.0) hi = v; else lo = v;
    double vn = r.G_v != 0.0 ? v - r.G / r.G_v : 0.5 * (lo + hi);
    if (!(vn > lo && vn < hi)) vn = 0.5 * (lo + hi);
    if (std::abs(vn - v) <= 2e-16 * std::max(v, 1e-300) || hi - lo <= 2e-16 * v) return vn;
    v = vn;
  }
  return v;
}

namespace {

bool trace_continues(double u, const FreeStream& fs, const GasModel& g) {
  const double v = polar_v_of_u(u, fs, g);
  const FlowState s{u, v};
  const PolarResidual r = polar_residual(s, fs, g);
  return r.G_u > 0.0 && s.q2() > g.c2_of_q2(s.q2());
}

}  // namespace

std::vector<PolarPoint> polar_trace(double epsilon, const GasModel& g, int n) {
  if (n < 2) fail(Errc::ValidationError, "polar_trace needs n >= 2");
  const FreeStream fs = freestream_from_epsilon(epsilon, g);
  const double ub = fs.u_inf;
  // locate the end of the weak supersonic arc on which v grows as u falls
  const int scan = 4000;
  double u_ok = ub, u_bad = ub;
  bool found = false;
  for (int k = 1; k <= scan; ++k) {
    const double u = ub * (1.0 - double(k) / scan);
    bool cont = false;
    try { cont = trace_continues(u, fs, g); } catch (const Error&) { cont = false; }
    if (!cont) { u_bad = u; found = true; break; }
    u_ok = u;
  }
  if (!found) u_bad = 0.0;
  for (int it = 0; it < 200 && u_ok - u_bad > 1e-15; ++it) {
    const double mid = 0.5 * (u_ok + u_bad);
    bool cont = false;
    try { cont = trace_continues(mid, fs, g); } catch (const Error&) { cont = false; }
    if (cont) u_ok = mid; else u_bad = mid;
  }
  const double u_end = u_ok;

  std::vector<PolarPoint> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    PolarPoint p;
    p.epsilon = epsilon;
    const double u = k == 0 ? ub : (k == n - 1 ? u_end : ub + (u_end - ub) * double(k) / (n - 1));
    const double v = k == 0 ? 0.0 : polar_v_of_u(u, fs, g);
    p.state = FlowState{u, v};
    const PolarResidual r = polar_residual(p.state, fs, g);
    p.G_value = r.G;
    p.G_u = r.G_u;
    p.G_v = r.G_v;
    p.G_eps = r.G_eps;
    p.s_angle = p.k_angle = p.g_value = p.t_plus = p.t_minus = p.H = p.J = kNaN;
    try { p.s_angle = shock_angle(p.state, fs, g); } catch (const Error&) {}
    try {
      const Reflection rf = reflection_coeff_g(p.state, fs, g);
      p.k_angle = rf.k_angle;
      p.g_value = rf.g_value;
      p.t_plus = rf.t_plus;
      p.t_minus = rf.t_minus;
    } catch (const Error&) {
      if (r.G_v != 0.0) p.k_angle = std::atan(-r.G_u / r.G_v);
    }
    try {
      const InnerProducts hj = inner_products_HJ(p.state, fs, g);
      p.H = hj.H;
      p.J = hj.J;
    } catch (const Error&) {}
    out.push_back(p);
  }
  return out;
}

}  // namespace sl

#include "shocklayer/moc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shocklayer/charkern.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

namespace {

constexpr int kMaxPasses = 10;
constexpr double kStateTol = 1e-12;

double state_change(const FlowState& a, const FlowState& b) {
  return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
}

// intersection of y = ya + sa (x - xa) and y = yb + sb (x - xb)
Point2 intersect_lines(double xa, double ya, double sa, double xb, double yb, double sb) {
  const double x = (yb - ya + sa * xa - sb * xb) / (sa - sb);
  return {x, ya + sa * (x - xa)};
}

bool forward_of(const NetPoint& from, double theta, Point2 p) {
  return (p.x - from.x) * std::cos(theta) + (p.y - from.y) * std::sin(theta) > 0.0;
}

}  // namespace

void validate_run_config(const RunConfig& cfg) {
  if (cfg.n_across < 3) fail(Errc::ValidationError, "n_across must be >= 3");
  if (!(cfg.x_start > 0.0 && cfg.x_start < cfg.x_max)) fail(Errc::ValidationError, "need 0 < x_start < x_max");
  if (cfg.corrector_passes < 0 || cfg.corrector_passes > kMaxPasses)
    fail(Errc::ValidationError, "corrector_passes must lie in [0, 10]");
  if (!(cfg.epsilon >= 0.0)) fail(Errc::ValidationError, "epsilon must be >= 0");
}

NetPoint interior_point(const NetPoint& a, const NetPoint& b, const GasModel& g, UnitOptions opt) {
  const CharAngles ca = char_angles(a.state, g), cb = char_angles(b.state, g);
  double sp = ca.lambda_plus, sm = cb.lambda_minus;  // position slopes
  double A = ca.lambda_minus, B = cb.lambda_plus;    // compatibility coefficients
  NetPoint P;
  FlowState prev{1e300, 1e300};
  bool converged = false;
  for (int pass = 0; pass <= kMaxPasses; ++pass) {
    if (!(sp > sm)) fail(Errc::ShockFormation, "C+ and C- slopes out of order");
    const Point2 xy = intersect_lines(a.x, a.y, sp, b.x, b.y, sm);
    P.x = xy.x;
    P.y = xy.y;
    // (u - ua) + A (v - va) = 0, (u - ub) + B (v - vb) = 0
    const double v = (a.state.u - b.state.u + A * a.state.v - B * b.state.v) / (A - B);
    const double u = a.state.u - A * (v - a.state.v);
    P.state = FlowState{u, v};
    const double change = state_change(P.state, prev);
    prev = P.state;
    if (pass >= std::max(opt.corrector_passes, 1) && change < kStateTol) { converged = true; break; }
    const CharAngles cp = char_angles(P.state, g);
    sp = 0.5 * (ca.lambda_plus + cp.lambda_plus);
    sm = 0.5 * (cb.lambda_minus + cp.lambda_minus);
    A = 0.5 * (ca.lambda_minus + cp.lambda_minus);
    B = 0.5 * (cb.lambda_plus + cp.lambda_plus);
  }
  if (!converged) fail(Errc::CorrectorStall, "interior point corrector did not converge");
  if (!forward_of(a, ca.alpha, {P.x, P.y}) || !forward_of(b, cb.beta, {P.x, P.y}))
    fail(Errc::CharacteristicsDiverge, "characteristics meet behind their feet");
  char_angles(P.state, g);
  return P;
}

NetPoint wall_point(const NetPoint& b, const WedgeProfile& w, const GasModel& g, UnitOptions opt) {
  const CharAngles cb = char_angles(b.state, g);
  double sm = cb.lambda_minus, B = cb.lambda_plus;
  NetPoint P;
  FlowState prev{1e300, 1e300};
  bool converged = false;
  double x = std::max(b.x, 0.0);
  for (int pass = 0; pass <= kMaxPasses; ++pass) {
    // f(x) = yb + sm (x - xb)
    bool hit = false;
    for (int it = 0; it < 100; ++it) {
      const double h = w.f(x) - b.y - sm * (x - b.x);
      const double dh = w.fp(x) - sm;
      if (!(dh > 0.0)) break;
      double xn = x - h / dh;
      if (xn < 0.0) xn = 0.5 * x;
      if (std::abs(xn - x) <= 1e-15 * (1.0 + std::abs(x))) { x = xn; hit = true; break; }
      x = xn;
    }
    if (!hit) fail(Errc::CharacteristicMissesWall, "C- does not reach the wall");
    P.x = x;
    P.y = w.f(x);
    const double fw = w.fp(x);
    const double u = (b.state.u + B * b.state.v) / (1.0 + B * fw);
    P.state = FlowState{u, u * fw};
    const double change = state_change(P.state, prev);
    prev = P.state;
    if (pass >= std::max(opt.corrector_passes, 1) && change < kStateTol) { converged = true; break; }
    const CharAngles cp = char_angles(P.state, g);
    sm = 0.5 * (cb.lambda_minus + cp.lambda_minus);
    B = 0.5 * (cb.lambda_plus + cp.lambda_plus);
  }
  if (!converged) fail(Errc::CorrectorStall, "wall point corrector did not converge");
  if (!forward_of(b, cb.beta, {P.x, P.y})) fail(Errc::CharacteristicMissesWall, "wall hit behind the foot");
  return P;
}

namespace {

// G(U) = 0 and (u - ua) + A (v - va) = 0
FlowState shock_newton(const FlowState& start, const FlowState& a, double A, const FreeStream& fs,
                       const GasModel& g) {
  FlowState s = start;
  for (int it = 0; it < 50; ++it) {
    const PolarResidual r = polar_residual(s, fs, g);
    const double F1 = r.G;
    const double F2 = (s.u - a.u) + A * (s.v - a.v);
    const double det = r.G_u * A - r.G_v;
    if (det == 0.0 || !std::isfinite(det)) fail(Errc::NewtonDiverged, "singular shock Jacobian");
    const double du = (F1 * A - r.G_v * F2) / det;
    const double dv = (r.G_u * F2 - F1) / det;
    FlowState nxt{s.u - du, s.v - dv};
    // keep the iterate inside the vacuum disc
    double damp = 1.0;
    while (nxt.q2() >= g.qbar * g.qbar && damp > 1e-6) {
      damp *= 0.5;
      nxt = FlowState{s.u - damp * du, s.v - damp * dv};
    }
    s = nxt;
    if (std::max(std::abs(du), std::abs(dv)) < 1e-13) {
      const PolarResidual rr = polar_residual(s, fs, g);
      if (std::abs(rr.G) < 1e-13 || std::max(std::abs(du), std::abs(dv)) < 1e-15) return s;
    }
  }
  fail(Errc::NewtonDiverged, "shock-point Newton did not converge in 50 iterations");
}

}  // namespace

std::pair<NetPoint, ShockNode> shock_point(const NetPoint& a, const ShockNode& s_prev, const FreeStream& fs,
                                           const GasModel& g, UnitOptions opt) {
  const CharAngles ca = char_angles(a.state, g);
  double sp = ca.lambda_plus, A = ca.lambda_minus, ss = s_prev.slope;
  NetPoint P;
  ShockNode node;
  FlowState prev{1e300, 1e300};
  FlowState guess = s_prev.state;
  bool converged = false;
  const StateQuantities sq_inf = state_quantities(FlowState{fs.u_inf, 0.0}, g);
  for (int pass = 0; pass <= kMaxPasses; ++pass) {
    if (!(sp > ss)) fail(Errc::CharacteristicsDiverge, "C+ does not catch the shock");
    const Point2 xy = intersect_lines(a.x, a.y, sp, s_prev.x, s_prev.y, ss);
    if (!(xy.x > s_prev.x) || !forward_of(a, ca.alpha, xy))
      fail(Errc::CharacteristicsDiverge, "C+ meets the shock behind the previous node");
    P.x = xy.x;
    P.y = xy.y;
    P.state = shock_newton(guess, a.state, A, fs, g);
    guess = P.state;
    const double change = state_change(P.state, prev);
    prev = P.state;
    if (pass >= std::max(opt.corrector_passes, 1) && change < kStateTol) { converged = true; break; }
    const CharAngles cp = char_angles(P.state, g);
    const double slope_new = std::tan(shock_angle(P.state, fs, g));
    sp = 0.5 * (ca.lambda_plus + cp.lambda_plus);
    A = 0.5 * (ca.lambda_minus + cp.lambda_minus);
    ss = 0.5 * (s_prev.slope + slope_new);
  }
  if (!converged) fail(Errc::CorrectorStall, "shock point corrector did not converge");
  if (std::hypot(P.state.u - fs.u_inf, P.state.v) < 1e-10)
    fail(Errc::ShockDegenerate, "shock collapsed to the freestream state");
  if (!(state_quantities(P.state, g).p > sq_inf.p)) fail(Errc::EntropyViolation, "p <= p_inf behind the shock");
  char_angles(P.state, g);
  node.x = P.x;
  node.y = P.y;
  node.state = P.state;
  node.slope = std::tan(shock_angle(P.state, fs, g));
  return {P, node};
}

Seed seed_tip(const RunConfig& cfg) {
  validate_run_config(cfg);
  const GasModel& g = cfg.gas;
  const FreeStream fs = freestream_from_epsilon(cfg.epsilon, g);
  const WedgeProfile& w = cfg.wedge;
  Seed sd;
  sd.tip_state = downstream_from_ray(std::atan(w.fp(0.0)), fs, g);
  char_angles(sd.tip_state, g);
  const double s0 = shock_angle(sd.tip_state, fs, g);
  const double ts = std::tan(s0);
  const WallPointFrame fr = eval_profile(w, cfg.x_start);
  const double sq = std::sqrt(1.0 + fr.fp * fr.fp);
  const double nx = -fr.fp / sq, ny = 1.0 / sq;
  // W + t n on the ray y = ts x
  const double t = (ts * fr.x - fr.y) / (ny - ts * nx);
  if (!(t > 0.0)) fail(Errc::DetachedShock, "tip shock ray lies below the wall");
  const int n = cfg.n_across;
  for (int j = 0; j < n; ++j) {
    NetPoint p;
    const double e = t * double(j) / (n - 1);
    p.x = fr.x + e * nx;
    p.y = fr.y + e * ny;
    if (j == 0) { p.x = fr.x; p.y = fr.y; }
    p.state = sd.tip_state;
    p.xi = fr.xi;
    p.eta = e;
    p.line_index = 0;
    p.point_index = j;
    sd.line.points.push_back(p);
  }
  sd.tip = ShockNode{0.0, 0.0, ts, sd.tip_state};
  const NetPoint& top = sd.line.points.back();
  sd.top = ShockNode{top.x, top.y, ts, sd.tip_state};
  return sd;
}

namespace {

// Monotone cubic Hermite through (t_k, y_k). Slopes come from the parabola through the three
// nearest nodes and are clipped by Hyman's filter where the data are monotone.
// The line is re-gridded every step, so interpolation error compounds: harmonic-mean slopes
// leave O(1) noise in the gradients, and wider (quartic) stencils make the march unstable.
struct Pchip {
  std::vector<double> t, y, d;
  Pchip(std::vector<double> tt, std::vector<double> yy) : t(std::move(tt)), y(std::move(yy)) {
    const size_t n = t.size();
    d.assign(n, 0.0);
    std::vector<double> del(n - 1);
    for (size_t k = 0; k + 1 < n; ++k) del[k] = (y[k + 1] - y[k]) / (t[k + 1] - t[k]);
    const size_t m = std::min<size_t>(3, n);
    for (size_t k = 0; k < n; ++k) {
      const size_t j0 = std::min(k >= m / 2 ? k - m / 2 : 0, n - m);
      // derivative at t_k of the Lagrange polynomial through nodes j0 .. j0+m-1
      double dk = 0.0;
      for (size_t j = j0; j < j0 + m; ++j) {
        double w;
        if (j == k) {
          w = 0.0;
          for (size_t l = j0; l < j0 + m; ++l)
            if (l != k) w += 1.0 / (t[k] - t[l]);
        } else {
          double num = 1.0, den = 1.0;
          for (size_t l = j0; l < j0 + m; ++l) {
            if (l == j) continue;
            den *= t[j] - t[l];
            if (l != k) num *= t[k] - t[l];
          }
          w = num / den;
        }
        dk += w * y[j];
      }
      d[k] = dk;
    }
    for (size_t k = 0; k < n; ++k) {
      const double lo = k > 0 ? del[k - 1] : del[0];
      const double hi = k + 1 < n ? del[k] : del[n - 2];
      if (lo * hi <= 0.0) continue;  // local extremum: keep the smooth slope
      const double lim = 3.0 * std::min(std::abs(lo), std::abs(hi));
      const double sg = lo > 0.0 ? 1.0 : -1.0;
      if (d[k] * sg < 0.0) d[k] = 0.0;
      else if (std::abs(d[k]) > lim) d[k] = lim * sg;
    }
  }
  double operator()(double tq) const {
    size_t k = static_cast<size_t>(std::upper_bound(t.begin(), t.end(), tq) - t.begin());
    k = std::clamp<size_t>(k, 1, t.size() - 1) - 1;
    const double hk = t[k + 1] - t[k], s = (tq - t[k]) / hk;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * y[k] + h10 * hk * d[k] + h01 * y[k + 1] + h11 * hk * d[k + 1];
  }
};

// largest relative departure of a chord from the mean chord
double spacing_drift(const DataLine& l) {
  const size_t n = l.points.size();
  std::vector<double> ds(n - 1);
  double mean = 0.0;
  for (size_t k = 0; k + 1 < n; ++k) {
    ds[k] = std::hypot(l.points[k + 1].x - l.points[k].x, l.points[k + 1].y - l.points[k].y);
    mean += ds[k] / double(n - 1);
  }
  double m = 0.0;
  for (double d : ds) m = std::max(m, std::abs(d / mean - 1.0));
  return m;
}

DataLine regrid_line(const DataLine& in) {
  const size_t n = in.points.size();
  std::vector<double> s(n, 0.0), xs(n), ys(n), us(n), vs(n);
  for (size_t k = 0; k < n; ++k) {
    const NetPoint& p = in.points[k];
    if (k > 0) s[k] = s[k - 1] + std::hypot(p.x - in.points[k - 1].x, p.y - in.points[k - 1].y);
    xs[k] = p.x;
    ys[k] = p.y;
    us[k] = p.state.u;
    vs[k] = p.state.v;
  }
  const Pchip px(s, xs), py(s, ys), pu(s, us), pv(s, vs);
  DataLine out = in;
  for (size_t k = 1; k + 1 < n; ++k) {
    const double t = s[n - 1] * double(k) / double(n - 1);
    NetPoint& p = out.points[k];
    p.x = px(t);
    p.y = py(t);
    p.state = FlowState{pu(t), pv(t)};
  }
  return out;
}

// Point at chord parameter sg on the quadratic through poly[j0 .. j0+2].
NetPoint quad_on_poly(const std::vector<NetPoint>& poly, size_t j0, const double* s, double sg) {
  double w[3];
  for (int a = 0; a < 3; ++a) {
    w[a] = 1.0;
    for (int b = 0; b < 3; ++b)
      if (b != a) w[a] *= (sg - s[b]) / (s[a] - s[b]);
  }
  NetPoint p = poly[j0 + 1];
  p.x = p.y = 0.0;
  p.state = FlowState{0.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    const NetPoint& q = poly[j0 + a];
    p.x += w[a] * q.x;
    p.y += w[a] * q.y;
    p.state.u += w[a] * q.state.u;
    p.state.v += w[a] * q.state.v;
  }
  return p;
}

// foot of the backward C+ from T on the polyline, searched from its top end; the hit on the
// chord is refined on the local quadratic so the foot state is third-order accurate
bool backward_foot(const std::vector<NetPoint>& poly, Point2 T, double slope, NetPoint& foot) {
  for (size_t k = poly.size() - 1; k >= 1; --k) {
    const NetPoint& p0 = poly[k - 1];
    const NetPoint& p1 = poly[k];
    // p0 + r (p1 - p0) on the line through T with the given slope
    const double dx = p1.x - p0.x, dy = p1.y - p0.y;
    const double den = dy - slope * dx;
    if (den != 0.0) {
      const double r = (T.y - p0.y - slope * (T.x - p0.x)) / den;
      if (r >= 0.0 && r <= 1.0) {
        foot = p0;
        foot.x = p0.x + r * dx;
        foot.y = p0.y + r * dy;
        foot.state = FlowState{p0.state.u + r * (p1.state.u - p0.state.u),
                               p0.state.v + r * (p1.state.v - p0.state.v)};
        if (poly.size() >= 3) {
          const size_t j0 = std::min(k >= 2 ? k - 2 : 0, poly.size() - 3);
          double sj[3] = {0.0, 0.0, 0.0};
          for (int a = 1; a < 3; ++a)
            sj[a] = sj[a - 1] + std::hypot(poly[j0 + a].x - poly[j0 + a - 1].x, poly[j0 + a].y - poly[j0 + a - 1].y);
          const double sk0 = sj[k - 1 - j0];
          const double sk1 = sj[k - j0];
          double sg = sk0 + r * (sk1 - sk0);
          const double hs = 1e-7 * (sk1 - sk0);
          auto phi = [&](double sv) {
            const NetPoint c = quad_on_poly(poly, j0, sj, sv);
            return (c.y - T.y) - slope * (c.x - T.x);
          };
          for (int it = 0; it < 8; ++it) {
            const double f0 = phi(sg);
            const double df = (phi(sg + hs) - phi(sg - hs)) / (2.0 * hs);
            if (df == 0.0) break;
            const double step = f0 / df;
            sg -= step;
            if (std::abs(step) < 1e-15 * (sk1 - sk0)) break;
          }
          if (sg >= sj[0] && sg <= sj[2]) {
            const NetPoint c = quad_on_poly(poly, j0, sj, sg);
            foot.x = c.x;
            foot.y = c.y;
            foot.state = c.state;
          }
        }
        return foot.x < T.x;
      }
    }
  }
  return false;
}

std::string where(int line, int idx) {
  std::ostringstream os;
  os << " [line " << line << ", index " << idx << "]";
  return os.str();
}

}  // namespace

double line_mass_flux(const DataLine& line, const GasModel& g) {
  // integral of rho (u dy - v dx) with the trapezoidal rule
  double flux = 0.0;
  for (size_t k = 1; k < line.points.size(); ++k) {
    const NetPoint& a = line.points[k - 1];
    const NetPoint& b = line.points[k];
    const double ra = state_quantities(a.state, g).rho, rb = state_quantities(b.state, g).rho;
    const double dx = b.x - a.x, dy = b.y - a.y;
    flux += 0.5 * ((ra * a.state.u + rb * b.state.u) * dy - (ra * a.state.v + rb * b.state.v) * dx);
  }
  return flux;
}

MarchResult march(const RunConfig& cfg) {
  MarchResult res;
  const GasModel& g = cfg.gas;
  const WedgeProfile& w = cfg.wedge;
  res.fs = freestream_from_epsilon(cfg.epsilon, g);
  const FreeStream& fs = res.fs;
  Seed sd = seed_tip(cfg);
  res.tip_state = sd.tip_state;
  res.net.lines.push_back(sd.line);
  res.shock.nodes.push_back(sd.tip);
  res.shock.nodes.push_back(sd.top);
  const UnitOptions opt{cfg.corrector_passes};
  const int n = cfg.n_across;
  int stage_line = 0, stage_idx = 0;
  try {
    for (int line = 1;; ++line) {
      const DataLine& L = res.net.lines.back();
      if (L.points.front().x >= cfg.x_max) break;
      if (cfg.max_lines > 0 && line > cfg.max_lines) break;
      stage_line = line;
      // half line between L and the next line
      std::vector<NetPoint> M(n - 1);
      for (int i = 0; i + 1 < n; ++i) {
        stage_idx = i;
        M[i] = interior_point(L.points[i], L.points[i + 1], g, opt);
      }
      DataLine next;
      next.points.resize(n);
      stage_idx = 0;
      next.points[0] = wall_point(M[0], w, g, opt);
      for (int i = 0; i + 2 < n; ++i) {
        stage_idx = i + 1;
        next.points[i + 1] = interior_point(M[i], M[i + 1], g, opt);
      }
      stage_idx = n - 1;
      const ShockNode& sp = res.shock.nodes.back();
      // place the shock point where the new line, extended, meets the shock
      const NetPoint& q1 = next.points[n - 2];
      const NetPoint& q0 = next.points[n - 3];
      const double dx = q1.x - q0.x, dy = q1.y - q0.y;
      const double den = dy - sp.slope * dx;
      bool placed = false;
      std::pair<NetPoint, ShockNode> sh;
      if (den != 0.0) {
        const double t = (sp.y + sp.slope * (q1.x - sp.x) - q1.y) / den;
        const Point2 T{q1.x + t * dx, q1.y + t * dy};
        std::vector<NetPoint> poly(M.begin(), M.end());
        NetPoint top;
        top.x = sp.x;
        top.y = sp.y;
        top.state = sp.state;
        poly.push_back(top);
        NetPoint foot;
        if (t > 0.0 && T.x > sp.x &&
            backward_foot(poly, T, char_angles(sp.state, g).lambda_plus, foot)) {
          sh = shock_point(foot, sp, fs, g, opt);
          const double lam = 0.5 * (char_angles(foot.state, g).lambda_plus +
                                    char_angles(sh.first.state, g).lambda_plus);
          if (backward_foot(poly, T, lam, foot)) sh = shock_point(foot, sp, fs, g, opt);
          placed = true;
        }
      }
      if (!placed) sh = shock_point(M[n - 2], sp, fs, g, opt);
      next.points[n - 1] = sh.first;
      if (cfg.regrid && spacing_drift(next) > cfg.regrid_threshold) next = regrid_line(next);

      double hint = L.points.front().x;
      for (int i = 0; i < n; ++i) {
        NetPoint& p = next.points[i];
        stage_idx = i;
        p.line_index = line;
        p.point_index = i;
        if (i == 0) {
          const WallPointFrame fr = eval_profile(w, p.x);
          p.xi = fr.xi;
          p.eta = 0.0;
        } else {
          const WallProjection pr = project_to_wall(w, {p.x, p.y}, hint);
          p.xi = pr.xi;
          p.eta = pr.eta;
          hint = pr.foot.x;
          if (!(p.eta > next.points[i - 1].eta))
            fail(Errc::ShockFormation, "data line folds: eta not increasing");
        }
        char_angles(p.state, g);
      }
      res.shock.nodes.push_back(sh.second);
      res.net.lines.push_back(std::move(next));
    }
    res.complete = true;
  } catch (const Error& e) {
    res.has_error = true;
    res.error_code = e.code();
    res.error_message = std::string(e.what()) + where(stage_line, stage_idx);
  }
  return res;
}

}  // namespace sl

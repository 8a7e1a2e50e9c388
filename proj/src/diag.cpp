#include "shocklayer/diag.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "shocklayer/charkern.hpp"
#include "shocklayer/limitsol.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

namespace {

void keep_max(double& m, double v) {
  if (std::isnan(v) || v > m) m = v;
}

double node_xi(const WedgeProfile& w, const ShockNode& n) { return project_to_wall(w, {n.x, n.y}).xi; }

double pressure(const FlowState& s, const GasModel& g) { return state_quantities(s, g).p; }

}  // namespace

DiagWindow default_window(const RunConfig& cfg) {
  DiagWindow win;
  win.xi_min = cfg.wedge.xi(10.0 * cfg.x_start);
  return win;
}

std::vector<int> lines_in_window(const CharNet& net, const DiagWindow& win) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(net.lines.size()); ++k) {
    const double xi = net.lines[k].points.front().xi;
    if (xi >= win.xi_min && xi <= win.xi_max) out.push_back(k);
  }
  return out;
}

std::vector<ThicknessRow> layer_thickness_report(const CharNet& net, const ShockFront& shock, const WedgeProfile& w,
                                                 const FreeStream& fs, const DiagWindow& win) {
  if (!(fs.epsilon > 0.0)) fail(Errc::VacuumFreestream, "thickness normalisation needs epsilon > 0");
  std::vector<ThicknessRow> rows;
  const auto& s = shock.nodes;
  std::size_t j0 = 0;
  for (int k : lines_in_window(net, win)) {
    const NetPoint& W = net.lines[k].points.front();
    const double fp = w.fp(W.x);
    const double nn = std::hypot(fp, 1.0);
    const double nx = -fp / nn, ny = 1.0 / nn;
    auto side = [&](const ShockNode& p) { return nx * (p.y - W.y) - ny * (p.x - W.x); };
    bool found = false;
    // the crossing moves forward monotonically with k, so resume the search
    for (std::size_t j = j0; j + 1 < s.size(); ++j) {
      const double d0 = side(s[j]), d1 = side(s[j + 1]);
      if (d0 == 0.0 || (d0 > 0.0) != (d1 > 0.0)) {
        const double t = d0 == d1 ? 0.0 : d0 / (d0 - d1);
        const double px = s[j].x + t * (s[j + 1].x - s[j].x);
        const double py = s[j].y + t * (s[j + 1].y - s[j].y);
        ThicknessRow r;
        r.xi = W.xi;
        r.thickness = nx * (px - W.x) + ny * (py - W.y);
        r.normalized = r.thickness / (fs.epsilon * W.xi);
        rows.push_back(r);
        j0 = j;
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return rows;
}

std::vector<DecayRow> derivative_decay_report(const CharNet& net, const GasModel& g, const DiagWindow& win) {
  const auto ks = lines_in_window(net, win);
  if (ks.size() < 20) fail(Errc::InsufficientLines, "need 20 lines beyond the seed region, have " + std::to_string(ks.size()));
  const NetField field(net, g);
  std::vector<DecayRow> rows;
  for (int k : ks) {
    DecayRow r;
    r.xi = net.lines[k].points.front().xi;
    const auto& pts = net.lines[k].points;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const CharDerivs d = field.derivs(k, i);
      keep_max(r.plus, pts[i].xi * std::abs(d.dplus_c));
      keep_max(r.minus, pts[i].xi * std::abs(d.dminus_c));
    }
    rows.push_back(r);
  }
  return rows;
}

bool decay_tail_decreasing(const std::vector<DecayRow>& rows) {
  if (rows.size() < 2) return false;
  const double X = rows.back().xi;
  std::size_t i0 = 0;
  while (i0 + 1 < rows.size() && rows[i0].xi < X / 10.0) ++i0;
  return rows.back().plus <= rows[i0].plus && rows.back().minus <= rows[i0].minus;
}

TailEstimate tail_extrapolate(const std::vector<double>& xi, const std::vector<double>& val,
                             const std::function<double(double)>& gauge) {
  TailEstimate t;
  if (xi.empty()) return t;
  const double X = *std::max_element(xi.begin(), xi.end());
  t.last = val.back();
  t.value = t.last;
  const double lo[3] = {X / 8.0, X / 4.0, X / 2.0};
  const double hi[3] = {X / 4.0, X / 2.0, X * (1.0 + 1e-15)};
  double gm[3] = {0.0, 0.0, 0.0};
  bool gauge_ok = static_cast<bool>(gauge);
  for (int w = 0; w < 3; ++w) {
    double sum = 0.0, gsum = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < xi.size(); ++i)
      if (xi[i] >= lo[w] && xi[i] < hi[w]) {
        sum += val[i];
        if (gauge_ok) gsum += gauge(xi[i]);
        ++n;
      }
    if (n == 0) return t;
    t.window_means[w] = sum / n;
    gm[w] = gsum / n;
  }
  const double d1 = t.window_means[1] - t.window_means[0];
  const double d2 = t.window_means[2] - t.window_means[1];
  t.value = t.window_means[2];
  if (gauge_ok && std::isfinite(gm[0]) && gm[0] > gm[1] && gm[1] > gm[2] && gm[2] > 0.0) {
    // Richardson with a known rate: val = L + A gauge on the last two windows;
    // the first pair gives the companion estimate
    t.ratio = gm[2] / gm[1];
    t.value = t.window_means[2] - d2 * gm[2] / (gm[2] - gm[1]);
    t.companion = t.window_means[1] - d1 * gm[1] / (gm[1] - gm[0]);
    t.gauged = true;
    t.extrapolated = true;
    return t;
  }
  if (d1 != 0.0) {
    t.ratio = d2 / d1;
    // only accelerate a geometric-looking tail
    if (t.ratio > 0.0 && t.ratio < 0.9) {
      t.value = t.window_means[2] + d2 * t.ratio / (1.0 - t.ratio);
      t.extrapolated = true;
    }
  }
  t.companion = t.value;
  return t;
}

std::function<double(double)> far_field_gauge(const WedgeProfile& w) {
  if (w.f_infty() != 0.0) return {};
  // Wall slope ~ b x^-a feeds a weak shock; the equal-area rule then gives a strength
  // ~ x^(-a/(1+a)) for a < 1, sqrt(ln x / x) at a = 1 and x^(-1/2) once the feed is integrable.
  double a = 1.0;
  switch (w.family()) {
    case WedgeFamily::LogBullet: a = 1.0; break;
    case WedgeFamily::PowerDecayBend: a = w.params()[2]; break;
    case WedgeFamily::OscillatoryBend: a = 1.0 + w.params()[2]; break;
    case WedgeFamily::Straight: return {};
  }
  if (std::abs(a - 1.0) < 1e-12)
    return [](double x) { return x > 1.0 ? std::sqrt(std::log(x) / x) : std::nan(""); };
  const double p = a < 1.0 ? a / (1.0 + a) : 0.5;
  return [p](double x) { return std::pow(x, -p); };
}

AsymptoteReport asymptotic_report(const CharNet& net, const ShockFront& shock, const WedgeProfile& w,
                                  const FreeStream& fs, const GasModel& g, const DiagWindow& win) {
  AsymptoteReport a;
  const double finf = w.f_infty();
  if (finf > 0.0) {
    const FlowState s = downstream_from_ray(std::atan(finf), fs, g);
    a.predicted_u = s.u;
    a.predicted_v = s.v;
    a.predicted_slope = (fs.u_inf - s.u) / s.v;
  } else {
    a.predicted_u = fs.u_inf;
    a.predicted_v = 0.0;
    a.predicted_slope = fs.c_inf / std::sqrt(fs.u_inf * fs.u_inf - fs.c_inf * fs.c_inf);
  }
  std::vector<double> xs, us, vs;
  for (int k : lines_in_window(net, win)) {
    const auto& pts = net.lines[k].points;
    double su = 0.0, sv = 0.0;
    for (const auto& p : pts) {
      su += p.state.u;
      sv += p.state.v;
    }
    xs.push_back(pts.front().xi);
    us.push_back(su / pts.size());
    vs.push_back(sv / pts.size());
  }
  std::vector<double> sx, ss;
  for (std::size_t j = 1; j < shock.nodes.size(); ++j) {
    const double xi = node_xi(w, shock.nodes[j]);
    if (xi < win.xi_min || xi > win.xi_max) continue;
    sx.push_back(xi);
    ss.push_back(shock.nodes[j].slope);
  }
  const auto gauge = far_field_gauge(w);
  const TailEstimate tu = tail_extrapolate(xs, us, gauge), tv = tail_extrapolate(xs, vs, gauge),
                     ts = tail_extrapolate(sx, ss, gauge);
  a.computed_u = tu.value;
  a.computed_v = tv.value;
  a.computed_slope = ts.value;
  a.last_u = tu.last;
  a.last_v = tv.last;
  a.last_slope = ts.last;
  a.extrapolated = tu.extrapolated || tv.extrapolated || ts.extrapolated;
  a.err_u = std::abs(a.computed_u - a.predicted_u);
  a.err_v = std::abs(a.computed_v - a.predicted_v);
  a.err_slope = std::abs(a.computed_slope - a.predicted_slope);
  return a;
}

RelationResiduals relation_residuals(const CharNet& net, const WedgeProfile& w, const FreeStream& fs,
                                     const GasModel& g, const DiagWindow& win) {
  RelationResiduals r;
  const NetField field(net, g);
  double sw = 0.0, ss = 0.0;
  for (int k : lines_in_window(net, win)) {
    const auto& pts = net.lines[k].points;
    const int last = static_cast<int>(pts.size()) - 1;
    {
      const NetPoint& p = pts.front();
      const CharDerivs d = field.derivs(k, 0);
      const double src = (g.gamma - 1.0) * p.state.q() * eval_profile(w, p.x).curvature;
      const double res = d.dminus_c - d.dplus_c - src;
      keep_max(r.wall_max, std::abs(res));
      keep_max(r.wall_scale, std::abs(src));
      sw += res * res;
      ++r.n_wall;
    }
    {
      const NetPoint& p = pts[last];
      const CharDerivs d = field.derivs(k, last);
      const double gv = reflection_coeff_g(p.state, fs, g).g_value;
      const double res = d.dplus_c - gv * d.dminus_c;
      keep_max(r.shock_max, std::abs(res));
      keep_max(r.shock_scale, std::abs(d.dplus_c));
      ss += res * res;
      ++r.n_shock;
    }
  }
  if (r.n_wall) r.wall_rms = std::sqrt(sw / r.n_wall);
  if (r.n_shock) r.shock_rms = std::sqrt(ss / r.n_shock);
  return r;
}

DecompositionNorms decomposition_report(const CharNet& net, const GasModel& g, const DiagWindow& win,
                                        double h_factor) {
  DecompositionNorms out;
  const NetField field(net, g);
  double sp = 0.0, sm = 0.0;
  for (int k : lines_in_window(net, win)) {
    const auto& pts = net.lines[k].points;
    for (int i = 1; i + 1 < static_cast<int>(pts.size()); ++i) {
      const double h = h_factor * field.spacing(k, i);
      const DecompositionResidual d =
          decomposition_residual(field.local_field(k, i), pts[i].x, pts[i].y, h, g);
      keep_max(out.max_plus, std::abs(d.r_plus));
      keep_max(out.max_minus, std::abs(d.r_minus));
      sp += d.r_plus * d.r_plus;
      sm += d.r_minus * d.r_minus;
      ++out.count;
    }
  }
  if (out.count) {
    out.rms_plus = std::sqrt(sp / out.count);
    out.rms_minus = std::sqrt(sm / out.count);
  }
  return out;
}

TrendReport formal_derivative_trend(const std::vector<std::pair<double, const MarchResult*>>& runs,
                                    const WedgeProfile& w, const GasModel& g, double xi0) {
  if (runs.size() < 3) fail(Errc::InsufficientSweep, "formal derivative trend needs at least 3 epsilon values");
  TrendReport t;
  for (const auto& [eps, res] : runs) {
    const CharNet& net = res->net;
    int best = -1;
    double gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < static_cast<int>(net.lines.size()); ++k) {
      const double d = std::abs(net.lines[k].points.front().xi - xi0);
      if (d < gap) {
        gap = d;
        best = k;
      }
    }
    if (best < 0) fail(Errc::InsufficientLines, "empty net in sweep");
    const NetField field(net, g);
    const auto& pts = net.lines[best].points;
    const FormalDerivatives fd = formal_derivatives(w, pts.front().x, g);
    TrendRow row;
    row.epsilon = eps;
    row.xi = pts.front().xi;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const CharDerivs d = field.derivs(best, i);
      keep_max(row.err_plus, std::abs(d.dplus_c - fd.dplus_c));
      keep_max(row.err_minus, std::abs(d.dminus_c - fd.dminus_c));
    }
    t.rows.push_back(row);
  }
  // least-squares slope of log err against log eps
  auto slope = [&](auto get) {
    double mx = 0.0, my = 0.0;
    const double n = static_cast<double>(t.rows.size());
    for (const auto& r : t.rows) {
      mx += std::log(r.epsilon) / n;
      my += std::log(get(r)) / n;
    }
    double sxy = 0.0, sxx = 0.0;
    for (const auto& r : t.rows) {
      const double dx = std::log(r.epsilon) - mx;
      sxy += dx * (std::log(get(r)) - my);
      sxx += dx * dx;
    }
    return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
  };
  t.order_plus = slope([](const TrendRow& r) { return r.err_plus; });
  t.order_minus = slope([](const TrendRow& r) { return r.err_minus; });
  return t;
}

double derivative_noise_floor(const CharNet& net, const GasModel& g, const DiagWindow& win) {
  const NetField field(net, g);
  double m = 0.0;
  for (int k : lines_in_window(net, win))
    for (int i = 0; i < static_cast<int>(net.lines[k].points.size()); ++i) {
      const CharDerivs d = field.derivs(k, i);
      keep_max(m, std::abs(d.dplus_c));
      keep_max(m, std::abs(d.dminus_c));
    }
  return m;
}

SignAudit case_b_sign_audit(const CharNet& net, const ShockFront& shock, const FreeStream& fs, const GasModel& g,
                            double noise_floor, const DiagWindow& win) {
  SignAudit a;
  a.max_deriv = -std::numeric_limits<double>::infinity();
  const NetField field(net, g);
  const auto ks = lines_in_window(net, win);
  // the polar's far corner (u_inf, 0) carries the largest speed on the polar
  const double qmax = fs.u_inf;
  for (int k : ks) {
    const auto& pts = net.lines[k].points;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const CharDerivs d = field.derivs(k, i);
      keep_max(a.max_deriv, std::max(d.dplus_c, d.dminus_c));
      if (!(d.dplus_c < noise_floor) || !(d.dminus_c < noise_floor)) ++a.violations;
      ++a.nodes;
      const FlowState& s = pts[i].state;
      const bool inside = s.v >= -1e-14 && s.q() <= qmax * (1.0 + 1e-12) &&
                          polar_residual(s, fs, g).G <= 1e-11;
      if (!inside) ++a.vacuum_region_violations;
    }
  }
  // shock nodes that belong to reported lines: node k+1 closes line k
  if (!ks.empty()) {
    const std::size_t first = static_cast<std::size_t>(ks.front()) + 1;
    for (std::size_t j = first + 1; j < shock.nodes.size(); ++j) {
      const double dq = shock.nodes[j].state.q() - shock.nodes[j - 1].state.q();
      if (dq < 0.0) {
        a.shock_q_increasing = false;
        a.worst_q_drop = std::max(a.worst_q_drop, -dq);
      }
      if (pressure(shock.nodes[j].state, g) > pressure(shock.nodes[j - 1].state, g)) a.pjump_decreasing = false;
    }
  }
  return a;
}

NetAudit audit_net(const MarchResult& r, const RunConfig& cfg, const DiagWindow& win) {
  NetAudit a;
  const GasModel& g = cfg.gas;
  a.entropy_min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < r.shock.nodes.size(); ++j) {
    const ShockNode& n = r.shock.nodes[j];
    a.entropy_min = std::min(a.entropy_min, pressure(n.state, g) - r.fs.p_inf);
    keep_max(a.slope_state, std::abs(n.slope - std::tan(shock_angle(n.state, r.fs, g))));
  }
  for (std::size_t k = 0; k < r.net.lines.size(); ++k) {
    const auto& pts = r.net.lines[k].points;
    const NetPoint& W = pts.front();
    // the seed line carries the tip state at x_start and is not a slip solution
    if (k > 0) keep_max(a.wall_slip, std::abs(W.state.v - W.state.u * cfg.wedge.fp(W.x)));
    keep_max(a.shock_polar, std::abs(polar_residual(pts.back().state, r.fs, g).G));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const CharAngles ca = char_angles(pts[i].state, g);
      if (!(ca.lambda_plus > ca.lambda_minus)) a.lambda_order = false;
      if (i > 0 && !(pts[i].eta > pts[i - 1].eta)) a.eta_increasing = false;
      keep_max(a.state_spread, std::hypot(pts[i].state.u - r.tip_state.u, pts[i].state.v - r.tip_state.v));
    }
  }
  for (int k : lines_in_window(r.net, win)) {
    const auto& line = r.net.lines[k];
    const double expect = r.fs.epsilon * line.points.back().y;
    keep_max(a.mass_rel_err, std::abs(line_mass_flux(line, g) - expect) / expect);
  }
  return a;
}

bool DiagnosticsReport::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });
}

DiagnosticsReport build_report(const RunConfig& cfg, const MarchResult& r, double noise_floor) {
  DiagnosticsReport rep;
  std::ostringstream cs;
  cs.precision(17);
  cs << "gamma=" << cfg.gas.gamma << " qbar=" << cfg.gas.qbar << " epsilon=" << cfg.epsilon
     << " wedge=" << cfg.wedge.describe() << " n_across=" << cfg.n_across << " x_start=" << cfg.x_start
     << " x_max=" << cfg.x_max << " corrector_passes=" << cfg.corrector_passes
     << " regrid=" << (cfg.regrid ? "true" : "false");
  rep.config = cs.str();
  const DiagWindow win = default_window(cfg);
  const GasModel& g = cfg.gas;
  auto add = [&](std::string name, bool ok, double measured, double tol, std::string detail) {
    rep.verdicts.push_back({std::move(name), ok, measured, tol, std::move(detail)});
  };

  add("run_complete", !r.has_error, r.has_error ? 1.0 : 0.0, 0.0, r.has_error ? r.error_message : "march reached x_max");
  if (r.net.lines.empty()) return rep;

  rep.audit = audit_net(r, cfg, win);
  rep.entropy_min = rep.audit.entropy_min;
  add("entropy", rep.audit.entropy_min > 0.0, rep.audit.entropy_min, 0.0, "min over shock of p - p_inf must be > 0");
  add("mass_flux", rep.audit.mass_rel_err <= 0.02, rep.audit.mass_rel_err, 0.02,
      "relative gap between line mass flux and eps*y(shock end)");
  add("wall_slip", rep.audit.wall_slip <= 1e-11, rep.audit.wall_slip, 1e-11, "max |v - u f'| at wall points");
  add("shock_polar", rep.audit.shock_polar <= 1e-11, rep.audit.shock_polar, 1e-11, "max |G| at shock points");
  add("slope_state", rep.audit.slope_state <= 1e-10, rep.audit.slope_state, 1e-10,
      "max |slope - tan s(U)| on shock nodes");
  add("lambda_order", rep.audit.lambda_order, rep.audit.lambda_order ? 0.0 : 1.0, 0.0, "tan alpha > tan beta everywhere");
  add("eta_increasing", rep.audit.eta_increasing, rep.audit.eta_increasing ? 0.0 : 1.0, 0.0,
      "eta strictly increasing along every line");
  if (cfg.wedge.family() == WedgeFamily::Straight)
    add("constant_state", rep.audit.state_spread <= 1e-9, rep.audit.state_spread, 1e-9, "max |U - U0| over the net");

  rep.thickness_series = layer_thickness_report(r.net, r.shock, cfg.wedge, r.fs, win);
  const auto ks = lines_in_window(r.net, win);
  if (ks.size() >= 20 && r.net.lines.size() >= 3) {
    rep.decay_series = derivative_decay_report(r.net, g, win);
    rep.relation = relation_residuals(r.net, cfg.wedge, r.fs, g, win);
  }
  rep.asymptote = asymptotic_report(r.net, r.shock, cfg.wedge, r.fs, g, win);

  if (classify_case(cfg.wedge, g).kind == CaseKind::CaseB && ks.size() >= 3) {
    const SignAudit sa = case_b_sign_audit(r.net, r.shock, r.fs, g, noise_floor, win);
    add("case_b_signs", sa.violations == 0, sa.max_deriv, noise_floor, "max of d+c, d-c beyond the seed region");
    add("shock_q_increasing", sa.shock_q_increasing, sa.worst_q_drop, 0.0, "largest drop of q between shock nodes");
    add("no_vacuum_region", sa.vacuum_region_violations == 0, sa.vacuum_region_violations, 0.0,
        "states with v<0, q above u_inf, or G>0");
  }
  return rep;
}

}  // namespace sl

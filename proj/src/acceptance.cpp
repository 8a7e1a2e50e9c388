#include "shocklayer/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "shocklayer/diag.hpp"
#include "shocklayer/gamma2.hpp"
#include "shocklayer/limitsol.hpp"
#include "shocklayer/moc.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

namespace oracle {

namespace {

double rho_of_q(double q, const GasModel& g) {
  const double c2 = 0.5 * (g.gamma - 1.0) * (g.qbar * g.qbar - q * q);
  if (c2 <= 0.0) return 0.0;
  return std::pow(c2 / (g.gamma * g.pressure_const), 1.0 / (g.gamma - 1.0));
}

double ray_G(double u, double t, double eps, double ub, const GasModel& g) {
  const double v = u * t;
  const double rho = rho_of_q(std::hypot(u, v), g);
  if (rho <= 0.0) return std::numeric_limits<double>::infinity();
  return (u - eps / rho) * (u - ub) + v * v;
}

}  // namespace

double freestream_speed(double epsilon, const GasModel& g) {
  // rho q falls from the sonic speed to zero at qbar
  double lo = g.qbar * std::sqrt((g.gamma - 1.0) / (g.gamma + 1.0)), hi = g.qbar;
  if (!(epsilon <= rho_of_q(lo, g) * lo)) return std::nan("");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (rho_of_q(mid, g) * mid > epsilon) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool ray_state(double theta, double epsilon, const GasModel& g, FlowState& out) {
  const double ub = freestream_speed(epsilon, g);
  if (!std::isfinite(ub)) return false;
  const double t = std::tan(theta);
  const int n = 20000;
  double prev_u = ub, prev_G = ray_G(ub, t, epsilon, ub, g);
  for (int k = 1; k <= n; ++k) {
    const double u = ub * (1.0 - double(k) / n);
    const double G = ray_G(u, t, epsilon, ub, g);
    if (G <= 0.0 && prev_G > 0.0) {
      double lo = u, hi = prev_u;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ray_G(mid, t, epsilon, ub, g) > 0.0) hi = mid; else lo = mid;
      }
      const double ur = 0.5 * (lo + hi);
      const double q2 = ur * ur * (1.0 + t * t);
      const double c2 = 0.5 * (g.gamma - 1.0) * (g.qbar * g.qbar - q2);
      if (!(q2 > c2)) return false;
      out = FlowState{ur, ur * t};
      return true;
    }
    prev_u = u;
    prev_G = G;
  }
  return false;
}

double prandtl_meyer(double mach, double gamma) {
  const double k = std::sqrt((gamma + 1.0) / (gamma - 1.0));
  const double m = std::sqrt(mach * mach - 1.0);
  return k * std::atan(m / k) - std::atan(m);
}

double SimpleWave::mach_at(double ray_angle) const {
  // ray angle as a function of M is monotone on either family
  auto angle = [&](double M) {
    const double nu = prandtl_meyer(M, gas.gamma), mu = std::asin(1.0 / M);
    return rays == Family::Minus ? invariant + nu - mu : invariant - nu + mu;
  };
  double lo = 1.0 + 1e-12, hi = 50.0;
  const bool increasing = angle(hi) > angle(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((angle(mid) < ray_angle) == increasing) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

FlowState SimpleWave::operator()(double x, double y) const {
  const double M = mach_at(std::atan2(y, x));
  const double k = 0.5 * (gas.gamma - 1.0);
  const double q = gas.qbar * std::sqrt(M * M * k / (1.0 + M * M * k));
  const double nu = prandtl_meyer(M, gas.gamma);
  const double tau = rays == Family::Minus ? invariant + nu : invariant - nu;
  return FlowState{q * std::cos(tau), q * std::sin(tau)};
}

}  // namespace oracle

namespace {

std::string sci(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3e", v);
  return b;
}

const double kTan10 = std::tan(10.0 * M_PI / 180.0);
const double kTan15 = std::tan(15.0 * M_PI / 180.0);

RunConfig desk_config(const WedgeProfile& w, double x_max, int n = 20, double eps = 0.04275) {
  RunConfig c;
  c.gas = make_gas(2.0);
  c.wedge = w;
  c.epsilon = eps;
  c.n_across = n;
  c.x_max = x_max;
  return c;
}

// marches run concurrently, each one sequential; results stay in input order
std::vector<MarchResult> march_all(const std::vector<RunConfig>& cfgs) {
  std::vector<MarchResult> out(cfgs.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(cfgs.size()); ++i) out[i] = march(cfgs[i]);
  return out;
}

std::string breakdown_note(const MarchResult& r) {
  return r.has_error ? " [run stopped: " + r.error_message + "]" : "";
}

CriterionResult ac1() {
  CriterionResult c{1, "straight_wedge_exactness"};
  RunConfig cfg = desk_config(WedgeProfile::straight(kTan10), 1e9);
  cfg.max_lines = 500;
  const MarchResult r = march(cfg);
  FlowState U0;
  const bool found = oracle::ray_state(std::atan(kTan10), cfg.epsilon, cfg.gas, U0);
  double spread = 0.0, slope_spread = 0.0;
  for (const auto& line : r.net.lines)
    for (const auto& p : line.points) spread = std::max(spread, std::hypot(p.state.u - U0.u, p.state.v - U0.v));
  for (const auto& n : r.shock.nodes) slope_spread = std::max(slope_spread, std::abs(n.slope - r.shock.nodes.front().slope));
  const int lines = static_cast<int>(r.net.lines.size()) - 1;
  c.passed = found && !r.has_error && lines >= 500 && spread < 1e-9 && slope_spread < 1e-9;
  c.measured = "max|U-U0| " + sci(spread) + ", slope spread " + sci(slope_spread);
  c.tolerance = "< 1e-9 each, 500 lines";
  c.detail = std::to_string(lines) + " lines beyond the seed; U0 = (" + sci(U0.u) + ", " + sci(U0.v) +
             ") from the bisection ray oracle" + breakdown_note(r);
  return c;
}

CriterionResult ac2() {
  CriterionResult c{2, "oblique_shock_oracle"};
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> ug(1.1, 2.9), ue(0.0, 1.0), ut(0.5, 25.0);
  int accepted = 0, tries = 0, mismatches = 0;
  double worst_diff = 0.0, worst_G = 0.0;
  while (accepted < 50 && tries < 5000) {
    ++tries;
    const GasModel g = make_gas(ug(rng));
    const double qs = g.q_crit();
    const double eps_max = g.rho_of_c2(g.c2_of_q2(qs * qs)) * qs;  // largest mass flux, at the sonic speed
    const double eps = 1e-3 + ue(rng) * (0.6 * eps_max - 1e-3);
    const double theta = ut(rng) * M_PI / 180.0;
    FlowState ref;
    if (!oracle::ray_state(theta, eps, g, ref)) continue;  // outside the admissible region
    ++accepted;
    try {
      const FlowState s = downstream_from_ray(theta, eps, g);
      worst_diff = std::max(worst_diff, std::hypot(s.u - ref.u, s.v - ref.v));
      worst_G = std::max(worst_G, std::abs(polar_residual(s, eps, g).G));
    } catch (const Error&) {
      ++mismatches;
    }
  }
  c.passed = accepted == 50 && mismatches == 0 && worst_diff < 1e-10 && worst_G < 1e-12;
  c.measured = "max|U-U_oracle| " + sci(worst_diff) + ", max|G| " + sci(worst_G);
  c.tolerance = "< 1e-10, < 1e-12";
  c.detail = std::to_string(accepted) + " admissible samples (" + std::to_string(tries) + " drawn), " +
             std::to_string(mismatches) + " refused by the solver";
  return c;
}

CriterionResult ac3() {
  CriterionResult c{3, "limit_reflection_coefficient"};
  double worst = 0.0, worst_zero = 0.0;
  std::ostringstream det;
  for (double gm : {1.4, 2.0, 2.5}) {
    const GasModel g = make_gas(gm);
    auto g_at = [&](double h) {
      const double u = g.qbar - h;
      return reflection_coeff_g(FlowState{u, std::sqrt(u * (g.qbar - u))}, 0.0, g).g_value;
    };
    // Aitken on h, h/2, h/4
    const double h = 1e-3;
    const double a = g_at(h), b = g_at(h / 2), d = g_at(h / 4);
    const double den = (d - b) - (b - a);
    const double lim = den != 0.0 ? d - (d - b) * (d - b) / den : d;
    const double r = std::sqrt(2.0 / (gm - 1.0));
    const double target = gm == 2.0 ? 3.0 - 2.0 * std::sqrt(2.0) : (r - 1.0) / (r + 1.0);
    worst = std::max(worst, std::abs(lim - target));
    const double u0 = 0.5 * (gm - 1.0) * g.qbar;
    const double g0 = reflection_coeff_g(FlowState{u0, std::sqrt(u0 * (g.qbar - u0))}, 0.0, g).g_value;
    worst_zero = std::max(worst_zero, std::abs(g0));
    det << "gamma " << gm << ": " << sci(lim) << " vs " << sci(target) << "; ";
  }
  c.passed = worst < 1e-6 && worst_zero < 1e-12;
  c.measured = "max|g_lim - target| " + sci(worst) + ", max|g(sonic end)| " + sci(worst_zero);
  c.tolerance = "< 1e-6, < 1e-12";
  c.detail = det.str();
  return c;
}

double interp(const std::vector<ThicknessRow>& rows, double xi) {
  auto it = std::lower_bound(rows.begin(), rows.end(), xi, [](const ThicknessRow& r, double x) { return r.xi < x; });
  if (it == rows.begin()) return it->normalized;
  if (it == rows.end()) return rows.back().normalized;
  const auto& a = *(it - 1);
  const auto& b = *it;
  return a.normalized + (xi - a.xi) / (b.xi - a.xi) * (b.normalized - a.normalized);
}

CriterionResult ac4() {
  CriterionResult c{4, "narrow_estimate_trend"};
  const WedgeProfile w = WedgeProfile::power_decay_bend(0.3, 0.1, 1.0);
  const std::vector<double> eps{0.04, 0.02, 0.01};
  std::vector<RunConfig> cfgs;
  for (double e : eps) cfgs.push_back(desk_config(w, 50.0, 20, e));
  const auto runs = march_all(cfgs);
  std::vector<std::vector<ThicknessRow>> series;
  std::string notes;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    series.push_back(layer_thickness_report(runs[i].net, runs[i].shock, w, runs[i].fs, default_window(cfgs[i])));
    notes += breakdown_note(runs[i]);
  }
  double lo = 0.0, hi = 1e300;
  for (const auto& s : series) {
    if (s.empty()) return c;
    lo = std::max(lo, s.front().xi);
    hi = std::min(hi, s.back().xi);
  }
  // deviation of each curve from the common (mean) curve, on the middle run's stations
  double worst = 0.0, pairwise = 0.0, at = 0.0;
  int stations = 0;
  for (const auto& row : series[1]) {
    if (row.xi < lo || row.xi > hi) continue;
    ++stations;
    double v[3], mean = 0.0;
    for (int i = 0; i < 3; ++i) mean += (v[i] = interp(series[i], row.xi)) / 3.0;
    const double mx = std::max({v[0], v[1], v[2]}), mn = std::min({v[0], v[1], v[2]});
    const double dev = std::max(mx / mean - 1.0, 1.0 - mn / mean);
    if (dev > worst) {
      worst = dev;
      at = row.xi;
    }
    pairwise = std::max(pairwise, mx / mn - 1.0);
  }
  c.passed = stations > 10 && worst <= 0.2;
  c.measured = "max deviation from the mean curve " + sci(worst) + " at xi " + sci(at);
  c.tolerance = "<= 0.2";
  c.detail = "eps {0.04, 0.02, 0.01}, " + std::to_string(stations) + " stations on xi in [" + sci(lo) + ", " + sci(hi) +
             "], largest pairwise max/min - 1 = " + sci(pairwise) + notes;
  return c;
}

CriterionResult ac5() {
  CriterionResult c{5, "shock_dissipation"};
  const RunConfig cfg = desk_config(WedgeProfile::log_bullet(kTan10), 200.0);
  const MarchResult r = march(cfg);
  const DiagWindow win = default_window(cfg);
  const AsymptoteReport a = asymptotic_report(r.net, r.shock, cfg.wedge, r.fs, cfg.gas, win);
  const auto& N = r.shock.nodes;
  auto pjump = [&](const ShockNode& n) { return state_quantities(n.state, cfg.gas).p - r.fs.p_inf; };
  const double X = N.back().x;
  bool decreasing = true;
  for (std::size_t j = 1; j < N.size(); ++j)
    if (N[j - 1].x >= X / 10.0 && pjump(N[j]) > pjump(N[j - 1])) decreasing = false;
  const double end = pjump(N.back());
  const double c2 = r.fs.c_inf * r.fs.c_inf;
  // seed sensitivity: same run from a seed line twice as far out
  RunConfig moved = cfg;
  moved.x_start = 2.0 * cfg.x_start;
  const MarchResult r2 = march(moved);
  const double seed_shift =
      std::abs(asymptotic_report(r2.net, r2.shock, moved.wedge, r2.fs, moved.gas, default_window(moved)).computed_slope -
               a.computed_slope);
  c.passed = r.complete && a.err_slope <= 5e-3 && decreasing && end < 1e-3;
  c.measured = "|phi' - target| " + sci(a.err_slope) + ", p jump at end " + sci(end) +
               (decreasing ? ", decreasing over last decade" : ", NOT decreasing");
  c.tolerance = "<= 5e-3, < 1e-3";
  c.detail = "phi' tail " + sci(a.computed_slope) + " (last node " + sci(a.last_slope) + ") vs c/sqrt(u^2-c^2) = " +
             sci(a.predicted_slope) + " with c^2 = " + sci(c2) + "; doubling x_start moves the tail by " + sci(seed_shift) +
             breakdown_note(r);
  return c;
}

CriterionResult ac6() {
  CriterionResult c{6, "case_a_asymptote"};
  const RunConfig cfg = desk_config(WedgeProfile::power_decay_bend(kTan15, 0.1, 1.0), 400.0);
  const MarchResult r = march(cfg);
  const AsymptoteReport a = asymptotic_report(r.net, r.shock, cfg.wedge, r.fs, cfg.gas, default_window(cfg));
  c.passed = r.complete && a.err_u <= 1e-4 && a.err_v <= 1e-4 && a.err_slope <= 1e-4;
  c.measured = "err u " + sci(a.err_u) + ", v " + sci(a.err_v) + ", phi' " + sci(a.err_slope);
  c.tolerance = "<= 1e-4 each";
  c.detail = "predicted (" + sci(a.predicted_u) + ", " + sci(a.predicted_v) + "), phi' " + sci(a.predicted_slope) +
             breakdown_note(r);
  return c;
}

CriterionResult ac7() {
  CriterionResult c{7, "boundary_relations_refinement"};
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  const auto runs = march_all({desk_config(w, 6.0, 40), desk_config(w, 6.0, 80)});
  DiagWindow win;
  win.xi_min = 1.0;
  win.xi_max = 5.0;
  RelationResiduals rr[2];
  for (int i = 0; i < 2; ++i) rr[i] = relation_residuals(runs[i].net, w, runs[i].fs, make_gas(2.0), win);
  const double wall = rr[0].wall_max / rr[1].wall_max, shock = rr[0].shock_max / rr[1].shock_max;
  c.passed = runs[0].complete && runs[1].complete && wall >= 1.7 && shock >= 1.7;
  c.measured = "wall ratio " + sci(wall) + ", shock ratio " + sci(shock);
  c.tolerance = ">= 1.7";
  c.detail = "LogBullet, n_across 40 -> 80, xi in [1,5]: wall max " + sci(rr[0].wall_max) + " -> " + sci(rr[1].wall_max) +
             ", shock max " + sci(rr[0].shock_max) + " -> " + sci(rr[1].shock_max) + breakdown_note(runs[0]) +
             breakdown_note(runs[1]);
  return c;
}

CriterionResult ac8() {
  CriterionResult c{8, "decomposition_residual_refinement"};
  const GasModel g = make_gas(2.0);
  // two exact curved fields: the residual of each family is exercised where it is not trivially 0
  double worst_ratio = 1e300;
  std::ostringstream det;
  for (Family fam : {Family::Minus, Family::Plus}) {
    oracle::SimpleWave wave{g, fam, fam == Family::Minus ? 0.0 : 0.6};
    double lo = 1e300, hi = -1e300;
    for (double M : {1.8, 3.5}) {
      const double nu = oracle::prandtl_meyer(M, g.gamma), mu = std::asin(1.0 / M);
      const double phi = fam == Family::Minus ? wave.invariant + nu - mu : wave.invariant - nu + mu;
      lo = std::min(lo, phi);
      hi = std::max(hi, phi);
    }
    double res[2] = {0.0, 0.0};
    const double h0 = 0.02;
    for (int lev = 0; lev < 2; ++lev)
      for (int k = 0; k < 9; ++k) {
        const double phi = lo + (hi - lo) * (k + 0.5) / 9.0;
        const StateField f = [&](double x, double y) { return wave(x, y); };
        const DecompositionResidual d = decomposition_residual(f, std::cos(phi), std::sin(phi), h0 / (1 << lev), g);
        res[lev] = std::max(res[lev], std::abs(fam == Family::Minus ? d.r_plus : d.r_minus));
      }
    const double ratio = res[0] / res[1];
    worst_ratio = std::min(worst_ratio, ratio);
    det << (fam == Family::Minus ? "C- wave r+: " : "C+ wave r-: ") << sci(res[0]) << " -> " << sci(res[1]) << "; ";
  }
  // the same diagnostic on computed nets, for information
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  const auto runs = march_all({desk_config(w, 6.0, 20), desk_config(w, 6.0, 40)});
  DiagWindow win;
  win.xi_min = 1.0;
  win.xi_max = 5.0;
  const DecompositionNorms a = decomposition_report(runs[0].net, make_gas(2.0), win);
  const DecompositionNorms b = decomposition_report(runs[1].net, make_gas(2.0), win);
  det << "net n 20 -> 40 (info): rms+ " << sci(a.rms_plus) << " -> " << sci(b.rms_plus) << ", max+ " << sci(a.max_plus)
      << " -> " << sci(b.max_plus);
  c.passed = worst_ratio >= 1.7;
  c.measured = "smallest step-halving ratio " + sci(worst_ratio);
  c.tolerance = ">= 1.7";
  c.detail = det.str();
  return c;
}

CriterionResult ac9() {
  CriterionResult c{9, "gamma2_exact_algebra"};
  const Gamma2Polys p = build_polynomials();
  const DisplayedForms& d = displayed_forms();
  const bool div = verify_division_identity();
  const bool lead = leading_form_roots();
  const bool cert = no_real_solution_certificate();
  // falsifiability probes: each mutation must flip its check
  MultiPoly P2 = d.P;
  P2.add_term({1, 0, 0}, mpq_class(1, 7));
  const bool probe_div = !verify_division_identity(p.F, p.G, P2, d.R);
  MultiPoly R1b = d.R1;
  const int low = R1b.min_total_degree();
  const MultiPoly lowpart = R1b.homogeneous_part(low);
  R1b.add_term({0, 0, 2}, -lowpart.coeff({0, 0, 2}));
  const bool probe_lead = !leading_form_roots(R1b, d.R0);
  const MultiPoly U = MultiPoly::var(0), Y = MultiPoly::var(2);
  const MultiPoly bumped = d.certificate_product * (U - Y);
  const bool probe_cert = !no_real_solution_certificate(d.R1, d.R0, d.Gr, d.Gi, bumped).ok;
  const Certificate ct = no_real_solution_certificate(d.R1, d.R0, d.Gr, d.Gi, d.certificate_product);
  c.passed = div && lead && cert && probe_div && probe_lead && probe_cert;
  c.measured = std::string("division ") + (div ? "ok" : "FAIL") + ", leading forms " + (lead ? "ok" : "FAIL") +
               ", certificate " + (cert ? "ok" : "FAIL") + ", probes flipped " +
               std::to_string(int(probe_div) + int(probe_lead) + int(probe_cert)) + "/3";
  c.tolerance = "exact";
  c.detail = "certificate quotient " + ct.quotient + " (constant " + ct.constant + ", (1-Y)^" +
             std::to_string(ct.one_minus_y_power) + ")";
  return c;
}

CriterionResult ac10() {
  CriterionResult c{10, "gamma2_sign_scans"};
  const GasModel g = make_gas(2.0);
  const SignScan s = sign_scan(0.01, 200, 200, 1e-3, g);
  const CornerScan k = corner_scan(build_polynomials(), 200, 200);
  c.passed = s.h_violations == 0 && s.j_violations == 0 && s.g_violations == 0 && s.max_g < 1.0 && k.violations == 0;
  c.measured = "violations H " + std::to_string(s.h_violations) + ", J " + std::to_string(s.j_violations) + ", g " +
               std::to_string(s.g_violations) + " of " + std::to_string(s.samples) + "; corner |K| max " +
               sci(k.max_abs_K) + " (" + std::to_string(k.violations) + " over 1e6)";
  c.tolerance = "0 violations, |K| <= 1e6";
  c.detail = "min H " + sci(s.min_H) + ", min g " + sci(s.min_g) + ", max g " + sci(s.max_g) +
             ", violations reach (u - (gamma-1)qbar/2)/eps = " + sci(s.violation_band);
  return c;
}

CriterionResult ac11() {
  CriterionResult c{11, "formal_derivative_trend"};
  const WedgeProfile w = WedgeProfile::log_bullet(kTan10);
  const std::vector<double> eps{0.04, 0.02, 0.01};
  const double xi0 = 0.5;
  std::vector<RunConfig> cfgs;
  for (double e : eps) cfgs.push_back(desk_config(w, 0.8, 20, e));
  const auto runs = march_all(cfgs);
  std::vector<std::pair<double, const MarchResult*>> in;
  std::string notes;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    in.push_back({eps[i], &runs[i]});
    notes += breakdown_note(runs[i]);
  }
  const TrendReport t = formal_derivative_trend(in, w, make_gas(2.0), xi0);
  auto inside = [](double o) { return o >= 0.5 && o <= 1.5; };
  c.passed = inside(t.order_plus) && inside(t.order_minus);
  c.measured = "order d+ " + sci(t.order_plus) + ", d- " + sci(t.order_minus);
  c.tolerance = "in [0.5, 1.5]";
  std::ostringstream det;
  det << "LogBullet at xi0 = " << xi0 << ":";
  for (const auto& r : t.rows) det << " eps " << r.epsilon << " -> (" << sci(r.err_plus) << ", " << sci(r.err_minus) << ")";
  const FlowState s = downstream_from_ray(std::atan(w.fp(0.5)), 0.01, make_gas(2.0));
  det << "; shock g at eps 0.01 is " << sci(reflection_coeff_g(s, 0.01, make_gas(2.0)).g_value) << " against g0 "
      << sci(limit_state(w, 0.5, make_gas(2.0)).g0) << notes;
  c.detail = det.str();
  return c;
}

CriterionResult ac12() {
  CriterionResult c{12, "case_b_sign_structure"};
  const auto runs = march_all({desk_config(WedgeProfile::log_bullet(kTan10), 200.0, 40),
                               desk_config(WedgeProfile::straight(kTan10), 200.0, 40)});
  const RunConfig cfg = desk_config(WedgeProfile::log_bullet(kTan10), 200.0, 40);
  const GasModel g = make_gas(2.0);
  const DiagWindow win = default_window(cfg);
  const double floor = derivative_noise_floor(runs[1].net, g, win);
  const SignAudit a = case_b_sign_audit(runs[0].net, runs[0].shock, runs[0].fs, g, floor, win);
  c.passed = runs[0].complete && a.violations == 0 && a.shock_q_increasing;
  c.measured = "max(d+c, d-c) " + sci(a.max_deriv) + ", nodes at or above floor " + std::to_string(a.violations) + "/" +
               std::to_string(a.nodes) + (a.shock_q_increasing ? ", q increasing on S" : ", q NOT increasing on S");
  c.tolerance = "< noise floor " + sci(floor);
  c.detail = "LogBullet n_across 40 to x = 200; floor from the straight wedge at the same resolution" +
             breakdown_note(runs[0]);
  return c;
}

}  // namespace

std::string CriterionResult::line() const {
  char head[64];
  std::snprintf(head, sizeof head, "AC%02d %s %s", id, passed ? "PASS" : "FAIL", name.c_str());
  char t[32];
  std::snprintf(t, sizeof t, "%.1f", seconds);
  return std::string(head) + ": " + measured + " (tol " + tolerance + ") " + t + "s | " + detail;
}

CriterionResult run_criterion(int id) {
  using Fn = CriterionResult (*)();
  static const Fn table[] = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12};
  if (id < 1 || id > 12) fail(Errc::ValidationError, "criterion id must be 1..12");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const Error& e) {
    r.id = id;
    r.name = "criterion";
    r.passed = false;
    r.measured = "error";
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_done) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) {
    out.push_back(run_criterion(id));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace sl

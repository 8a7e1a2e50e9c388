#include "shocklayer/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shocklayer/errors.hpp"

namespace sl {

using nlohmann::ordered_json;

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      os_ << (first ? "" : ",") << h;
      first = false;
    }
    os_ << "\n";
  }
  Csv& operator<<(double v) { return put(fmt17(v)); }
  Csv& operator<<(int v) { return put(std::to_string(v)); }
  Csv& operator<<(const char* s) { return put(s); }
  void end() {
    os_ << "\n";
    fresh_ = true;
  }
  std::string str() const { return os_.str(); }

 private:
  Csv& put(const std::string& s) {
    os_ << (fresh_ ? "" : ",") << s;
    fresh_ = false;
    return *this;
  }
  std::ostringstream os_;
  bool fresh_ = true;
};

// NaN and infinities become null
ordered_json jnum(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

}  // namespace

std::string polar_csv(const std::vector<PolarPoint>& pts) {
  Csv c{"u", "v", "G", "s", "k", "g", "t_plus", "t_minus", "H", "J"};
  for (const auto& p : pts) {
    c << p.state.u << p.state.v << p.G_value << p.s_angle << p.k_angle << p.g_value << p.t_plus << p.t_minus << p.H
      << p.J;
    c.end();
  }
  return c.str();
}

std::string limit_csv(const std::vector<LimitRow>& rows) {
  Csv c{"x", "xi", "u_s", "v_s", "q_s", "c_s", "rho_s", "g0", "dplus_c", "dminus_c"};
  for (const auto& r : rows) {
    const LimitState& s = r.state;
    const double nan = std::nan("");
    c << r.x << r.xi << s.u_s << s.v_s << s.q_s << s.c_s << s.rho_s << s.g0 << (s.has_derivatives ? s.dplus_c : nan)
      << (s.has_derivatives ? s.dminus_c : nan);
    c.end();
  }
  return c.str();
}

std::string net_csv(const CharNet& net, const GasModel& g) {
  Csv c{"line", "index", "x", "y", "xi", "eta", "u", "v", "rho", "c", "q", "mach"};
  for (const auto& line : net.lines)
    for (const auto& p : line.points) {
      const StateQuantities s = state_quantities(p.state, g);
      c << p.line_index << p.point_index << p.x << p.y << p.xi << p.eta << p.state.u << p.state.v << s.rho << s.c
        << s.q << s.mach;
      c.end();
    }
  return c.str();
}

std::string shock_csv(const ShockFront& shock, const FreeStream& fs, const GasModel& g) {
  Csv c{"x", "y", "slope", "u", "v", "p_jump"};
  for (const auto& n : shock.nodes) {
    c << n.x << n.y << n.slope << n.state.u << n.state.v << state_quantities(n.state, g).p - fs.p_inf;
    c.end();
  }
  return c.str();
}

std::string thickness_csv(const std::vector<ThicknessRow>& rows) {
  Csv c{"xi", "thickness", "normalized"};
  for (const auto& r : rows) {
    c << r.xi << r.thickness << r.normalized;
    c.end();
  }
  return c.str();
}

std::string decay_csv(const std::vector<DecayRow>& rows) {
  Csv c{"xi", "xi_dplus_c", "xi_dminus_c"};
  for (const auto& r : rows) {
    c << r.xi << r.plus << r.minus;
    c.end();
  }
  return c.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  Csv c{"job", "epsilon", "n_across", "lines", "complete", "xi", "err_plus", "err_minus", "entropy_min",
        "mass_rel_err"};
  for (const auto& r : rows) {
    c << r.job << r.epsilon << r.n_across << r.lines << (r.complete ? 1 : 0) << r.xi << r.err_plus << r.err_minus
      << r.entropy_min << r.mass_rel_err;
    c.end();
  }
  return c.str();
}

std::string report_json(const DiagnosticsReport& r) {
  ordered_json j;
  j["config"] = r.config;
  ordered_json th = ordered_json::array();
  for (const auto& t : r.thickness_series)
    th.push_back({{"xi", jnum(t.xi)}, {"thickness", jnum(t.thickness)}, {"normalized", jnum(t.normalized)}});
  j["thickness_series"] = th;
  ordered_json de = ordered_json::array();
  for (const auto& d : r.decay_series)
    de.push_back({{"xi", jnum(d.xi)}, {"xi_dplus_c", jnum(d.plus)}, {"xi_dminus_c", jnum(d.minus)}});
  j["decay_series"] = de;
  const AsymptoteReport& a = r.asymptote;
  j["asymptote"] = {
      {"predicted", {{"u", jnum(a.predicted_u)}, {"v", jnum(a.predicted_v)}, {"slope", jnum(a.predicted_slope)}}},
      {"computed", {{"u", jnum(a.computed_u)}, {"v", jnum(a.computed_v)}, {"slope", jnum(a.computed_slope)}}},
      {"last", {{"u", jnum(a.last_u)}, {"v", jnum(a.last_v)}, {"slope", jnum(a.last_slope)}}},
      {"error", {{"u", jnum(a.err_u)}, {"v", jnum(a.err_v)}, {"slope", jnum(a.err_slope)}}},
      {"extrapolated", a.extrapolated},
  };
  const RelationResiduals& rr = r.relation;
  j["relation_residuals"] = {
      {"wall", {{"max", jnum(rr.wall_max)}, {"rms", jnum(rr.wall_rms)}, {"scale", jnum(rr.wall_scale)}, {"nodes", rr.n_wall}}},
      {"shock",
       {{"max", jnum(rr.shock_max)}, {"rms", jnum(rr.shock_rms)}, {"scale", jnum(rr.shock_scale)}, {"nodes", rr.n_shock}}},
  };
  j["entropy_min"] = jnum(r.entropy_min);
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.verdicts)
    vs.push_back({{"name", v.name},
                  {"passed", v.passed},
                  {"measured", jnum(v.measured)},
                  {"tolerance", jnum(v.tolerance)},
                  {"detail", v.detail},
                  {"config", r.config}});
  j["verdicts"] = vs;
  // these scale with the pressure constant A; everything else is A-free
  j["a_dependent"] = {"entropy_min", "verdicts.entropy", "shock.csv:p_jump"};
  j["all_passed"] = r.all_passed();
  return j.dump(2) + "\n";
}

std::string gamma2_json(const Gamma2Report& r) {
  ordered_json j;
  ordered_json cons = ordered_json::array();
  for (const auto& c : r.construction)
    cons.push_back({{"name", c.name}, {"matches", c.matches}, {"difference", c.difference}});
  j["construction"] = cons;
  j["division_ok"] = r.division_ok;
  j["leading_forms_ok"] = r.leading_forms_ok;
  j["certificate_ok"] = r.certificate_ok;
  j["leading_forms"] = {{"r1_degree", r.leading.r1_degree},
                        {"r0_degree", r.leading.r0_degree},
                        {"r1_proportional", r.leading.r1_proportional},
                        {"r0_proportional", r.leading.r0_proportional},
                        {"coprime", r.leading.coprime}};
  j["certificate"] = {{"ok", r.certificate.ok},
                      {"exact_constant", r.certificate.exact_constant},
                      {"constant", r.certificate.constant},
                      {"one_minus_y_power", r.certificate.one_minus_y_power},
                      {"quotient", r.certificate.quotient},
                      {"remainder", r.certificate.remainder}};
  const SignScan& s = r.scan;
  j["sign_scan"] = {{"eps_count", s.eps_count},       {"u_count", s.u_count},
                    {"eps_max", jnum(s.eps_max)},     {"delta", jnum(s.delta)},
                    {"samples", s.samples},           {"skipped", s.skipped},
                    {"h_violations", s.h_violations}, {"j_violations", s.j_violations},
                    {"g_violations", s.g_violations}, {"min_H", jnum(s.min_H)},
                    {"min_J", jnum(s.min_J)},         {"min_g", jnum(s.min_g)},
                    {"max_g", jnum(s.max_g)},         {"violation_band", jnum(s.violation_band)}};
  const CornerScan& c = r.corner;
  j["corner_scan"] = {{"u_count", c.u_count},       {"ratio_count", c.ratio_count}, {"u_min", jnum(c.u_min)},
                      {"u_max", jnum(c.u_max)},     {"samples", c.samples},         {"violations", c.violations},
                      {"bound", jnum(c.bound)},     {"max_abs_K", jnum(c.max_abs_K)}};
  j["exact_ok"] = r.exact_ok();
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::ValidationError, "cannot open '" + path + "' for writing");
  f << content;
  if (!f) fail(Errc::ValidationError, "write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ValidationError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace sl

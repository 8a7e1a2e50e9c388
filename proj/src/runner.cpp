#include "shocklayer/runner.hpp"

#include <cmath>
#include <filesystem>
#include <map>

#include <json.hpp>

#include "shocklayer/acceptance.hpp"
#include "shocklayer/diag.hpp"
#include "shocklayer/gamma2.hpp"
#include "shocklayer/limitsol.hpp"
#include "shocklayer/polar.hpp"

namespace sl {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string prepare_dir(const std::string& name, const RunSpec& spec) {
  const std::string dir = output_dir(name, spec);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(Errc::ValidationError, "cannot create output directory '" + dir + "': " + ec.message());
  write_file(dir + "/config.txt", spec.canonical());
  return dir;
}

ordered_json jnum(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

double floor_if_case_b(const RunConfig& cfg) {
  return classify_case(cfg.wedge, cfg.gas).kind == CaseKind::CaseB ? straight_noise_floor(cfg) : 0.0;
}

int cmd_polar(const RunSpec& spec, std::ostream& log) {
  const std::string dir = prepare_dir("polar", spec);
  const auto pts = polar_trace(spec.run.epsilon, spec.run.gas, spec.polar_samples);
  write_file(dir + "/polar.csv", polar_csv(pts));
  log << "polar: " << pts.size() << " points -> " << dir << "/polar.csv\n";
  return kExitOk;
}

int cmd_limit(const RunSpec& spec, std::ostream& log) {
  const std::string dir = prepare_dir("limit", spec);
  const RunConfig& c = spec.run;
  const int n = std::max(spec.limit_samples, 2);
  std::vector<LimitRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = c.x_start + (c.x_max - c.x_start) * i / (n - 1);
    rows.push_back({x, c.wedge.xi(x), limit_state(c.wedge, x, c.gas)});
  }
  write_file(dir + "/limit.csv", limit_csv(rows));
  log << "limit: " << rows.size() << " stations -> " << dir << "/limit.csv\n";
  return kExitOk;
}

// solve and diag share the march and the report; solve also writes the net itself
int cmd_solve(const RunSpec& spec, std::ostream& log, bool with_net) {
  const std::string name = with_net ? "solve" : "diag";
  const std::string dir = prepare_dir(name, spec);
  const RunConfig& cfg = spec.run;
  const MarchResult r = march(cfg);
  const double floor = floor_if_case_b(cfg);
  const DiagnosticsReport rep = build_report(cfg, r, floor);
  if (with_net) {
    write_file(dir + "/net.csv", net_csv(r.net, cfg.gas));
    write_file(dir + "/shock.csv", shock_csv(r.shock, r.fs, cfg.gas));
  } else {
    write_file(dir + "/thickness.csv", thickness_csv(rep.thickness_series));
    write_file(dir + "/decay.csv", decay_csv(rep.decay_series));
  }
  write_file(dir + "/report.json", report_json(rep));
  log << name << ": " << r.net.lines.size() << " lines, last x = " << (r.shock.nodes.empty() ? 0.0 : r.shock.nodes.back().x)
      << " -> " << dir << "\n";
  for (const auto& v : rep.verdicts)
    log << "  " << (v.passed ? "pass " : "FAIL ") << v.name << " measured " << fmt17(v.measured) << "\n";
  if (r.has_error) {
    log << name << ": march stopped early (" << errc_name(r.error_code) << "): " << r.error_message << "\n";
    return kExitBreakdown;
  }
  return rep.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(const RunSpec& spec, std::ostream& log) {
  const std::string dir = prepare_dir("sweep", spec);
  const SweepOutcome out = run_sweep(spec);
  write_file(dir + "/sweep.csv", sweep_csv(out.rows));
  ordered_json j;
  j["xi0"] = spec.sweep.xi0;
  ordered_json ts = ordered_json::array();
  for (const auto& [n, t] : out.trends) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows)
      rows.push_back({{"epsilon", r.epsilon}, {"xi", jnum(r.xi)}, {"err_plus", jnum(r.err_plus)}, {"err_minus", jnum(r.err_minus)}});
    ts.push_back({{"n_across", n}, {"order_plus", jnum(t.order_plus)}, {"order_minus", jnum(t.order_minus)}, {"rows", rows}});
  }
  j["trends"] = ts;
  j["note"] = out.trend_note;
  write_file(dir + "/trend.json", j.dump(2) + "\n");
  log << "sweep: " << out.rows.size() << " jobs -> " << dir << "\n";
  if (!out.trend_note.empty()) log << "sweep: " << errc_name(Errc::InsufficientSweep) << ": " << out.trend_note << "\n";
  return kExitOk;
}

int cmd_gamma2(const RunSpec& spec, std::ostream& log) {
  const std::string dir = prepare_dir("gamma2-verify", spec);
  const ScanSpec& s = spec.scan;
  const Gamma2Report rep = gamma2_report(s.eps_max, s.eps_count, s.u_count, s.delta, s.corner_u, s.corner_ratio);
  const std::string js = gamma2_json(rep);
  write_file(dir + "/gamma2.json", js);
  log << js;
  return rep.exact_ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const RunSpec& spec, std::ostream& log) {
  const std::string dir = prepare_dir("verify", spec);
  std::string text;
  int failed = 0;
  run_acceptance([&](const CriterionResult& r) {
    log << r.line() << "\n" << std::flush;
    text += r.line() + "\n";
    failed += r.passed ? 0 : 1;
  });
  write_file(dir + "/acceptance.txt", text);
  log << "verify: " << 12 - failed << "/12 passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"polar", "limit", "solve", "sweep", "diag", "gamma2-verify", "verify"};
  return names;
}

std::string output_dir(const std::string& name, const RunSpec& spec) {
  return (fs::path(spec.out_dir) / (name + "-" + spec.hash())).string();
}

double straight_noise_floor(const RunConfig& cfg) {
  RunConfig s = cfg;
  s.wedge = WedgeProfile::straight(cfg.wedge.fp(0.0), cfg.wedge.horizon());
  const MarchResult r = march(s);
  return derivative_noise_floor(r.net, s.gas, default_window(s));
}

SweepOutcome run_sweep(const RunSpec& spec) {
  std::vector<double> eps = spec.sweep.epsilons;
  std::vector<int> ns = spec.sweep.n_across;
  if (eps.empty()) eps.push_back(spec.run.epsilon);
  if (ns.empty()) ns.push_back(spec.run.n_across);

  struct Job {
    RunConfig cfg;
    MarchResult result;
    NetAudit audit;
  };
  std::vector<Job> jobs;
  for (int n : ns)
    for (double e : eps) {
      Job j;
      j.cfg = spec.run;
      j.cfg.epsilon = e;
      j.cfg.n_across = n;
      jobs.push_back(std::move(j));
    }

  // each march is sequential; independent jobs share the thread pool
  const int workers = std::max(spec.workers, 1);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int i = 0; i < static_cast<int>(jobs.size()); ++i) {
    jobs[i].result = march(jobs[i].cfg);
    if (!jobs[i].result.net.lines.empty()) jobs[i].audit = audit_net(jobs[i].result, jobs[i].cfg, default_window(jobs[i].cfg));
  }

  SweepOutcome out;
  std::map<std::pair<int, double>, TrendRow> trend_rows;
  if (eps.size() >= 2) {
    for (int n : ns) {
      std::vector<std::pair<double, const MarchResult*>> in;
      for (const auto& j : jobs)
        if (j.cfg.n_across == n) in.push_back({j.cfg.epsilon, &j.result});
      try {
        TrendReport t = formal_derivative_trend(in, spec.run.wedge, spec.run.gas, spec.sweep.xi0);
        for (const auto& r : t.rows) trend_rows[{n, r.epsilon}] = r;
        out.trends.push_back({n, std::move(t)});
      } catch (const Error& e) {
        out.trend_note += "n_across " + std::to_string(n) + ": " + e.what() + "; ";
      }
    }
  } else {
    out.trend_note = "a trend needs at least two epsilon values";
  }

  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Job& j = jobs[i];
    SweepRow row;
    row.job = static_cast<int>(i);
    row.epsilon = j.cfg.epsilon;
    row.n_across = j.cfg.n_across;
    row.lines = static_cast<int>(j.result.net.lines.size());
    row.complete = j.result.complete;
    row.entropy_min = j.audit.entropy_min;
    row.mass_rel_err = j.audit.mass_rel_err;
    const auto it = trend_rows.find({row.n_across, row.epsilon});
    const double nan = std::nan("");
    row.xi = it != trend_rows.end() ? it->second.xi : nan;
    row.err_plus = it != trend_rows.end() ? it->second.err_plus : nan;
    row.err_minus = it != trend_rows.end() ? it->second.err_minus : nan;
    out.rows.push_back(row);
  }
  return out;
}

int run_subcommand(const std::string& name, const RunSpec& spec, std::ostream& log) {
  if (name == "polar") return cmd_polar(spec, log);
  if (name == "limit") return cmd_limit(spec, log);
  if (name == "solve") return cmd_solve(spec, log, true);
  if (name == "diag") return cmd_solve(spec, log, false);
  if (name == "sweep") return cmd_sweep(spec, log);
  if (name == "gamma2-verify") return cmd_gamma2(spec, log);
  if (name == "verify") return cmd_verify(spec, log);
  fail(Errc::ValidationError, "unknown subcommand '" + name + "'");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::ValidationError:
    case Errc::EpsilonTooLarge:
    case Errc::NegativeAbscissa:
    case Errc::VacuumFreestream:
      return kExitInput;
    case Errc::CertificateMismatch:
      return kExitVerifyFailed;
    default:
      return kExitBreakdown;
  }
}

}  // namespace sl

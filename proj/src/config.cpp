#include "shocklayer/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "shocklayer/gas.hpp"
#include "shocklayer/wedge.hpp"

namespace sl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool to_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto [p, ec] = std::from_chars(first, t.data() + t.size(), out);
  return ec == std::errc() && p == t.data() + t.size();
}

bool to_int(const std::string& s, int& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && p == t.data() + t.size();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const std::map<std::string, std::string>& shorthands() {
  static const std::map<std::string, std::string> m{
      {"gamma", "gas.gamma"},     {"qbar", "gas.qbar"},         {"epsilon", "gas.epsilon"},
      {"wedge", "wedge.profile"}, {"x_max", "run.x_max"},       {"n_across", "run.n_across"},
      {"x_start", "run.x_start"},
  };
  return m;
}

struct Builder {
  double gamma = 2.0, qbar = 1.0, pressure_const = 1.0;
  std::string wedge_text = "straight:0.17632698070846498";
  double horizon = 1e4;
  RunSpec spec;
};

using Setter = std::function<bool(Builder&, const std::string&, std::string&)>;

Setter real(double Builder::*f) {
  return [f](Builder& b, const std::string& v, std::string& why) {
    if (!to_double(v, b.*f)) return why = "not a number: '" + v + "'", false;
    return true;
  };
}

template <class Get>
Setter real_at(Get get) {
  return [get](Builder& b, const std::string& v, std::string& why) {
    if (!to_double(v, get(b))) return why = "not a number: '" + v + "'", false;
    return true;
  };
}

template <class Get>
Setter integer_at(Get get) {
  return [get](Builder& b, const std::string& v, std::string& why) {
    if (!to_int(v, get(b))) return why = "not an integer: '" + v + "'", false;
    return true;
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> m{
      {"gas.gamma", real(&Builder::gamma)},
      {"gas.qbar", real(&Builder::qbar)},
      {"gas.pressure_const", real(&Builder::pressure_const)},
      {"gas.epsilon", real_at([](Builder& b) -> double& { return b.spec.run.epsilon; })},
      {"wedge.profile",
       [](Builder& b, const std::string& v, std::string&) {
         b.wedge_text = trim(v);
         return true;
       }},
      {"wedge.horizon", real(&Builder::horizon)},
      {"run.n_across", integer_at([](Builder& b) -> int& { return b.spec.run.n_across; })},
      {"run.x_start", real_at([](Builder& b) -> double& { return b.spec.run.x_start; })},
      {"run.x_max", real_at([](Builder& b) -> double& { return b.spec.run.x_max; })},
      {"run.corrector_passes", integer_at([](Builder& b) -> int& { return b.spec.run.corrector_passes; })},
      {"run.regrid",
       [](Builder& b, const std::string& v, std::string& why) {
         const std::string t = trim(v);
         if (t == "true" || t == "1") b.spec.run.regrid = true;
         else if (t == "false" || t == "0") b.spec.run.regrid = false;
         else return why = "expected true or false, got '" + t + "'", false;
         return true;
       }},
      {"run.regrid_threshold", real_at([](Builder& b) -> double& { return b.spec.run.regrid_threshold; })},
      {"run.max_lines", integer_at([](Builder& b) -> int& { return b.spec.run.max_lines; })},
      {"run.polar_samples", integer_at([](Builder& b) -> int& { return b.spec.polar_samples; })},
      {"run.limit_samples", integer_at([](Builder& b) -> int& { return b.spec.limit_samples; })},
      {"run.out",
       [](Builder& b, const std::string& v, std::string& why) {
         b.spec.out_dir = trim(v);
         if (b.spec.out_dir.empty()) return why = "empty output directory", false;
         return true;
       }},
      {"run.scan_eps_max", real_at([](Builder& b) -> double& { return b.spec.scan.eps_max; })},
      {"run.scan_eps_count", integer_at([](Builder& b) -> int& { return b.spec.scan.eps_count; })},
      {"run.scan_u_count", integer_at([](Builder& b) -> int& { return b.spec.scan.u_count; })},
      {"run.scan_delta", real_at([](Builder& b) -> double& { return b.spec.scan.delta; })},
      {"run.corner_u", integer_at([](Builder& b) -> int& { return b.spec.scan.corner_u; })},
      {"run.corner_ratio", integer_at([](Builder& b) -> int& { return b.spec.scan.corner_ratio; })},
      {"sweep.epsilon",
       [](Builder& b, const std::string& v, std::string& why) {
         b.spec.sweep.epsilons.clear();
         for (const auto& item : split(v, ',')) {
           double e;
           if (!to_double(item, e)) return why = "not a number in list: '" + item + "'", false;
           b.spec.sweep.epsilons.push_back(e);
         }
         return true;
       }},
      {"sweep.n_across",
       [](Builder& b, const std::string& v, std::string& why) {
         b.spec.sweep.n_across.clear();
         for (const auto& item : split(v, ',')) {
           int n;
           if (!to_int(item, n)) return why = "not an integer in list: '" + item + "'", false;
           b.spec.sweep.n_across.push_back(n);
         }
         return true;
       }},
      {"sweep.xi0", real_at([](Builder& b) -> double& { return b.spec.sweep.xi0; })},
      {"sweep.workers", integer_at([](Builder& b) -> int& { return b.spec.workers; })},
  };
  return m;
}

void add(std::vector<ConfigIssue>& out, const std::string& field, const std::string& msg) {
  out.push_back({Errc::ValidationError, 0, field, msg});
}

}  // namespace

std::string ConfigIssue::str() const {
  std::ostringstream os;
  os << errc_name(code);
  if (line > 0) os << " at line " << line;
  if (!field.empty()) os << " [" << field << "]";
  os << ": " << message;
  return os.str();
}

namespace {
std::string join_issues(const std::vector<ConfigIssue>& v) {
  std::string s;
  for (const auto& i : v) s += (s.empty() ? "" : "; ") + i.str();
  return s;
}
Errc worst_code(const std::vector<ConfigIssue>& v) {
  for (const auto& i : v)
    if (i.code == Errc::ParseError) return Errc::ParseError;
  return Errc::ValidationError;
}
}  // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : Error(worst_code(issues), join_issues(issues)), issues_(std::move(issues)) {}

WedgeProfile parse_wedge(const std::string& text) {
  const std::string t = trim(text);
  const auto colon = t.find(':');
  if (colon == std::string::npos) fail(Errc::ValidationError, "wedge needs 'family:params', got '" + t + "'");
  const std::string fam = t.substr(0, colon);
  std::vector<double> p;
  for (const auto& item : split(t.substr(colon + 1), ',')) {
    double v;
    if (!to_double(item, v)) fail(Errc::ValidationError, "bad wedge parameter '" + item + "'");
    p.push_back(v);
  }
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      fail(Errc::ValidationError, fam + " takes " + std::to_string(n) + " parameter(s), got " + std::to_string(p.size()));
  };
  if (fam == "straight") {
    need(1);
    return WedgeProfile::straight(p[0]);
  }
  if (fam == "power_decay_bend") {
    need(3);
    return WedgeProfile::power_decay_bend(p[0], p[1], p[2]);
  }
  if (fam == "oscillatory_bend") {
    need(3);
    return WedgeProfile::oscillatory_bend(p[0], p[1], p[2]);
  }
  if (fam == "log_bullet") {
    need(1);
    return WedgeProfile::log_bullet(p[0]);
  }
  fail(Errc::ValidationError, "unknown wedge family '" + fam + "'");
}

std::vector<ConfigIssue> validate_spec(const RunSpec& s) {
  std::vector<ConfigIssue> out;
  const RunConfig& r = s.run;
  const GasModel& g = r.gas;
  if (!(g.gamma > 1.0 && g.gamma < 3.0)) add(out, "gas.gamma", "gamma must lie in (1,3), got " + num(g.gamma));
  if (!(g.qbar > 0.0)) add(out, "gas.qbar", "qbar must be positive");
  bool gas_ok = out.empty();
  auto check_eps = [&](double e, const std::string& field) {
    if (!(e > 0.0)) {
      add(out, field, "epsilon must be positive, got " + num(e));
      return;
    }
    if (!gas_ok) return;
    try {
      freestream_from_epsilon(e, g);
    } catch (const Error& err) {
      add(out, field, err.what());
    }
  };
  check_eps(r.epsilon, "gas.epsilon");
  for (double e : s.sweep.epsilons) check_eps(e, "sweep.epsilon");
  if (gas_ok) {
    const CaseResult c = classify_case(r.wedge, g);
    if (c.kind == CaseKind::Invalid) add(out, "wedge.profile", "classify_case: " + c.reason);
  }
  if (r.n_across < 3) add(out, "run.n_across", "n_across must be >= 3");
  if (!(r.x_start > 0.0)) add(out, "run.x_start", "x_start must be positive");
  if (!(r.x_max > r.x_start)) add(out, "run.x_max", "x_max must exceed x_start");
  if (r.corrector_passes < 0 || r.corrector_passes > 10) add(out, "run.corrector_passes", "must lie in [0, 10]");
  if (!(r.regrid_threshold >= 0.0)) add(out, "run.regrid_threshold", "must be >= 0");
  if (r.max_lines < 0) add(out, "run.max_lines", "must be >= 0");
  if (s.polar_samples < 2) add(out, "run.polar_samples", "need at least 2 samples");
  if (s.limit_samples < 2) add(out, "run.limit_samples", "need at least 2 samples");
  for (int n : s.sweep.n_across)
    if (n < 3) add(out, "sweep.n_across", "n_across must be >= 3, got " + std::to_string(n));
  if (!(s.sweep.xi0 > 0.0)) add(out, "sweep.xi0", "xi0 must be positive");
  if (s.workers < 1) add(out, "sweep.workers", "workers must be >= 1");
  if (!(s.scan.eps_max > 0.0)) add(out, "run.scan_eps_max", "must be positive");
  if (s.scan.eps_count < 1 || s.scan.u_count < 1) add(out, "run.scan_eps_count", "scan counts must be >= 1");
  if (!(s.scan.delta > 0.0)) add(out, "run.scan_delta", "must be positive");
  if (s.scan.corner_u < 1 || s.scan.corner_ratio < 1) add(out, "run.corner_u", "corner counts must be >= 1");
  return out;
}

RunSpec parse_config(const std::string& text) {
  std::vector<ConfigIssue> issues;
  Builder b;
  std::map<std::string, int> seen;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      issues.push_back({Errc::ParseError, lineno, "", "expected key = value"});
      continue;
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      issues.push_back({Errc::ParseError, lineno, "", "empty key"});
      continue;
    }
    if (auto it = shorthands().find(key); it != shorthands().end()) key = it->second;
    const auto st = setters().find(key);
    if (st == setters().end()) {
      issues.push_back({Errc::ValidationError, lineno, key, "unknown key"});
      continue;
    }
    if (auto it = seen.find(key); it != seen.end()) {
      issues.push_back({Errc::ValidationError, lineno, key, "duplicate key (first at line " + std::to_string(it->second) + ")"});
      continue;
    }
    seen[key] = lineno;
    std::string why;
    if (!st->second(b, value, why)) issues.push_back({Errc::ParseError, lineno, key, why});
  }

  RunSpec& s = b.spec;
  s.run.gas.gamma = b.gamma;
  s.run.gas.qbar = b.qbar;
  try {
    s.run.gas = make_gas(b.gamma, b.qbar, b.pressure_const);
  } catch (const Error&) {
    // reported by validate_spec, or below for the pressure constant
    if (!(b.pressure_const > 0.0)) add(issues, "gas.pressure_const", "pressure constant must be positive");
  }
  bool wedge_ok = true;
  try {
    WedgeProfile w = parse_wedge(b.wedge_text);
    s.run.wedge = b.horizon == 1e4 ? w : [&] {
      // rebuild with the requested horizon
      const auto& p = w.params();
      switch (w.family()) {
        case WedgeFamily::Straight: return WedgeProfile::straight(p[0], b.horizon);
        case WedgeFamily::PowerDecayBend: return WedgeProfile::power_decay_bend(p[0], p[1], p[2], b.horizon);
        case WedgeFamily::OscillatoryBend: return WedgeProfile::oscillatory_bend(p[0], p[1], p[2], b.horizon);
        case WedgeFamily::LogBullet: return WedgeProfile::log_bullet(p[0], b.horizon);
      }
      return w;
    }();
  } catch (const Error& e) {
    wedge_ok = false;
    add(issues, "wedge.profile", e.what());
  }
  for (auto& i : validate_spec(s))
    if (wedge_ok || i.field != "wedge.profile") issues.push_back(std::move(i));
  if (!issues.empty()) throw ConfigError(std::move(issues));
  return s;
}

std::string RunSpec::canonical() const {
  std::ostringstream os;
  const RunConfig& r = run;
  os << "gas.gamma=" << num(r.gas.gamma) << "\n"
     << "gas.qbar=" << num(r.gas.qbar) << "\n"
     << "gas.pressure_const=" << num(r.gas.pressure_const) << "\n"
     << "gas.epsilon=" << num(r.epsilon) << "\n"
     << "wedge.profile=" << r.wedge.describe() << "\n"
     << "wedge.horizon=" << num(r.wedge.horizon()) << "\n"
     << "run.n_across=" << r.n_across << "\n"
     << "run.x_start=" << num(r.x_start) << "\n"
     << "run.x_max=" << num(r.x_max) << "\n"
     << "run.corrector_passes=" << r.corrector_passes << "\n"
     << "run.regrid=" << (r.regrid ? "true" : "false") << "\n"
     << "run.regrid_threshold=" << num(r.regrid_threshold) << "\n"
     << "run.max_lines=" << r.max_lines << "\n"
     << "run.polar_samples=" << polar_samples << "\n"
     << "run.limit_samples=" << limit_samples << "\n"
     << "run.scan_eps_max=" << num(scan.eps_max) << "\n"
     << "run.scan_eps_count=" << scan.eps_count << "\n"
     << "run.scan_u_count=" << scan.u_count << "\n"
     << "run.scan_delta=" << num(scan.delta) << "\n"
     << "run.corner_u=" << scan.corner_u << "\n"
     << "run.corner_ratio=" << scan.corner_ratio << "\n"
     << "sweep.epsilon=";
  for (std::size_t i = 0; i < sweep.epsilons.size(); ++i) os << (i ? "," : "") << num(sweep.epsilons[i]);
  os << "\nsweep.n_across=";
  for (std::size_t i = 0; i < sweep.n_across.size(); ++i) os << (i ? "," : "") << sweep.n_across[i];
  os << "\nsweep.xi0=" << num(sweep.xi0) << "\n";
  // out_dir and workers do not change results and stay out of the hash
  return os.str();
}

std::string RunSpec::hash() const {
  // FNV-1a, 64 bit
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sl

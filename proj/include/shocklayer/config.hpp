#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shocklayer/errors.hpp"
#include "shocklayer/moc.hpp"

namespace sl {

struct SweepSpec {
  std::vector<double> epsilons;  // empty: the run epsilon only
  std::vector<int> n_across;     // empty: the run n_across only
  double xi0 = 2.0;              // station of the formal-derivative trend
};

struct ScanSpec {
  double eps_max = 0.01;
  int eps_count = 200;
  int u_count = 200;
  double delta = 1e-3;  // in units of qbar
  int corner_u = 200;
  int corner_ratio = 200;
};

struct RunSpec {
  RunConfig run;
  SweepSpec sweep;
  ScanSpec scan;
  int polar_samples = 200;
  int limit_samples = 200;
  std::string out_dir = "out";
  int workers = 1;
  // canonical key=value listing of every setting; the hash is taken over it
  std::string canonical() const;
  std::string hash() const;  // 16 hex digits
};

struct ConfigIssue {
  Errc code = Errc::ValidationError;
  int line = 0;  // 0 when the issue concerns the document as a whole
  std::string field;
  std::string message;
  std::string str() const;
};

// Carries every problem found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<ConfigIssue> issues);
  const std::vector<ConfigIssue>& issues() const { return issues_; }

 private:
  std::vector<ConfigIssue> issues_;
};

// Flat "section.key = value" lines; '#' starts a comment. Sections: gas, wedge, run, sweep.
// A few bare keys (gamma, qbar, epsilon, wedge, x_max, n_across, x_start) are accepted as
// shorthands. Throws ConfigError.
RunSpec parse_config(const std::string& text);

// Re-checks a spec after command-line overrides. Empty when valid.
std::vector<ConfigIssue> validate_spec(const RunSpec& spec);

// "straight:0.17633", "power_decay_bend:m,b,a", "oscillatory_bend:m,b,a", "log_bullet:a"
WedgeProfile parse_wedge(const std::string& text);

}  // namespace sl

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "shocklayer/config.hpp"
#include "shocklayer/io.hpp"

namespace sl {

// Process exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInput = 2, kExitBreakdown = 3 };

const std::vector<std::string>& subcommand_names();

// Trend table for a sweep: one trend per resolution, over the epsilon list.
struct SweepOutcome {
  std::vector<SweepRow> rows;
  std::vector<std::pair<int, TrendReport>> trends;  // (n_across, trend)
  std::string trend_note;                           // set when a trend could not be formed
};
// Jobs run on `workers` threads; rows come back in job order whatever the thread count.
SweepOutcome run_sweep(const RunSpec& spec);

// Largest derivative measured on a straight wedge of the same tip slope and resolution.
double straight_noise_floor(const RunConfig& cfg);

// Runs one subcommand, writes its files under <out_dir>/<name>-<hash>/ and returns the exit
// code. Library errors propagate to the caller.
int run_subcommand(const std::string& name, const RunSpec& spec, std::ostream& log);

// Maps an error to an exit code: input problems give 2, solver failures 3.
int exit_code_for(const Error& e);

std::string output_dir(const std::string& name, const RunSpec& spec);

}  // namespace sl

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "shocklayer/config.hpp"
#include "shocklayer/io.hpp"
#include "shocklayer/runner.hpp"

using namespace sl;

namespace {

bool has_issue(const ConfigError& e, const std::string& field) {
  for (const auto& i : e.issues())
    if (i.field == field) return true;
  return false;
}

std::string tmp_root(const std::string& tag) {
  const auto p = std::filesystem::temp_directory_path() / ("shocklayer_test_" + tag);
  std::filesystem::remove_all(p);
  return p.string();
}

}  // namespace

TEST(Config, ParsesSectionsAndShorthands) {
  const RunSpec s = parse_config(
      "# run\n"
      "gamma = 2.5\n"
      "gas.epsilon = 0.02\n"
      "wedge = log_bullet:0.1\n"
      "run.n_across = 12   # inline comment\n"
      "sweep.epsilon = 0.04, 0.02\n");
  EXPECT_DOUBLE_EQ(s.run.gas.gamma, 2.5);
  EXPECT_DOUBLE_EQ(s.run.epsilon, 0.02);
  EXPECT_EQ(s.run.wedge.family(), WedgeFamily::LogBullet);
  EXPECT_EQ(s.run.n_across, 12);
  ASSERT_EQ(s.sweep.epsilons.size(), 2u);
}

TEST(Config, GammaOutOfRangeRejected) {
  try {
    parse_config("gamma = 3.5\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(has_issue(e, "gas.gamma"));
  }
}

TEST(Config, SteepWedgeRejectedByCaseClassification) {
  try {
    parse_config("gamma = 2\nwedge = straight:2\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(has_issue(e, "wedge.profile"));
  }
}

TEST(Config, AllProblemsReportedTogether) {
  try {
    parse_config("run.bogus = 1\nrun.n_across = abc\nnot a pair\ngamma = 2\ngamma = 2\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_GE(e.issues().size(), 4u);
    EXPECT_EQ(e.code(), Errc::ParseError);
  }
}

TEST(Config, HashIgnoresOutputLocation) {
  RunSpec a = parse_config("epsilon = 0.03\n");
  RunSpec b = a;
  b.out_dir = "elsewhere";
  b.workers = 8;
  EXPECT_EQ(a.hash(), b.hash());
  b.run.epsilon = 0.031;
  EXPECT_NE(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
}

TEST(Config, OverridesRevalidated) {
  RunSpec s = parse_config("");
  s.run.x_start = -1.0;
  EXPECT_FALSE(validate_spec(s).empty());
}

TEST(Io, SeventeenDigitFormatting) {
  EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
  EXPECT_EQ(fmt17(std::nan("")), "nan");
}

// Same inputs, same bytes; thread count does not change sweep output.
TEST(Determinism, SolveAndSweepByteIdentical) {
  RunSpec s = parse_config("wedge = power_decay_bend:0.3,0.1,1\nx_max = 1.5\nn_across = 10\n");
  std::ostringstream log;
  std::string first, second;
  for (int k = 0; k < 2; ++k) {
    s.out_dir = tmp_root("det" + std::to_string(k));
    EXPECT_EQ(run_subcommand("solve", s, log), kExitOk) << log.str();
    const std::string dir = output_dir("solve", s);
    (k ? second : first) = read_file(dir + "/net.csv") + read_file(dir + "/shock.csv") + read_file(dir + "/report.json");
  }
  EXPECT_EQ(first, second);

  s.sweep.epsilons = {0.04, 0.03};
  s.sweep.n_across = {8, 10};
  s.sweep.xi0 = 0.5;
  s.workers = 1;
  const SweepOutcome a = run_sweep(s);
  s.workers = 4;
  const SweepOutcome b = run_sweep(s);
  EXPECT_EQ(sweep_csv(a.rows), sweep_csv(b.rows));
  ASSERT_EQ(a.rows.size(), 4u);
  EXPECT_EQ(a.rows[1].epsilon, 0.03);
}

TEST(Runner, ExitCodes) {
  EXPECT_EQ(exit_code_for(Error(Errc::ParseError, "")), kExitInput);
  EXPECT_EQ(exit_code_for(Error(Errc::CharacteristicsDiverge, "")), kExitBreakdown);
  RunSpec s = parse_config("");
  s.out_dir = tmp_root("polar");
  std::ostringstream log;
  EXPECT_EQ(run_subcommand("polar", s, log), kExitOk);
  EXPECT_TRUE(std::filesystem::exists(output_dir("polar", s) + "/polar.csv"));
  EXPECT_THROW(run_subcommand("nope", s, log), Error);
}

// Command-line front end: shocklayer_cli <subcommand> [--config FILE] [overrides]
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "shocklayer/config.hpp"
#include "shocklayer/io.hpp"
#include "shocklayer/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Supersonic flow past a slender wedge: shock layer solver and checks"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // global options may follow the subcommand

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> workers, n_across;
  std::optional<double> seed_x, x_max;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output root (default: out)");
  app.add_option("--workers", workers, "threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed-x", seed_x, "abscissa of the self-similar seed line");
  app.add_option("--n-across", n_across, "points per data line");
  app.add_option("--x-max", x_max, "end of the march");

  const char* help[] = {"shock polar trace to polar.csv",
                        "vacuum-limit states along the wall to limit.csv",
                        "march the net; net.csv, shock.csv, report.json",
                        "epsilon x resolution sweep; sweep.csv, trend.json",
                        "diagnostics report; thickness.csv, decay.csv, report.json",
                        "exact gamma = 2 algebra and sign scans",
                        "run the acceptance suite"};
  for (std::size_t i = 0; i < sl::subcommand_names().size(); ++i) app.add_subcommand(sl::subcommand_names()[i], help[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sl::kExitInput;
  }
  const std::string name = app.get_subcommands().front()->get_name();

  try {
    sl::RunSpec spec = sl::parse_config(config_path.empty() ? std::string() : sl::read_file(config_path));
    if (out_dir) spec.out_dir = *out_dir;
    if (workers) spec.workers = *workers;
    if (seed_x) spec.run.x_start = *seed_x;
    if (n_across) spec.run.n_across = *n_across;
    if (x_max) spec.run.x_max = *x_max;
    const auto issues = sl::validate_spec(spec);
    if (!issues.empty()) throw sl::ConfigError(issues);
    return sl::run_subcommand(name, spec, std::cout);
  } catch (const sl::ConfigError& e) {
    for (const auto& i : e.issues()) std::cerr << "error: " << i.str() << "\n";
    return sl::kExitInput;
  } catch (const sl::Error& e) {
    std::cerr << "error: " << sl::errc_name(e.code()) << ": " << e.what() << "\n";
    return sl::exit_code_for(e);
  }
}

#include "gibbs/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "gibbs/cli/csv.hpp"
#include "gibbs/cli/svg.hpp"
#include "gibbs/cli/validation.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/stats.hpp"

namespace gibbs::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw ConfigError("cannot write to '" + path + "'");
  return file;
}

void close_output(std::ofstream& file, const std::string& path) {
  file.close();
  if (!file) throw ConfigError("failed while writing '" + path + "'");
}

void write_sweep_files(const std::string& base, const SweepResult& result) {
  auto csv = open_output(base + ".csv");
  write_sweep_csv(csv, result);
  close_output(csv, base + ".csv");
  auto svg = open_output(base + ".svg");
  write_sweep_svg(svg, result);
  close_output(svg, base + ".svg");
}

}  // namespace

int cmd_sample(const ExperimentConfig& config, std::ostream& log) {
  config.validate(Command::sample);
  const auto model = config.single_template();
  const double r = config.half_range();
  const auto base = config.output_base(Command::sample);

  PrsOptions options;
  options.workers = config.workers;
  const auto run = ExperimentSampler(model, r).run(config.seed, options);

  SampleTable table{model.dim, run.sample};
  auto csv = open_output(base + ".csv");
  write_sample_csv(csv, table);
  close_output(csv, base + ".csv");
  auto svg = open_output(base + ".svg");
  write_sample_svg(svg, table, r);
  close_output(svg, base + ".svg");
  log << "wrote " << run.sample.size() << " points after " << run.trace.total_iterations()
      << " iterations to " << base << ".csv and " << base << ".svg\n";
  return kExitOk;
}

int cmd_sweep(const ExperimentConfig& config, std::ostream& log) {
  config.validate(Command::sweep);
  const auto base = config.output_base(Command::sweep);
  const auto reps = config.replications(Command::sweep);
  SweepResult all;
  for (const auto& model : config.templates()) {
    try {
      const auto part =
          mean_iterations_sweep(model, config.cells_per_axis, reps, config.seed, config.workers);
      all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
    } catch (const SweepError& e) {
      all.rows.insert(all.rows.end(), e.partial().rows.begin(), e.partial().rows.end());
      write_sweep_files(base, all);
      throw;
    }
  }
  write_sweep_files(base, all);
  log << "wrote " << all.rows.size() << " rows to " << base << ".csv and " << base << ".svg\n";
  return kExitOk;
}

int cmd_validate(const ExperimentConfig& config, std::ostream& log) {
  config.validate(Command::validate);
  const auto model = config.single_template();
  const auto draws = config.replications(Command::validate);
  const auto report =
      run_validation(model, config.half_range(), draws, config.seed, config.workers);
  for (const auto& check : report.checks) {
    log << (check.passed ? "PASS " : "FAIL ") << check.name;
    if (check.p_value) log << " p=" << std::setprecision(4) << *check.p_value;
    log << " (" << check.detail << ")\n";
  }
  log << (report.passed() ? "all checks passed\n" : "validation FAILED\n");
  return report.passed() ? kExitOk : kExitValidationFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect samples of finite-range Gibbs point processes by partial rejection sampling"};
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string model = "hard-core";
  double range = 0.0;
  double kappa0_1 = 0.0, kappa0_2 = 0.0, lambda = 0.0, beta = 0.0;
  std::uint64_t reps = 0;

  app.add_option("--model", model,
                 "hard-core, strauss, strauss-hard-core, psm or area-interaction")
      ->capture_default_str();
  app.add_option("--d", config.dim, "dimension (1-3)")->capture_default_str();
  auto* k_opt = app.add_option("--K", config.cells_per_axis, "cells per axis; 2r = 1/K (a list for sweep)");
  auto* range_opt = app.add_option("--range", range, "interaction range 2r");
  k_opt->excludes(range_opt);
  app.add_option("--kappa0", config.kappa0, "reduced intensity kappa0 (a list for sweep)");
  app.add_option("--gamma", config.gamma, "Strauss interaction parameter (a list for sweep)");
  app.add_option("--kappa0-1", kappa0_1, "psm type-1 reduced intensity");
  app.add_option("--kappa0-2", kappa0_2, "psm type-2 reduced intensity");
  app.add_option("--lambda", lambda, "area-interaction reference intensity");
  app.add_option("--beta", beta, "area-interaction inverse temperature");
  app.add_option("--reps", reps, "sweep replications or validation draws");
  app.add_option("--seed", config.seed, "master seed")->capture_default_str();
  app.add_option("--workers", config.workers, "worker threads; results do not depend on it")
      ->capture_default_str();
  app.add_option("--out", config.out, "output path without extension");

  auto* sample = app.add_subcommand("sample", "draw one sample; writes CSV and SVG")->fallthrough();
  auto* sweep = app.add_subcommand("sweep", "mean iterations as a function of K")->fallthrough();
  auto* validate = app.add_subcommand("validate", "compare against the rejection oracle")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    config.model = parse_model_kind(model);
    if (app.count("--range")) config.range = range;
    if (app.count("--kappa0-1")) config.kappa0_1 = kappa0_1;
    if (app.count("--kappa0-2")) config.kappa0_2 = kappa0_2;
    if (app.count("--lambda")) config.lambda = lambda;
    if (app.count("--beta")) config.beta = beta;
    if (app.count("--reps")) config.reps = reps;

    if (*sample) return cmd_sample(config, out);
    if (*sweep) return cmd_sweep(config, out);
    if (*validate) return cmd_validate(config, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const SweepError& e) {
    err << e.what() << "\ncompleted rows were written\n";
    return kExitIterationCap;
  } catch (const IterationCapExceeded& e) {
    err << e.what() << '\n';
    return kExitIterationCap;
  } catch (const AttemptCapExceeded& e) {
    err << e.what() << '\n';
    return kExitIterationCap;
  }
  return kExitConfigError;
}

}  // namespace gibbs::cli

#include "gibbs/cli/experiment_config.hpp"

#include <cmath>
#include <sstream>

namespace gibbs::cli {

namespace {

bool has_gamma(ModelKind kind) {
  return kind == ModelKind::strauss || kind == ModelKind::strauss_hard_core;
}

std::string name(Command c) {
  switch (c) {
    case Command::sample: return "sample";
    case Command::sweep: return "sweep";
    case Command::validate: return "validate";
  }
  return "";
}

void fail(const std::string& message) { throw ConfigError(message); }

}  // namespace

void ExperimentConfig::validate(Command command) const {
  const std::string model_name = to_string(model);
  if (dim < 1 || dim > 3) fail("--d must be 1, 2 or 3");
  if (cells_per_axis.empty() == !range.has_value()) {
    fail("give exactly one of --K (2r = 1/K) or --range (2r)");
  }
  if (command == Command::sweep && cells_per_axis.empty()) fail("sweep needs a list of --K values");
  for (int k : cells_per_axis) {
    if (k < 1) fail("--K values must be positive integers");
  }
  if (range && !(*range > 0.0 && *range <= 1.0)) fail("--range (2r) must lie in (0, 1]");
  if (command != Command::sweep && cells_per_axis.size() > 1) {
    fail(name(command) + " takes a single --K value");
  }

  for (double k0 : kappa0) {
    if (!(k0 >= 0.0) || !std::isfinite(k0)) fail("--kappa0 values must be finite and >= 0");
  }
  if (command != Command::sweep && kappa0.size() > 1) {
    fail(name(command) + " takes a single --kappa0 value");
  }
  if (model == ModelKind::psm) {
    if (!kappa0.empty()) fail("psm is parameterised by --kappa0-1 and --kappa0-2, not --kappa0");
    if (kappa0_1.value_or(kDefaultPsmKappa0) + kappa0_2.value_or(kDefaultPsmKappa0) <= 0.0) {
      fail("psm needs --kappa0-1 + --kappa0-2 > 0");
    }
  } else if (kappa0_1 || kappa0_2) {
    fail("--kappa0-1/--kappa0-2 apply only to --model psm");
  }
  if ((lambda || beta) && model != ModelKind::area_interaction) {
    fail("--lambda/--beta apply only to --model area-interaction");
  }

  if (has_gamma(model)) {
    if (gamma.empty()) fail(model_name + " needs --gamma in [0, 1]");
    if (command != Command::sweep && gamma.size() > 1) {
      fail(name(command) + " takes a single --gamma value");
    }
  } else if (!gamma.empty()) {
    fail("--gamma applies only to strauss and strauss-hard-core");
  }
  for (double g : gamma) {
    if (!(g >= 0.0 && g <= 1.0)) fail("--gamma values must lie in [0, 1]");
  }

  if (reps && *reps == 0) fail("--reps must be positive");
  if (workers == 0) fail("--workers must be at least 1");

  if (command == Command::validate) {
    if (2.0 * half_range() < kMinValidationRange * (1.0 - 1e-12)) {
      std::ostringstream msg;
      msg << "validate runs whole-domain rejection oracles and needs 2r >= " << kMinValidationRange
          << " (use --K 4 or smaller, or --range >= " << kMinValidationRange << ")";
      fail(msg.str());
    }
  }
  for (const auto& t : templates()) {
    try {
      t.validate();
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
}

std::vector<ModelTemplate> ExperimentConfig::templates() const {
  ModelTemplate base;
  base.kind = model;
  base.dim = dim;
  base.kappa0_1 = kappa0_1.value_or(kDefaultPsmKappa0);
  base.kappa0_2 = kappa0_2.value_or(kDefaultPsmKappa0);
  base.lambda = lambda;
  base.beta = beta;

  const std::vector<double> k0s = kappa0.empty() ? std::vector<double>{kDefaultKappa0} : kappa0;
  const std::vector<double> gs = gamma.empty() ? std::vector<double>{0.0} : gamma;
  std::vector<ModelTemplate> out;
  for (double k0 : model == ModelKind::psm ? std::vector<double>{0.0} : k0s) {
    for (double g : gs) {
      ModelTemplate t = base;
      t.kappa0 = k0;
      t.gamma = g;
      out.push_back(t);
    }
  }
  return out;
}

ModelTemplate ExperimentConfig::single_template() const {
  return templates().front();
}

double ExperimentConfig::half_range() const {
  if (range) return 0.5 * *range;
  return 0.5 / cells_per_axis.front();
}

std::uint64_t ExperimentConfig::replications(Command command) const {
  if (reps) return *reps;
  return command == Command::validate ? kDefaultValidationDraws : kDefaultSweepReps;
}

std::string ExperimentConfig::output_base(Command command) const {
  if (!out.empty()) return out;
  return command == Command::sweep ? "sweep" : "sample";
}

}  // namespace gibbs::cli

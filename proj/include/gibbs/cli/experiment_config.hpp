#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gibbs/model_template.hpp"

namespace gibbs::cli {

/// Invalid or inconsistent user input. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { sample, sweep, validate };

struct ExperimentConfig {
  ModelKind model = ModelKind::hard_core;
  int dim = 2;
  // Exactly one of these is set; 2r = 1/K.
  std::vector<int> cells_per_axis;
  std::optional<double> range;
  std::vector<double> kappa0;
  std::vector<double> gamma;
  std::optional<double> kappa0_1;
  std::optional<double> kappa0_2;
  std::optional<double> lambda;
  std::optional<double> beta;
  std::optional<std::uint64_t> reps;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;

  /// Throws ConfigError describing the first problem found.
  void validate(Command command) const;

  /// One template per (kappa0, gamma) combination, in input order.
  std::vector<ModelTemplate> templates() const;
  /// The single template of a sample or validate run.
  ModelTemplate single_template() const;
  /// r for a sample or validate run.
  double half_range() const;
  std::uint64_t replications(Command command) const;
  std::string output_base(Command command) const;
};

inline constexpr double kDefaultKappa0 = 0.1;
inline constexpr double kDefaultPsmKappa0 = 0.05;
inline constexpr std::uint64_t kDefaultSweepReps = 1000;
inline constexpr std::uint64_t kDefaultValidationDraws = 100'000;
// Oracles are only affordable at desk scale.
inline constexpr double kMinValidationRange = 0.25;

}  // namespace gibbs::cli

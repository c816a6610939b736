#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gibbs/models.hpp"
#include "gibbs/prs_engine.hpp"

namespace gibbs {

enum class ModelKind { hard_core, strauss, strauss_hard_core, psm, area_interaction };

ModelKind parse_model_kind(std::string_view text);
std::string to_string(ModelKind kind);

/// A model family with intensities given in reduced form, kappa = kappa0 / (v_d r^d),
/// so that it can be instantiated for any interaction range 2r.
struct ModelTemplate {
  ModelKind kind = ModelKind::hard_core;
  int dim = 2;
  double kappa0 = 0.1;
  double gamma = 0.0;
  double hard_core_ratio = 0.5;  // a1 / a2 for the Strauss hard-core model
  double kappa0_1 = 0.05;        // PSM type-1
  double kappa0_2 = 0.05;        // PSM type-2
  // Area-interaction intensities; when unset both are kappa0 / (v_d r^d).
  std::optional<double> lambda;
  std::optional<double> beta;

  double intensity(double reduced, double r) const;
  /// kappa0 reported in tables (kappa0_1 + kappa0_2 for PSM).
  double total_kappa0() const;
  /// gamma when the family has one, NaN otherwise.
  double reported_gamma() const;
  /// Pairwise model with interaction range 2r. Not valid for area-interaction.
  InteractionModel instantiate(double r) const;
  double area_lambda(double r) const;
  double area_beta(double r) const;
  void validate() const;
};

/// Sampler for a template on the unit cube with 2r = 1/K.
class ExperimentSampler {
 public:
  ExperimentSampler(const ModelTemplate& model, int cells_per_axis);
  ExperimentSampler(const ModelTemplate& model, double half_range);

  PrsRun run(std::uint64_t seed, const PrsOptions& options = {}) const;
  double half_range() const { return r_; }

 private:
  double r_;
  std::variant<PrsSampler, AreaInteractionSampler> sampler_;
};

}  // namespace gibbs

#include "gibbs/model_template.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gibbs {

namespace {

std::variant<PrsSampler, AreaInteractionSampler> make_sampler(const ModelTemplate& t, double r) {
  t.validate();
  if (t.kind == ModelKind::area_interaction) {
    return AreaInteractionSampler(t.area_lambda(r), t.area_beta(r), r, t.dim);
  }
  return PrsSampler(t.instantiate(r), GridPartition(BoxDomain::unit(t.dim), r));
}

}  // namespace

ModelKind parse_model_kind(std::string_view text) {
  if (text == "hard-core") return ModelKind::hard_core;
  if (text == "strauss") return ModelKind::strauss;
  if (text == "strauss-hard-core") return ModelKind::strauss_hard_core;
  if (text == "psm") return ModelKind::psm;
  if (text == "area-interaction") return ModelKind::area_interaction;
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected hard-core, strauss, strauss-hard-core, psm or "
                              "area-interaction)");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::hard_core: return "hard-core";
    case ModelKind::strauss: return "strauss";
    case ModelKind::strauss_hard_core: return "strauss-hard-core";
    case ModelKind::psm: return "psm";
    case ModelKind::area_interaction: return "area-interaction";
  }
  return "unknown";
}

double ModelTemplate::intensity(double reduced, double r) const {
  return reduced / (unit_ball_volume(dim) * std::pow(r, dim));
}

double ModelTemplate::total_kappa0() const {
  return kind == ModelKind::psm ? kappa0_1 + kappa0_2 : kappa0;
}

double ModelTemplate::reported_gamma() const {
  if (kind == ModelKind::strauss || kind == ModelKind::strauss_hard_core) return gamma;
  if (kind == ModelKind::hard_core) return 0.0;
  return std::numeric_limits<double>::quiet_NaN();
}

InteractionModel ModelTemplate::instantiate(double r) const {
  switch (kind) {
    case ModelKind::hard_core: return InteractionModel::hard_core(r, intensity(kappa0, r));
    case ModelKind::strauss: return InteractionModel::strauss(gamma, r, intensity(kappa0, r));
    case ModelKind::strauss_hard_core:
      return InteractionModel::strauss_hard_core(hard_core_ratio * 2.0 * r, 2.0 * r, gamma,
                                                 intensity(kappa0, r));
    case ModelKind::psm:
      return InteractionModel::penetrable_spheres(r, intensity(kappa0_1, r),
                                                  intensity(kappa0_2, r));
    case ModelKind::area_interaction: break;
  }
  throw std::invalid_argument("area-interaction has no pairwise model; use ExperimentSampler");
}

double ModelTemplate::area_lambda(double r) const {
  return lambda ? *lambda : intensity(kappa0, r);
}

double ModelTemplate::area_beta(double r) const {
  return beta ? *beta : intensity(kappa0, r);
}

void ModelTemplate::validate() const {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension must be 1, 2 or 3");
  auto nonneg = [](double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + " must be finite and non-negative");
    }
  };
  nonneg(kappa0, "kappa0");
  nonneg(kappa0_1, "kappa0-1");
  nonneg(kappa0_2, "kappa0-2");
  if (lambda) nonneg(*lambda, "lambda");
  if (beta) nonneg(*beta, "beta");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must lie in [0, 1]");
  if (!(hard_core_ratio > 0.0 && hard_core_ratio < 1.0)) {
    throw std::invalid_argument("hard-core ratio a1/a2 must lie in (0, 1)");
  }
  if (kind == ModelKind::psm && kappa0_1 + kappa0_2 <= 0.0) {
    throw std::invalid_argument("PSM needs kappa0-1 + kappa0-2 > 0");
  }
}

ExperimentSampler::ExperimentSampler(const ModelTemplate& model, int cells_per_axis)
    : ExperimentSampler(model, cells_per_axis > 0 ? 0.5 / cells_per_axis : -1.0) {}

ExperimentSampler::ExperimentSampler(const ModelTemplate& model, double half_range)
    : r_(half_range), sampler_(make_sampler(model, half_range)) {}

PrsRun ExperimentSampler::run(std::uint64_t seed, const PrsOptions& options) const {
  return std::visit([&](const auto& s) { return s.run(seed, options); }, sampler_);
}

}  // namespace gibbs

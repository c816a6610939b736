#include "gibbs/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gibbs {

namespace {

double strauss_energy(double gamma) {
  if (gamma >= 1.0) return 0.0;
  if (gamma <= 0.0) return kInfiniteEnergy;
  return -std::log(gamma);
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_gamma(double gamma) {
  require(gamma >= 0.0 && gamma <= 1.0, "gamma must lie in [0, 1]");
}

void check_intensity(double kappa) {
  require(kappa >= 0.0 && std::isfinite(kappa), "intensity must be finite and non-negative");
}

}  // namespace

InteractionModel::InteractionModel(Variant v, double kappa)
    : variant_(v), kappa_(kappa), range_(0.0), range_sq_(0.0), hard_sq_(0.0), soft_energy_(0.0) {
  std::visit(
      [this](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HardCore>) {
          range_ = 2.0 * m.r;
          hard_sq_ = range_ * range_;
        } else if constexpr (std::is_same_v<T, Strauss>) {
          range_ = 2.0 * m.r;
          soft_energy_ = strauss_energy(m.gamma);
        } else if constexpr (std::is_same_v<T, StraussHardCore>) {
          range_ = m.a2;
          hard_sq_ = m.a1 * m.a1;
          soft_energy_ = strauss_energy(m.gamma);
        } else {
          range_ = 2.0 * m.r;
        }
      },
      variant_);
  range_sq_ = range_ * range_;
}

InteractionModel InteractionModel::hard_core(double r, double kappa) {
  require(r > 0.0, "hard-core radius must be positive");
  check_intensity(kappa);
  return InteractionModel(HardCore{r}, kappa);
}

InteractionModel InteractionModel::strauss(double gamma, double r, double kappa) {
  require(r > 0.0, "Strauss radius must be positive");
  check_gamma(gamma);
  check_intensity(kappa);
  return InteractionModel(Strauss{gamma, r}, kappa);
}

InteractionModel InteractionModel::strauss_hard_core(double a1, double a2, double gamma,
                                                     double kappa) {
  require(a1 > 0.0 && a1 < a2, "Strauss hard-core distances need 0 < a1 < a2");
  check_gamma(gamma);
  check_intensity(kappa);
  return InteractionModel(StraussHardCore{a1, a2, gamma}, kappa);
}

InteractionModel InteractionModel::penetrable_spheres(double r, double kappa1, double kappa2) {
  require(r > 0.0, "PSM radius must be positive");
  check_intensity(kappa1);
  check_intensity(kappa2);
  require(kappa1 + kappa2 > 0.0, "PSM needs kappa1 + kappa2 > 0");
  return InteractionModel(PenetrableSpheres{r, kappa1, kappa2}, kappa1 + kappa2);
}

double InteractionModel::type1_probability() const {
  if (const auto* psm = std::get_if<PenetrableSpheres>(&variant_)) {
    return psm->kappa1 / (psm->kappa1 + psm->kappa2);
  }
  return 1.0;
}

bool InteractionModel::is_hard_constraint() const {
  return soft_energy_ == 0.0 || soft_energy_ == kInfiniteEnergy;
}

std::string InteractionModel::name() const {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HardCore>) return "hard-core";
        if constexpr (std::is_same_v<T, Strauss>) return "strauss";
        if constexpr (std::is_same_v<T, StraussHardCore>) return "strauss-hard-core";
        return "psm";
      },
      variant_);
}

double InteractionModel::interaction_at(double d2, Mark a, Mark b) const {
  if (d2 >= range_sq_) return 0.0;
  if (is_marked()) return a != b ? kInfiniteEnergy : 0.0;
  if (d2 < hard_sq_) return kInfiniteEnergy;
  return soft_energy_;
}

double pair_interaction(const InteractionModel& model, const MarkedPoint& x, const MarkedPoint& y,
                        const BoxDomain& domain) {
  return model.interaction_at(squared_distance(x.x, y.x, domain), x.mark, y.mark);
}

double potential(const InteractionModel& model, const PointConfig& config,
                 const BoxDomain& domain) {
  double total = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      total += pair_interaction(model, config[i], config[j], domain);
      if (total == kInfiniteEnergy) return total;
    }
  }
  return total;
}

double cross_potential(const InteractionModel& model, const PointConfig& a, const PointConfig& b,
                       const BoxDomain& domain) {
  double total = 0.0;
  for (const auto& x : a) {
    for (const auto& y : b) {
      total += pair_interaction(model, x, y, domain);
      if (total == kInfiniteEnergy) return total;
    }
  }
  return total;
}

double boltzmann_weight(double u) {
  if (!(u < 700.0)) return 0.0;
  return std::exp(-u);
}

double unit_ball_volume(int dim) {
  const double half = 0.5 * dim;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

}  // namespace gibbs

#pragma once

#include <limits>
#include <string>
#include <variant>

#include "gibbs/geometry.hpp"
#include "gibbs/point_config.hpp"

namespace gibbs {

// Energies live in [0, +inf]; +inf encodes hard exclusion.
inline constexpr double kInfiniteEnergy = std::numeric_limits<double>::infinity();

struct HardCore {
  double r;
};

struct Strauss {
  double gamma;
  double r;
};

struct StraussHardCore {
  double a1;
  double a2;
  double gamma;
};

struct PenetrableSpheres {
  double r;
  double kappa1;
  double kappa2;
};

/// A finite-range pairwise interaction family together with the intensity
/// of its reference Poisson process.
class InteractionModel {
 public:
  using Variant = std::variant<HardCore, Strauss, StraussHardCore, PenetrableSpheres>;

  static InteractionModel hard_core(double r, double kappa);
  static InteractionModel strauss(double gamma, double r, double kappa);
  static InteractionModel strauss_hard_core(double a1, double a2, double gamma, double kappa);
  static InteractionModel penetrable_spheres(double r, double kappa1, double kappa2);

  const Variant& variant() const { return variant_; }
  double reference_intensity() const { return kappa_; }
  double interaction_range() const { return range_; }
  bool is_marked() const { return std::holds_alternative<PenetrableSpheres>(variant_); }
  // Probability that a reference point carries mark 1 (PSM only; 1 otherwise).
  double type1_probability() const;
  // True when every interaction is either 0 or +inf.
  bool is_hard_constraint() const;
  std::string name() const;

  /// Interaction at squared distance d2 between marks a and b.
  double interaction_at(double d2, Mark a, Mark b) const;

 private:
  InteractionModel(Variant v, double kappa);

  Variant variant_;
  double kappa_;
  double range_;
  double range_sq_;
  double hard_sq_;      // exclusion radius squared (0 when none)
  double soft_energy_;  // -log(gamma), or 0
};

double pair_interaction(const InteractionModel& model, const MarkedPoint& x, const MarkedPoint& y,
                        const BoxDomain& domain);

/// Sum of pair interactions over all unordered pairs.
double potential(const InteractionModel& model, const PointConfig& config, const BoxDomain& domain);

/// Sum of pair interactions over x in a, y in b.
double cross_potential(const InteractionModel& model, const PointConfig& a, const PointConfig& b,
                       const BoxDomain& domain);

/// exp(-u), with exp(-inf) = 0 and weights below exp(-700) flushed to 0.
double boltzmann_weight(double u);

/// Volume of the unit ball in dimension d.
double unit_ball_volume(int dim);

}  // namespace gibbs

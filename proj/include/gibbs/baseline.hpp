#pragma once

#include <cstdint>

#include "gibbs/geometry.hpp"
#include "gibbs/models.hpp"
#include "gibbs/point_config.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

inline constexpr std::uint64_t kOracleAttemptCap = 10'000'000;

struct OracleReport {
  std::uint64_t attempts = 0;
  // accepted draws / attempts; estimates the normalising constant Z
  double acceptance_rate = 0.0;
};

struct OracleDraw {
  PointConfig sample;
  OracleReport report;
};

/// Whole-domain rejection: redraw the reference process until U <= exp(-U(X)).
OracleDraw naive_rejection_sample(const InteractionModel& model, const BoxDomain& domain,
                                  RandomStream& stream,
                                  std::uint64_t attempt_cap = kOracleAttemptCap);
OracleDraw naive_rejection_sample(const InteractionModel& model, const BoxDomain& domain,
                                  std::uint64_t seed,
                                  std::uint64_t attempt_cap = kOracleAttemptCap);

/// Midpoint-rule volume of window ∩ (union of balls of `radius` around the
/// points), on a grid of `resolution` nodes per axis. Exact for the rule:
/// along the last axis each ball contributes an interval and the covered
/// nodes are counted in closed form.
double union_ball_volume(const PointConfig& config, double radius, const BoxDomain& window,
                         int resolution);

inline constexpr int kDefaultQuadratureResolution = 512;

/// Rejection oracle for the area-interaction process on [0,1]^dim: reference
/// PPP(lambda), acceptance exp(-beta * Vol(union of balls of radius 2r)).
/// The volume is taken over [-2r, 1+2r]^dim, which contains every ball.
OracleDraw area_interaction_naive(double lambda, double beta, double r, int dim, int resolution,
                                  RandomStream& stream,
                                  std::uint64_t attempt_cap = kOracleAttemptCap);
OracleDraw area_interaction_naive(double lambda, double beta, double r, int dim, int resolution,
                                  std::uint64_t seed,
                                  std::uint64_t attempt_cap = kOracleAttemptCap);

}  // namespace gibbs

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gibbs/geometry.hpp"
#include "gibbs/models.hpp"
#include "gibbs/point_config.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

struct MarkLaw {
  double type1_probability = 1.0;
};

/// Homogeneous Poisson process on a box; marks are i.i.d. when a law is given.
/// Points are appended to `out`.
void sample_ppp(double intensity, const Box& region, const std::optional<MarkLaw>& marks,
                RandomStream& stream, PointConfig& out);
PointConfig sample_ppp(double intensity, const Box& region, const std::optional<MarkLaw>& marks,
                       RandomStream& stream);

/// One independent Poisson component of a cell's reference process.
struct PoissonComponent {
  double intensity = 0.0;
  Box support;
  std::optional<MarkLaw> marks;
};

/// The restricted Gibbs law on one cell: reference process given by the
/// superposition of `components`, tilted by exp(-U) of the within-cell potential.
struct CellLaw {
  InteractionModel model;
  Cell cell;
  std::vector<PoissonComponent> components;

  static CellLaw for_model(const InteractionModel& model, const Cell& cell);
  double expected_reference_count() const;
};

inline constexpr std::uint64_t kCellAttemptCap = 1'000'000;

struct CellDraw {
  PointConfig points;
  std::uint64_t attempts = 0;
};

/// Exact draw from the restricted law by rejection from its reference process.
/// Throws AttemptCapExceeded after `attempt_cap` rejections.
CellDraw sample_cell_gibbs_counted(const CellLaw& law, const BoxDomain& domain,
                                   RandomStream& stream,
                                   std::uint64_t attempt_cap = kCellAttemptCap);
PointConfig sample_cell_gibbs(const CellLaw& law, const BoxDomain& domain, RandomStream& stream,
                              std::uint64_t attempt_cap = kCellAttemptCap);

}  // namespace gibbs

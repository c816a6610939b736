#include "gibbs/cell_sampler.hpp"

#include <random>
#include <string>

#include "gibbs/errors.hpp"

namespace gibbs {

void sample_ppp(double intensity, const Box& region, const std::optional<MarkLaw>& marks,
                RandomStream& stream, PointConfig& out) {
  if (!(intensity > 0.0) || region.empty()) return;
  const double mean = intensity * region.volume();
  std::poisson_distribution<std::uint64_t> count_dist(mean);
  const std::uint64_t n = count_dist(stream);
  for (std::uint64_t i = 0; i < n; ++i) {
    MarkedPoint p;
    for (int k = 0; k < region.dim; ++k) {
      p.x[k] = region.lo[k] + (region.hi[k] - region.lo[k]) * stream.uniform();
    }
    if (marks) p.mark = stream.uniform() < marks->type1_probability ? 1 : 2;
    out.push_back(p);
  }
}

PointConfig sample_ppp(double intensity, const Box& region, const std::optional<MarkLaw>& marks,
                       RandomStream& stream) {
  PointConfig out;
  sample_ppp(intensity, region, marks, stream, out);
  return out;
}

CellLaw CellLaw::for_model(const InteractionModel& model, const Cell& cell) {
  CellLaw law{model, cell, {}};
  std::optional<MarkLaw> marks;
  if (model.is_marked()) marks = MarkLaw{model.type1_probability()};
  law.components.push_back({model.reference_intensity(), cell.bounds, marks});
  return law;
}

double CellLaw::expected_reference_count() const {
  double total = 0.0;
  for (const auto& c : components) {
    if (!c.support.empty()) total += c.intensity * c.support.volume();
  }
  return total;
}

CellDraw sample_cell_gibbs_counted(const CellLaw& law, const BoxDomain& domain,
                                   RandomStream& stream, std::uint64_t attempt_cap) {
  CellDraw draw;
  while (draw.attempts < attempt_cap) {
    ++draw.attempts;
    draw.points.clear();
    for (const auto& c : law.components) sample_ppp(c.intensity, c.support, c.marks, stream, draw.points);
    if (draw.points.size() < 2) return draw;
    const double weight = boltzmann_weight(potential(law.model, draw.points, domain));
    if (weight >= 1.0) return draw;
    if (weight > 0.0 && stream.uniform() <= weight) return draw;
  }
  throw AttemptCapExceeded("cell sampler exceeded " + std::to_string(attempt_cap) +
                           " attempts on cell " + std::to_string(law.cell.index) +
                           "; expected reference count " +
                           std::to_string(law.expected_reference_count()) + " is too large");
}

PointConfig sample_cell_gibbs(const CellLaw& law, const BoxDomain& domain, RandomStream& stream,
                              std::uint64_t attempt_cap) {
  return sample_cell_gibbs_counted(law, domain, stream, attempt_cap).points;
}

}  // namespace gibbs

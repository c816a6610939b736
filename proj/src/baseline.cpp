#include "gibbs/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gibbs/cell_sampler.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

Box domain_box(const BoxDomain& domain) {
  Box box{domain.dim, {}, {}};
  for (int k = 0; k < domain.dim; ++k) {
    box.lo[k] = domain.lower;
    box.hi[k] = domain.lower + domain.side;
  }
  return box;
}

OracleDraw finish(PointConfig sample, std::uint64_t attempts) {
  return {std::move(sample), {attempts, 1.0 / static_cast<double>(attempts)}};
}

[[noreturn]] void cap_exceeded(std::uint64_t cap) {
  throw AttemptCapExceeded("naive rejection exceeded " + std::to_string(cap) + " attempts");
}

// Number of nodes lo + (m + 1/2) h, m in [0, n), inside the closed interval [a, b].
long count_nodes(double a, double b, double lo, double h, int n) {
  const double first = std::ceil((a - lo) / h - 0.5);
  const double last = std::floor((b - lo) / h - 0.5);
  const long m0 = static_cast<long>(std::max(first, 0.0));
  const long m1 = static_cast<long>(std::min(last, static_cast<double>(n - 1)));
  return m1 >= m0 ? m1 - m0 + 1 : 0;
}

}  // namespace

OracleDraw naive_rejection_sample(const InteractionModel& model, const BoxDomain& domain,
                                  RandomStream& stream, std::uint64_t attempt_cap) {
  const Box region = domain_box(domain);
  std::optional<MarkLaw> marks;
  if (model.is_marked()) marks = MarkLaw{model.type1_probability()};
  PointConfig x;
  for (std::uint64_t attempt = 1; attempt <= attempt_cap; ++attempt) {
    x.clear();
    sample_ppp(model.reference_intensity(), region, marks, stream, x);
    if (x.size() < 2) return finish(std::move(x), attempt);
    const double weight = boltzmann_weight(potential(model, x, domain));
    if (weight >= 1.0 || (weight > 0.0 && stream.uniform() <= weight)) {
      return finish(std::move(x), attempt);
    }
  }
  cap_exceeded(attempt_cap);
}

OracleDraw naive_rejection_sample(const InteractionModel& model, const BoxDomain& domain,
                                  std::uint64_t seed, std::uint64_t attempt_cap) {
  auto stream = derive_stream({seed, StreamPurpose::oracle, 0, 0});
  return naive_rejection_sample(model, domain, stream, attempt_cap);
}

double union_ball_volume(const PointConfig& config, double radius, const BoxDomain& window,
                         int resolution) {
  if (resolution < 64) {
    throw std::invalid_argument("quadrature resolution must be at least 64 nodes per axis");
  }
  if (config.empty() || !(radius > 0.0)) return 0.0;
  const int dim = window.dim;
  const int last = dim - 1;
  const double h = window.side / resolution;
  const double lo = window.lower;
  const double r2 = radius * radius;

  // Walk the outer-axis nodes (none for d = 1) and collect, per node, the
  // chord of each ball along the last axis.
  long covered = 0;
  std::array<int, kMaxDim> node{};
  std::array<int, kMaxDim> node_lo{};
  std::array<int, kMaxDim> node_hi{};
  for (int k = 0; k < last; ++k) {
    double mn = INFINITY, mx = -INFINITY;
    for (const auto& p : config) {
      mn = std::min(mn, p.x[k] - radius);
      mx = std::max(mx, p.x[k] + radius);
    }
    node_lo[k] = std::max(0, static_cast<int>(std::ceil((mn - lo) / h - 0.5)));
    node_hi[k] = std::min(resolution - 1, static_cast<int>(std::floor((mx - lo) / h - 0.5)));
    if (node_hi[k] < node_lo[k]) return 0.0;
    node[k] = node_lo[k];
  }

  std::vector<std::pair<double, double>> chords;
  chords.reserve(config.size());
  while (true) {
    chords.clear();
    for (const auto& p : config) {
      double rest = r2;
      for (int k = 0; k < last; ++k) {
        const double d = lo + (node[k] + 0.5) * h - p.x[k];
        rest -= d * d;
      }
      if (rest < 0.0) continue;
      const double half = std::sqrt(rest);
      chords.emplace_back(p.x[last] - half, p.x[last] + half);
    }
    if (!chords.empty()) {
      std::sort(chords.begin(), chords.end());
      double a = chords.front().first;
      double b = chords.front().second;
      for (std::size_t i = 1; i < chords.size(); ++i) {
        if (chords[i].first > b) {
          covered += count_nodes(a, b, lo, h, resolution);
          a = chords[i].first;
        }
        b = std::max(b, chords[i].second);
      }
      covered += count_nodes(a, b, lo, h, resolution);
    }

    int k = 0;
    for (; k < last; ++k) {
      if (++node[k] <= node_hi[k]) break;
      node[k] = node_lo[k];
    }
    if (k == last) break;
  }
  return static_cast<double>(covered) * std::pow(h, dim);
}

OracleDraw area_interaction_naive(double lambda, double beta, double r, int dim, int resolution,
                                  RandomStream& stream, std::uint64_t attempt_cap) {
  if (!(lambda >= 0.0) || !(beta >= 0.0)) {
    throw std::invalid_argument("area-interaction needs lambda >= 0 and beta >= 0");
  }
  if (!(r > 0.0) || 2.0 * r > 1.0) {
    throw std::invalid_argument("area-interaction needs 0 < 2r <= 1");
  }
  const BoxDomain unit = BoxDomain::unit(dim);
  unit.validate();
  const BoxDomain enlarged{dim, 1.0 + 4.0 * r, -2.0 * r, false};
  const Box region = domain_box(unit);
  PointConfig x;
  for (std::uint64_t attempt = 1; attempt <= attempt_cap; ++attempt) {
    x.clear();
    sample_ppp(lambda, region, std::nullopt, stream, x);
    if (x.empty() || beta == 0.0) return finish(std::move(x), attempt);
    const double weight =
        boltzmann_weight(beta * union_ball_volume(x, 2.0 * r, enlarged, resolution));
    if (stream.uniform() <= weight) return finish(std::move(x), attempt);
  }
  cap_exceeded(attempt_cap);
}

OracleDraw area_interaction_naive(double lambda, double beta, double r, int dim, int resolution,
                                  std::uint64_t seed, std::uint64_t attempt_cap) {
  auto stream = derive_stream({seed, StreamPurpose::oracle, 0, 0});
  return area_interaction_naive(lambda, beta, r, dim, resolution, stream, attempt_cap);
}

}  // namespace gibbs

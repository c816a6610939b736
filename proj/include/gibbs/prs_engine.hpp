#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gibbs/cell_sampler.hpp"
#include "gibbs/geometry.hpp"
#include "gibbs/models.hpp"
#include "gibbs/point_config.hpp"

namespace gibbs {

/// Product-space assignment: one configuration per cell and one uniform per
/// dependency-graph vertex (indexed by VertexId).
struct SystemState {
  std::vector<PointConfig> cells;
  std::vector<double> edge_uniforms;
};

/// Bad event for {i,j}: U_ij > exp(-cross_potential(X_i, X_j)).
bool is_bad(const SystemState& state, const InteractionModel& model, const DependencyGraph& graph,
            const BoxDomain& domain, VertexId v);
std::vector<VertexId> bad_events(const SystemState& state, const InteractionModel& model,
                                 const DependencyGraph& graph, const BoxDomain& domain);

/// Least superset of `bad` closed under adding boundary vertices {j,k} for
/// which some endpoint j in I(Res) can still interact with cell k, i.e.
/// Dist(X_j, C_k) < 2r. Works on any partition.
std::vector<VertexId> resampling_set_general(const SystemState& state,
                                             std::span<const VertexId> bad,
                                             const DependencyGraph& graph,
                                             const GridPartition& partition);

/// Cubic-grid specialisation: the boundary test is X_j non-empty.
std::vector<VertexId> resampling_set_grid(const SystemState& state, std::span<const VertexId> bad,
                                          const DependencyGraph& graph);

/// Sorted union of the cell indices of a vertex set, I(W).
std::vector<std::uint32_t> cells_of(std::span<const VertexId> vertices,
                                    const DependencyGraph& graph);

enum class ResamplingRule { grid, general };

struct PrsOptions {
  std::uint32_t iteration_cap = 100'000;
  unsigned workers = 1;
  ResamplingRule rule = ResamplingRule::grid;
  // Test fixture only: false leaves U_ij of resampled vertices untouched,
  // which breaks exactness.
  bool resample_edge_uniforms = true;
};

struct IterationRecord {
  std::uint32_t iteration = 0;
  std::size_t bad = 0;
  std::size_t resampling_set = 0;
  std::size_t cells_sampled = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

/// Record t describes the state produced by sampling round t: how many cells
/// were (re)drawn to produce it, |Bad_t|, and |Res_t| (0 once Bad_t is empty).
struct RunTrace {
  std::vector<IterationRecord> iterations;

  std::size_t total_iterations() const { return iterations.size(); }
  friend bool operator==(const RunTrace&, const RunTrace&) = default;
};

struct PrsRun {
  PointConfig sample;
  RunTrace trace;
  SystemState final_state;
};

class IterationCapExceeded : public std::runtime_error {
 public:
  IterationCapExceeded(const std::string& what, RunTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const RunTrace& trace() const { return trace_; }

 private:
  RunTrace trace_;
};

/// Grid-partitioned partial rejection sampler. Holds the partition, the
/// dependency graph and per-cell laws so that repeated runs share them.
class PrsSampler {
 public:
  PrsSampler(const InteractionModel& model, GridPartition partition);
  // `laws` must hold one law per cell, in cell-index order.
  PrsSampler(const InteractionModel& model, GridPartition partition, std::vector<CellLaw> laws);

  PrsRun run(std::uint64_t seed, const PrsOptions& options = {}) const;

  const InteractionModel& model() const { return model_; }
  const GridPartition& partition() const { return partition_; }
  const DependencyGraph& graph() const { return graph_; }
  const std::vector<CellLaw>& laws() const { return laws_; }

 private:
  InteractionModel model_;
  GridPartition partition_;
  DependencyGraph graph_;
  std::vector<CellLaw> laws_;
};

PrsRun prs_sample(const InteractionModel& model, const GridPartition& partition,
                  std::uint64_t seed, const PrsOptions& options = {});

/// Area-interaction process on [0,1]^dim with reference intensity lambda,
/// inverse temperature beta and ball radius 2r, via the two-type model on
/// [-2r, 1+2r]^dim. Returns the type-1 points (unmarked).
class AreaInteractionSampler {
 public:
  AreaInteractionSampler(double lambda, double beta, double r, int dim);
  PrsRun run(std::uint64_t seed, const PrsOptions& options = {}) const;

 private:
  double lambda_;
  double beta_;
  double r_;
  int dim_;
  std::optional<PrsSampler> sampler_;
};

PrsRun area_interaction_sample(double lambda, double beta, double r, int dim, std::uint64_t seed,
                               const PrsOptions& options = {});

}  // namespace gibbs

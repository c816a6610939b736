#include "gibbs/prs_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gibbs/parallel.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

namespace {

// Least fixed point of: Res starts at `bad`; a vertex {c, k} outside Res joins
// once an endpoint c is in I(Res) and side_open(c, k) holds. Cells are
// processed in rounds, each round scanning the vertices incident to the cells
// that entered I(Res) in the previous round. Each (vertex, side) test result
// depends only on the fixed state, so testing a side once is enough.
template <typename SideOpen>
std::vector<VertexId> close_resampling_set(std::span<const VertexId> bad,
                                           const DependencyGraph& graph, SideOpen&& side_open) {
  std::vector<char> in_res(graph.vertex_count(), 0);
  std::vector<char> cell_in(graph.cell_count(), 0);
  std::vector<std::uint32_t> frontier;
  std::vector<std::uint32_t> next;
  std::vector<VertexId> members;

  auto add = [&](VertexId v) {
    in_res[v] = 1;
    members.push_back(v);
    const auto& e = graph.vertex(v);
    for (std::uint32_t c : {e.first, e.second}) {
      if (!cell_in[c]) {
        cell_in[c] = 1;
        next.push_back(c);
      }
    }
  };

  for (VertexId v : bad) {
    if (!in_res[v]) add(v);
  }
  while (!next.empty()) {
    frontier.swap(next);
    next.clear();
    for (std::uint32_t c : frontier) {
      for (VertexId v : graph.incident(c)) {
        if (in_res[v]) continue;
        if (side_open(c, graph.vertex(v).other(c))) add(v);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

PointConfig merge_cells(const std::vector<PointConfig>& cells) {
  std::size_t total = 0;
  for (const auto& c : cells) total += c.size();
  PointConfig out;
  out.reserve(total);
  for (const auto& c : cells) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<CellLaw> default_laws(const InteractionModel& model, const GridPartition& partition) {
  std::vector<CellLaw> laws;
  laws.reserve(partition.cell_count());
  for (const auto& cell : partition.cells()) laws.push_back(CellLaw::for_model(model, cell));
  return laws;
}

}  // namespace

bool is_bad(const SystemState& state, const InteractionModel& model, const DependencyGraph& graph,
            const BoxDomain& domain, VertexId v) {
  const auto& e = graph.vertex(v);
  const auto& a = state.cells[e.first];
  const auto& b = state.cells[e.second];
  if (a.empty() || b.empty()) return false;
  return state.edge_uniforms[v] > boltzmann_weight(cross_potential(model, a, b, domain));
}

std::vector<VertexId> bad_events(const SystemState& state, const InteractionModel& model,
                                 const DependencyGraph& graph, const BoxDomain& domain) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (is_bad(state, model, graph, domain, v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> resampling_set_general(const SystemState& state,
                                             std::span<const VertexId> bad,
                                             const DependencyGraph& graph,
                                             const GridPartition& partition) {
  const auto& domain = partition.domain();
  const double range = partition.cell_edge();
  return close_resampling_set(bad, graph, [&](std::uint32_t inside, std::uint32_t outside) {
    return config_cell_distance(state.cells[inside], partition.cell(outside), domain) < range;
  });
}

std::vector<VertexId> resampling_set_grid(const SystemState& state, std::span<const VertexId> bad,
                                          const DependencyGraph& graph) {
  return close_resampling_set(bad, graph, [&](std::uint32_t inside, std::uint32_t) {
    return !state.cells[inside].empty();
  });
}

std::vector<std::uint32_t> cells_of(std::span<const VertexId> vertices,
                                    const DependencyGraph& graph) {
  std::vector<std::uint32_t> out;
  out.reserve(2 * vertices.size());
  for (VertexId v : vertices) {
    out.push_back(graph.vertex(v).first);
    out.push_back(graph.vertex(v).second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrsSampler::PrsSampler(const InteractionModel& model, GridPartition partition)
    : PrsSampler(model, partition, default_laws(model, partition)) {}

PrsSampler::PrsSampler(const InteractionModel& model, GridPartition partition,
                       std::vector<CellLaw> laws)
    : model_(model),
      partition_(std::move(partition)),
      graph_(build_dependency_graph(partition_)),
      laws_(std::move(laws)) {
  const double edge = partition_.cell_edge();
  if (std::abs(model_.interaction_range() - edge) > 1e-12 * edge) {
    throw std::invalid_argument("model interaction range " +
                                std::to_string(model_.interaction_range()) +
                                " differs from the grid cell edge " + std::to_string(edge));
  }
  if (laws_.size() != partition_.cell_count()) {
    throw std::invalid_argument("need exactly one cell law per grid cell");
  }
}

PrsRun PrsSampler::run(std::uint64_t seed, const PrsOptions& options) const {
  if (options.iteration_cap == 0 || options.iteration_cap > kMaxStreamIteration + 1) {
    throw std::invalid_argument("iteration cap must lie in [1, 2^30]");
  }
  const auto& domain = partition_.domain();
  const std::size_t n_cells = partition_.cell_count();
  const std::size_t n_vertices = graph_.vertex_count();
  const unsigned workers = options.workers;

  SystemState state;
  state.cells.resize(n_cells);
  state.edge_uniforms.resize(n_vertices);
  RunTrace trace;

  auto draw_cell = [&](std::uint32_t t, std::size_t i) {
    auto stream = derive_stream({seed, StreamPurpose::cell, t, i});
    state.cells[i] = sample_cell_gibbs(laws_[i], domain, stream);
  };
  auto draw_uniform = [&](std::uint32_t t, VertexId v) {
    auto stream = derive_stream({seed, StreamPurpose::edge, t, v});
    state.edge_uniforms[v] = stream.uniform();
  };
  auto evaluate = [&](std::span<const VertexId> candidates) {
    std::vector<char> flags(candidates.size(), 0);
    parallel_for(candidates.size(), workers, [&](std::size_t k) {
      flags[k] = is_bad(state, model_, graph_, domain, candidates[k]) ? 1 : 0;
    });
    std::vector<VertexId> bad;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (flags[k]) bad.push_back(candidates[k]);
    }
    return bad;
  };

  parallel_for(n_cells, workers, [&](std::size_t i) { draw_cell(0, i); });
  parallel_for(n_vertices, workers, [&](std::size_t v) { draw_uniform(0, static_cast<VertexId>(v)); });
  std::vector<VertexId> all(n_vertices);
  for (VertexId v = 0; v < n_vertices; ++v) all[v] = v;
  std::vector<VertexId> bad = evaluate(all);
  std::size_t cells_sampled = n_cells;

  for (std::uint32_t t = 0;; ++t) {
    if (bad.empty()) {
      trace.iterations.push_back({t, 0, 0, cells_sampled});
      break;
    }
    const auto res = options.rule == ResamplingRule::grid
                         ? resampling_set_grid(state, bad, graph_)
                         : resampling_set_general(state, bad, graph_, partition_);
    trace.iterations.push_back({t, bad.size(), res.size(), cells_sampled});
    if (t + 1 >= options.iteration_cap) {
      throw IterationCapExceeded("partial rejection sampling did not terminate within " +
                                     std::to_string(options.iteration_cap) +
                                     " iterations; the intensity is likely too high",
                                 std::move(trace));
    }

    const std::uint32_t next = t + 1;
    const auto cells = cells_of(res, graph_);
    parallel_for(cells.size(), workers, [&](std::size_t k) { draw_cell(next, cells[k]); });
    if (options.resample_edge_uniforms) {
      parallel_for(res.size(), workers, [&](std::size_t k) { draw_uniform(next, res[k]); });
    }
    cells_sampled = cells.size();

    // Only vertices touching a redrawn cell can change status; all others
    // were good before (Bad is contained in Res) and still are.
    std::vector<VertexId> candidates;
    for (std::uint32_t c : cells) {
      const auto inc = graph_.incident(c);
      candidates.insert(candidates.end(), inc.begin(), inc.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    bad = evaluate(candidates);
  }

  PrsRun out;
  out.sample = merge_cells(state.cells);
  out.trace = std::move(trace);
  out.final_state = std::move(state);
  return out;
}

PrsRun prs_sample(const InteractionModel& model, const GridPartition& partition,
                  std::uint64_t seed, const PrsOptions& options) {
  return PrsSampler(model, partition).run(seed, options);
}

AreaInteractionSampler::AreaInteractionSampler(double lambda, double beta, double r, int dim)
    : lambda_(lambda), beta_(beta), r_(r), dim_(dim) {
  if (!(lambda >= 0.0) || !(beta >= 0.0) || !std::isfinite(lambda) || !std::isfinite(beta)) {
    throw std::invalid_argument("area-interaction needs finite lambda >= 0 and beta >= 0");
  }
  if (!(r > 0.0) || 2.0 * r > 1.0) {
    throw std::invalid_argument("area-interaction needs 0 < 2r <= 1");
  }
  if (lambda == 0.0) return;

  const BoxDomain enlarged{dim, 1.0 + 4.0 * r, -2.0 * r, false};
  GridPartition partition(enlarged, r);
  const auto model = InteractionModel::penetrable_spheres(r, lambda, beta);
  Box unit{dim, {}, {}};
  for (int k = 0; k < dim; ++k) unit.hi[k] = 1.0;

  std::vector<CellLaw> laws;
  laws.reserve(partition.cell_count());
  for (const auto& cell : partition.cells()) {
    CellLaw law{model, cell, {}};
    law.components.push_back({lambda, cell.bounds.intersect(unit), MarkLaw{1.0}});
    law.components.push_back({beta, cell.bounds, MarkLaw{0.0}});
    laws.push_back(std::move(law));
  }
  sampler_.emplace(model, std::move(partition), std::move(laws));
}

PrsRun AreaInteractionSampler::run(std::uint64_t seed, const PrsOptions& options) const {
  if (!sampler_) {
    PrsRun empty;
    empty.trace.iterations.push_back({0, 0, 0, 0});
    return empty;
  }
  PrsRun out = sampler_->run(seed, options);
  PointConfig type1;
  for (const auto& p : out.sample) {
    if (p.mark == 1) type1.push_back({p.x, 0});
  }
  out.sample = std::move(type1);
  return out;
}

PrsRun area_interaction_sample(double lambda, double beta, double r, int dim, std::uint64_t seed,
                               const PrsOptions& options) {
  return AreaInteractionSampler(lambda, beta, r, dim).run(seed, options);
}

}  // namespace gibbs

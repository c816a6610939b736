#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "gibbs/baseline.hpp"
#include "gibbs/prs_engine.hpp"
#include "gibbs/stats.hpp"
#include "oracles.hpp"

using namespace gibbs;

namespace {

double kappa_for(double kappa0, double r, int dim) {
  return kappa0 / (unit_ball_volume(dim) * std::pow(r, dim));
}

// Random product state: Poisson points in each cell at a random level of
// occupancy, uniform edge variables.
SystemState random_state(const GridPartition& g, const DependencyGraph& graph, std::mt19937_64& rng,
                         double mean_points) {
  SystemState s;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& c : g.cells()) {
    std::poisson_distribution<int> n(mean_points);
    PointConfig x(static_cast<std::size_t>(n(rng)));
    for (auto& p : x) {
      for (int k = 0; k < g.domain().dim; ++k) {
        p.x[k] = c.bounds.lo[k] + (c.bounds.hi[k] - c.bounds.lo[k]) * u(rng);
      }
    }
    s.cells.push_back(std::move(x));
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) s.edge_uniforms.push_back(u(rng));
  return s;
}

std::vector<VertexId> random_subset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (keep(rng)) out.push_back(v);
  }
  return out;
}

double oracle_point_cell_distance(const PointConfig& x, const Cell& c, const BoxDomain& d) {
  double best = INFINITY;
  for (const auto& p : x) {
    const Box b{d.dim, p.x, p.x};
    best = std::min(best, oracle::box_distance(b, c.bounds, d));
  }
  return best;
}

std::set<VertexId> as_set(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

struct GridCase {
  int dim;
  int k;
  bool periodic;
};

std::vector<GridCase> grid_cases() {
  return {{1, 2, false}, {1, 3, false}, {1, 4, false}, {2, 2, false}, {2, 3, false},
          {2, 4, false}, {1, 3, true},  {1, 4, true},  {2, 3, true},  {2, 4, true}};
}

}  // namespace

TEST(BadEvents, Examples) {
  const GridPartition g(BoxDomain::unit(1), 0.25);
  const auto graph = build_dependency_graph(g);
  const auto v = graph.find(0, 1);
  SystemState s{std::vector<PointConfig>(2), {0.3}};
  s.cells[0] = {{{0.4, 0, 0}, 0}};
  s.cells[1] = {{{0.6, 0, 0}, 0}};
  const auto strauss = InteractionModel::strauss(0.5, 0.25, 1.0);
  const auto domain = g.domain();
  EXPECT_FALSE(is_bad(s, strauss, graph, domain, v));
  s.edge_uniforms[v] = 0.7;
  EXPECT_TRUE(is_bad(s, strauss, graph, domain, v));
  const auto hard = InteractionModel::hard_core(0.25, 1.0);
  s.edge_uniforms[v] = 1e-12;
  EXPECT_TRUE(is_bad(s, hard, graph, domain, v));
  s.cells[1] = {{{0.95, 0, 0}, 0}};
  s.edge_uniforms[v] = 0.999999;
  EXPECT_FALSE(is_bad(s, hard, graph, domain, v));
  s.cells[1].clear();
  EXPECT_FALSE(is_bad(s, hard, graph, domain, v));
  EXPECT_TRUE(bad_events(s, hard, graph, domain).empty());
}

TEST(ResamplingSet, EmptyBadGivesEmpty) {
  const GridPartition g(BoxDomain::unit(2), 0.125);
  const auto graph = build_dependency_graph(g);
  std::mt19937_64 rng(1);
  const auto s = random_state(g, graph, rng, 1.0);
  EXPECT_TRUE(resampling_set_grid(s, {}, graph).empty());
  EXPECT_TRUE(resampling_set_general(s, {}, graph, g).empty());
}

TEST(ResamplingSet, IsolatedBadEdge) {
  const GridPartition g(BoxDomain::unit(2), 0.125);
  const auto graph = build_dependency_graph(g);
  SystemState s{std::vector<PointConfig>(g.cell_count()),
                std::vector<double>(graph.vertex_count(), 0.5)};
  const VertexId v = graph.find(9, 10);
  s.cells[9] = {{{0.3, 0.3, 0}, 0}};
  s.cells[10] = {{{0.26, 0.3, 0}, 0}};
  const std::vector<VertexId> bad{v};
  // Occupied endpoints open every boundary vertex under the grid rule.
  EXPECT_GT(resampling_set_grid(s, bad, graph).size(), 1u);
  s.cells[9].clear();
  s.cells[10].clear();
  EXPECT_EQ(resampling_set_grid(s, bad, graph), bad);
  EXPECT_EQ(resampling_set_general(s, bad, graph, g), bad);
}

TEST(ResamplingSet, FourCellLine) {
  const GridPartition g(BoxDomain::unit(1), 0.125);
  const auto graph = build_dependency_graph(g);
  ASSERT_EQ(graph.vertex_count(), 3u);
  SystemState s{std::vector<PointConfig>(4), std::vector<double>(3, 0.5)};
  s.cells[1] = {{{0.3, 0, 0}, 0}};
  s.cells[2] = {{{0.7, 0, 0}, 0}};
  const std::vector<VertexId> bad{graph.find(1, 2)};
  const std::vector<VertexId> all{graph.find(0, 1), graph.find(1, 2), graph.find(2, 3)};
  EXPECT_EQ(resampling_set_general(s, bad, graph, g), all);
  EXPECT_EQ(resampling_set_grid(s, bad, graph), all);
  s.cells[1].clear();
  const std::vector<VertexId> right{graph.find(1, 2), graph.find(2, 3)};
  EXPECT_EQ(resampling_set_general(s, bad, graph, g), right);
  EXPECT_EQ(resampling_set_grid(s, bad, graph), right);
  // Occupancy of the outside cell is irrelevant.
  s.cells[3] = {{{0.9, 0, 0}, 0}};
  EXPECT_EQ(resampling_set_general(s, bad, graph, g), right);
}

TEST(ResamplingSet, AllOccupiedGrowsToComponent) {
  const GridPartition g(BoxDomain::unit(2), 0.1);
  const auto graph = build_dependency_graph(g);
  std::mt19937_64 rng(2);
  auto s = random_state(g, graph, rng, 50.0);
  for (const auto& c : s.cells) ASSERT_FALSE(c.empty());
  const auto res = resampling_set_grid(s, std::vector<VertexId>{0}, graph);
  EXPECT_EQ(res.size(), graph.vertex_count());
}

TEST(ResamplingSet, FrontierSearchMatchesNaiveFixpoint) {
  std::mt19937_64 rng(3);
  for (const auto& gc : grid_cases()) {
    const GridPartition g(BoxDomain::unit(gc.dim, gc.periodic), 0.5 / gc.k);
    const auto graph = build_dependency_graph(g);
    const auto& domain = g.domain();
    for (int trial = 0; trial < 400; ++trial) {
      const auto s = random_state(g, graph, rng, trial % 4 * 0.4);
      const auto bad = random_subset(graph.vertex_count(), trial % 3 * 0.1 + 0.05, rng);
      const auto grid = oracle::naive_fixpoint(graph.vertices(), bad, [&](std::uint32_t i, std::uint32_t) {
        return !s.cells[i].empty();
      });
      const auto general = oracle::naive_fixpoint(graph.vertices(), bad, [&](std::uint32_t i, std::uint32_t k) {
        return oracle_point_cell_distance(s.cells[i], g.cell(k), domain) < g.cell_edge();
      });
      ASSERT_EQ(as_set(resampling_set_grid(s, bad, graph)), grid);
      ASSERT_EQ(as_set(resampling_set_general(s, bad, graph, g)), general);
    }
  }
}

TEST(ResamplingSet, DeterministicAndContainsBad) {
  std::mt19937_64 rng(4);
  const GridPartition g(BoxDomain::unit(2), 0.125);
  const auto graph = build_dependency_graph(g);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_state(g, graph, rng, 0.5);
    const auto bad = random_subset(graph.vertex_count(), 0.1, rng);
    const auto a = resampling_set_general(s, bad, graph, g);
    EXPECT_EQ(a, resampling_set_general(s, bad, graph, g));
    EXPECT_TRUE(std::includes(a.begin(), a.end(), bad.begin(), bad.end()));
    const auto b = resampling_set_grid(s, bad, graph);
    EXPECT_EQ(b, resampling_set_grid(s, bad, graph));
    EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST(ResamplingSet, GridRuleEqualsGeneralOnLines) {
  std::mt19937_64 rng(5);
  for (int k : {2, 3, 4, 7}) {
    const GridPartition g(BoxDomain::unit(1), 0.5 / k);
    const auto graph = build_dependency_graph(g);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto s = random_state(g, graph, rng, 0.7);
      const auto bad = random_subset(graph.vertex_count(), 0.3, rng);
      ASSERT_EQ(resampling_set_grid(s, bad, graph), resampling_set_general(s, bad, graph, g));
    }
  }
}

// In the plane a point in the far corner of a cell is more than 2r from the
// diagonally opposite neighbour, so an occupied cell is not always
// "non-disjoint" from that neighbour and the grid rule can take more.
TEST(ResamplingSet, GridRuleCanExceedGeneralDiagonally) {
  const GridPartition g(BoxDomain::unit(2), 0.25);
  const auto graph = build_dependency_graph(g);
  ASSERT_EQ(graph.vertex_count(), 6u);
  SystemState s{std::vector<PointConfig>(4), std::vector<double>(6, 0.5)};
  // Cells: 0 = [0,.5)^2, 1 = right, 2 = top, 3 = top-right.
  s.cells[0] = {{{0.05, 0.05, 0}, 0}};
  const std::vector<VertexId> bad{graph.find(0, 1)};
  const auto general = resampling_set_general(s, bad, graph, g);
  const auto grid = resampling_set_grid(s, bad, graph);
  EXPECT_EQ(as_set(general), (std::set<VertexId>{graph.find(0, 1), graph.find(0, 2)}));
  EXPECT_TRUE(as_set(grid).count(graph.find(0, 3)));
  EXPECT_NE(grid, general);
}

TEST(CellsOf, UnionOfEndpoints) {
  const GridPartition g(BoxDomain::unit(2), 0.25);
  const auto graph = build_dependency_graph(g);
  const std::vector<VertexId> w{graph.find(0, 1), graph.find(1, 3)};
  EXPECT_EQ(cells_of(w, graph), (std::vector<std::uint32_t>{0, 1, 3}));
  EXPECT_TRUE(cells_of({}, graph).empty());
}

TEST(PrsSample, ZeroIntensityIsEmptyInOneRound) {
  const GridPartition g(BoxDomain::unit(2), 1.0 / 16);
  const auto run = prs_sample(InteractionModel::hard_core(1.0 / 16, 0.0), g, 1);
  EXPECT_TRUE(run.sample.empty());
  EXPECT_EQ(run.trace.total_iterations(), 1u);
}

TEST(PrsSample, UnitGammaIsOneRoundPoisson) {
  const double r = 1.0 / 16;
  const GridPartition g(BoxDomain::unit(2), r);
  const double kappa = kappa_for(0.2, r, 2);
  const PrsSampler sampler(InteractionModel::strauss(1.0, r, kappa), g);
  double sum = 0.0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    const auto run = sampler.run(i);
    ASSERT_EQ(run.trace.total_iterations(), 1u);
    sum += run.sample.size();
  }
  EXPECT_NEAR(sum / n, kappa, 3.0 * std::sqrt(kappa / n));
}

TEST(PrsSample, HardCoreOutputsNeverViolate) {
  const double r = 1.0 / 16;
  const GridPartition g(BoxDomain::unit(2), r);
  const auto m = InteractionModel::hard_core(r, kappa_for(0.2, r, 2));
  const PrsSampler sampler(m, g);
  for (int i = 0; i < 10000; ++i) {
    const auto run = sampler.run(replicate_seed(7, i));
    ASSERT_EQ(oracle::close_pairs(run.sample, 2 * r, 2), 0u) << "seed index " << i;
  }
}

TEST(PrsSample, FinalStateAndTraceInvariants) {
  const double r = 1.0 / 16;
  const GridPartition g(BoxDomain::unit(2), r);
  const auto m = InteractionModel::strauss(0.5, r, kappa_for(0.25, r, 2));
  const PrsSampler sampler(m, g);
  for (int i = 0; i < 300; ++i) {
    const auto run = sampler.run(replicate_seed(8, i));
    EXPECT_TRUE(bad_events(run.final_state, m, sampler.graph(), g.domain()).empty());
    std::size_t total = 0;
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
      for (const auto& p : run.final_state.cells[c]) ASSERT_EQ(g.cell_of(p.x), c);
      total += run.final_state.cells[c].size();
    }
    EXPECT_EQ(total, run.sample.size());
    const auto& it = run.trace.iterations;
    ASSERT_FALSE(it.empty());
    EXPECT_EQ(it.front().cells_sampled, g.cell_count());
    EXPECT_EQ(it.back().bad, 0u);
    EXPECT_EQ(it.back().resampling_set, 0u);
    for (std::size_t t = 0; t < it.size(); ++t) {
      EXPECT_EQ(it[t].iteration, t);
      EXPECT_LE(it[t].bad, it[t].resampling_set);
      if (t > 0) {
        EXPECT_LE(it[t].cells_sampled, 2 * it[t - 1].resampling_set);
        EXPECT_GE(it[t].cells_sampled, 2u);
      }
      if (t + 1 < it.size()) EXPECT_GT(it[t].bad, 0u);
    }
  }
}

TEST(PrsSample, IndependentOfWorkerCount) {
  const double r = 1.0 / 32;
  const GridPartition g(BoxDomain::unit(2), r);
  const PrsSampler sampler(InteractionModel::strauss(0.5, r, kappa_for(0.25, r, 2)), g);
  for (int i = 0; i < 5; ++i) {
    const auto one = sampler.run(i, {.workers = 1});
    for (unsigned w : {2u, 3u, 8u}) {
      const auto many = sampler.run(i, {.workers = w});
      ASSERT_EQ(one.sample, many.sample);
      ASSERT_EQ(one.trace, many.trace);
    }
  }
  EXPECT_NE(sampler.run(1).sample, sampler.run(2).sample);
}

TEST(PrsSample, IterationCapCarriesTrace) {
  const double r = 0.125;
  const GridPartition g(BoxDomain::unit(2), r);
  const PrsSampler sampler(InteractionModel::hard_core(r, kappa_for(3.0, r, 2)), g);
  try {
    sampler.run(1, {.iteration_cap = 2});
    FAIL() << "expected the cap to trip";
  } catch (const IterationCapExceeded& e) {
    EXPECT_EQ(e.trace().total_iterations(), 2u);
  }
  EXPECT_THROW(sampler.run(1, {.iteration_cap = 0}), std::invalid_argument);
}

TEST(PrsSample, RangeMustMatchGrid) {
  const GridPartition g(BoxDomain::unit(2), 0.125);
  EXPECT_THROW(PrsSampler(InteractionModel::hard_core(0.1, 1.0), g), std::invalid_argument);
  EXPECT_NO_THROW(PrsSampler(InteractionModel::strauss_hard_core(0.1, 0.25, 0.5, 1.0), g));
}

// Small-scale distributional agreement with the whole-domain oracle on a
// range of geometries and both resampling rules.
struct DistCase {
  int dim;
  double two_r;
  bool periodic;
  ResamplingRule rule;
  int model;
};

class PrsVsOracle : public ::testing::TestWithParam<DistCase> {};

TEST_P(PrsVsOracle, CountAndPairHistogramsAgree) {
  const auto c = GetParam();
  const double r = c.two_r / 2;
  const BoxDomain domain = BoxDomain::unit(c.dim, c.periodic);
  const GridPartition g(domain, r);
  const double kappa = kappa_for(0.25, r, c.dim);
  const InteractionModel m = c.model == 0   ? InteractionModel::strauss(0.3, r, kappa)
                             : c.model == 1 ? InteractionModel::hard_core(r, kappa)
                                            : InteractionModel::penetrable_spheres(r, kappa, kappa);
  const PrsSampler sampler(m, g);
  CountHistogram pc, pp, oc, op;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const auto a = sampler.run(replicate_seed(11, i), {.rule = c.rule});
    pc.add(a.sample.size());
    pp.add(close_pair_count(a.sample, c.two_r * 1.5, domain));
    const auto b = naive_rejection_sample(m, domain, replicate_seed(12, i));
    oc.add(b.sample.size());
    op.add(close_pair_count(b.sample, c.two_r * 1.5, domain));
  }
  const auto counts = two_sample_chisq(pc, oc);
  const auto pairs = two_sample_chisq(pp, op);
  EXPECT_GT(counts.p_value, 1e-3) << pc.mean() << " vs " << oc.mean();
  EXPECT_GT(pairs.p_value, 1e-3) << pp.mean() << " vs " << op.mean();
}

INSTANTIATE_TEST_SUITE_P(
    Geometries, PrsVsOracle,
    ::testing::Values(DistCase{1, 0.25, false, ResamplingRule::grid, 0},
                      DistCase{1, 0.3, false, ResamplingRule::grid, 1},
                      DistCase{1, 0.25, true, ResamplingRule::grid, 1},
                      DistCase{2, 0.5, false, ResamplingRule::grid, 0},
                      DistCase{2, 0.5, false, ResamplingRule::general, 0},
                      DistCase{2, 0.4, false, ResamplingRule::general, 1},
                      DistCase{2, 1.0 / 3, true, ResamplingRule::grid, 0},
                      DistCase{2, 0.5, false, ResamplingRule::grid, 2},
                      DistCase{3, 0.5, false, ResamplingRule::grid, 1}));

TEST(AreaInteraction, ZeroLambdaIsEmpty) {
  const auto run = area_interaction_sample(0.0, 5.0, 0.125, 2, 1);
  EXPECT_TRUE(run.sample.empty());
  EXPECT_EQ(run.trace.total_iterations(), 1u);
}

TEST(AreaInteraction, ZeroBetaIsPoissonOnUnitSquare) {
  const AreaInteractionSampler sampler(30.0, 0.0, 0.125, 2);
  double sum = 0.0;
  const int n = 3000;
  for (int i = 0; i < n; ++i) {
    const auto run = sampler.run(i);
    ASSERT_EQ(run.trace.total_iterations(), 1u);
    for (const auto& p : run.sample) {
      ASSERT_TRUE(BoxDomain::unit(2).contains(p.x));
      ASSERT_EQ(p.mark, 0);
    }
    sum += run.sample.size();
  }
  EXPECT_NEAR(sum / n, 30.0, 3.0 * std::sqrt(30.0 / n));
}

TEST(AreaInteraction, RejectsBadParameters) {
  EXPECT_THROW(AreaInteractionSampler(-1.0, 1.0, 0.1, 2), std::invalid_argument);
  EXPECT_THROW(AreaInteractionSampler(1.0, 1.0, 0.6, 2), std::invalid_argument);
}

#include "gibbs/cli/validation.hpp"

#include <cmath>
#include <sstream>

#include "gibbs/baseline.hpp"
#include "gibbs/parallel.hpp"
#include "gibbs/rng.hpp"

namespace gibbs::cli {

namespace {

struct DrawSummary {
  std::uint64_t count = 0;
  std::uint64_t pairs = 0;
  bool forbidden = false;
  bool unresolved = false;
};

DrawStatistics aggregate(const std::vector<DrawSummary>& draws) {
  DrawStatistics out;
  for (const auto& d : draws) {
    out.counts.add(d.count);
    out.close_pairs.add(d.pairs);
    if (d.forbidden) ++out.forbidden;
    if (d.unresolved) ++out.unresolved;
  }
  return out;
}

DrawSummary summarise(const ModelTemplate& model, double r, const PointConfig& sample,
                      const BoxDomain& domain) {
  DrawSummary s;
  s.count = sample.size();
  s.pairs = close_pair_count(sample, 2.0 * r, domain);
  if (model.kind != ModelKind::area_interaction) {
    s.forbidden = potential(model.instantiate(r), sample, domain) == kInfiniteEnergy;
  }
  return s;
}

}  // namespace

DrawStatistics prs_statistics(const ModelTemplate& model, double r, std::uint64_t draws,
                              std::uint64_t seed, unsigned workers, const PrsOptions& options) {
  const ExperimentSampler sampler(model, r);
  const auto domain = BoxDomain::unit(model.dim);
  PrsOptions inner = options;
  inner.workers = 1;
  std::optional<PrsSampler> check;
  if (model.kind != ModelKind::area_interaction) check.emplace(model.instantiate(r), GridPartition(domain, r));
  std::vector<DrawSummary> summaries(draws);
  parallel_for(draws, workers, [&](std::size_t i) {
    const auto run = sampler.run(replicate_seed(seed, i), inner);
    auto s = summarise(model, r, run.sample, domain);
    if (check) {
      s.unresolved = !bad_events(run.final_state, check->model(), check->graph(), domain).empty();
    }
    summaries[i] = s;
  });
  return aggregate(summaries);
}

DrawStatistics oracle_statistics(const ModelTemplate& model, double r, std::uint64_t draws,
                                 std::uint64_t seed, unsigned workers, int resolution) {
  const auto domain = BoxDomain::unit(model.dim);
  std::vector<DrawSummary> summaries(draws);
  if (model.kind == ModelKind::area_interaction) {
    const double lambda = model.area_lambda(r);
    const double beta = model.area_beta(r);
    parallel_for(draws, workers, [&](std::size_t i) {
      const auto draw =
          area_interaction_naive(lambda, beta, r, model.dim, resolution, replicate_seed(seed, i));
      summaries[i] = summarise(model, r, draw.sample, domain);
    });
  } else {
    const auto m = model.instantiate(r);
    parallel_for(draws, workers, [&](std::size_t i) {
      const auto draw = naive_rejection_sample(m, domain, replicate_seed(seed, i));
      summaries[i] = summarise(model, r, draw.sample, domain);
    });
  }
  return aggregate(summaries);
}

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

ValidationCheck histogram_check(const std::string& name, const CountHistogram& a,
                                const CountHistogram& b) {
  const auto result = two_sample_chisq(a, b);
  ValidationCheck check;
  check.name = name;
  std::ostringstream detail;
  if (!result.conclusive) {
    check.passed = true;
    detail << "inconclusive: a single bin after merging";
  } else {
    check.passed = result.p_value > kSignificance;
    check.p_value = result.p_value;
    detail << "chi2=" << result.statistic << " dof=" << result.degrees_of_freedom
           << " means " << a.mean() << " vs " << b.mean();
  }
  check.detail = detail.str();
  return check;
}

ValidationReport run_validation(const ModelTemplate& model, double r, std::uint64_t draws,
                                std::uint64_t seed, unsigned workers, const PrsOptions& options) {
  const auto prs = prs_statistics(model, r, draws, replicate_seed(seed, 0), workers, options);
  const auto oracle = oracle_statistics(model, r, draws, replicate_seed(seed, 1), workers);

  ValidationReport report;
  report.checks.push_back(histogram_check("count-histogram", prs.counts, oracle.counts));
  report.checks.push_back(
      histogram_check("close-pair-histogram", prs.close_pairs, oracle.close_pairs));
  if (model.kind != ModelKind::area_interaction) {
    ValidationCheck constraints{"hard-constraints", prs.forbidden == 0, std::nullopt, ""};
    constraints.detail = std::to_string(prs.forbidden) + " of " + std::to_string(draws) +
                         " samples with infinite potential";
    report.checks.push_back(constraints);
    ValidationCheck resolved{"no-bad-events", prs.unresolved == 0, std::nullopt, ""};
    resolved.detail = std::to_string(prs.unresolved) + " of " + std::to_string(draws) +
                      " runs ended with a bad event";
    report.checks.push_back(resolved);
  }
  return report;
}

}  // namespace gibbs::cli

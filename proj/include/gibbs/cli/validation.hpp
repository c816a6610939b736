#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gibbs/baseline.hpp"
#include "gibbs/model_template.hpp"
#include "gibbs/prs_engine.hpp"
#include "gibbs/stats.hpp"

namespace gibbs::cli {

/// Per-draw summaries of a batch of samples.
struct DrawStatistics {
  CountHistogram counts;
  CountHistogram close_pairs;  // pairs closer than 2r
  std::uint64_t forbidden = 0;  // samples with infinite potential
  std::uint64_t unresolved = 0;  // PRS runs ending with a bad event (never expected)
};

/// `draws` independent PRS samples of the template on [0,1]^d with range 2r.
DrawStatistics prs_statistics(const ModelTemplate& model, double r, std::uint64_t draws,
                              std::uint64_t seed, unsigned workers, const PrsOptions& options = {});

/// The same statistics from the whole-domain rejection oracle.
DrawStatistics oracle_statistics(const ModelTemplate& model, double r, std::uint64_t draws,
                                 std::uint64_t seed, unsigned workers,
                                 int resolution = kDefaultQuadratureResolution);

inline constexpr double kSignificance = 0.001;

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::optional<double> p_value;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

/// Chi-square homogeneity check at kSignificance. An inconclusive test
/// (everything in one merged bin) carries no evidence of a difference and
/// passes.
ValidationCheck histogram_check(const std::string& name, const CountHistogram& a,
                                const CountHistogram& b);

/// PRS against the rejection oracle: count and close-pair histograms, hard
/// constraints, and empty final bad-event sets.
ValidationReport run_validation(const ModelTemplate& model, double r, std::uint64_t draws,
                                std::uint64_t seed, unsigned workers,
                                const PrsOptions& options = {});

}  // namespace gibbs::cli

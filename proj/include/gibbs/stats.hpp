#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gibbs/geometry.hpp"
#include "gibbs/model_template.hpp"
#include "gibbs/point_config.hpp"

namespace gibbs {

/// Unordered pairs closer than `threshold`. For marked configurations only
/// pairs of different marks count.
std::size_t close_pair_count(const PointConfig& config, double threshold, const BoxDomain& domain);
/// Same count using a cell list with cells of edge >= threshold.
std::size_t close_pair_count_cell_list(const PointConfig& config, double threshold,
                                       const BoxDomain& domain);

class CountHistogram {
 public:
  void add(std::uint64_t value, std::uint64_t times = 1);
  std::uint64_t total() const { return total_; }
  std::uint64_t count(std::uint64_t value) const;
  const std::map<std::uint64_t, std::uint64_t>& bins() const { return bins_; }
  double mean() const;

 private:
  std::map<std::uint64_t, std::uint64_t> bins_;
  std::uint64_t total_ = 0;
};

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 1.0;
  int degrees_of_freedom = 0;
  // False when fewer than two bins remain after merging.
  bool conclusive = false;
};

inline constexpr std::uint64_t kMinChiSquareSample = 1000;

/// Two-sample chi-square homogeneity test on count histograms. Adjacent bins
/// are merged left to right until both expected counts of each group are at
/// least 5; a short tail group is folded into its predecessor.
ChiSquareResult two_sample_chisq(const CountHistogram& a, const CountHistogram& b);

struct SweepRow {
  int cells_per_axis = 0;
  double kappa0 = 0.0;
  std::string model;
  double gamma = 0.0;  // NaN when the family has no gamma
  double mean_iterations = 0.0;
  double standard_error = 0.0;
  std::uint64_t replications = 0;

  // gamma compares equal when absent from both rows.
  friend bool operator==(const SweepRow& a, const SweepRow& b) {
    const bool same_gamma = a.gamma == b.gamma || (std::isnan(a.gamma) && std::isnan(b.gamma));
    return same_gamma && a.cells_per_axis == b.cells_per_axis && a.kappa0 == b.kappa0 &&
           a.model == b.model && a.mean_iterations == b.mean_iterations &&
           a.standard_error == b.standard_error && a.replications == b.replications;
  }
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

class SweepError : public std::runtime_error {
 public:
  SweepError(const std::string& what, SweepResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const SweepResult& partial() const { return partial_; }

 private:
  SweepResult partial_;
};

/// For each K: 2r = 1/K, `replications` independent runs, mean and standard
/// error of the number of sampling rounds. Replications run on `workers`
/// threads; results do not depend on the worker count.
SweepResult mean_iterations_sweep(const ModelTemplate& model, std::span<const int> cells_per_axis,
                                  std::uint64_t replications, std::uint64_t seed,
                                  unsigned workers = 1,
                                  std::uint32_t iteration_cap = PrsOptions{}.iteration_cap);

inline constexpr const char* kSweepCsvHeader = "K,kappa0,model,gamma,mean_iters,stderr,reps";

void write_sweep_csv(std::ostream& out, const SweepResult& result, bool header = true);
SweepResult read_sweep_csv(std::istream& in);

}  // namespace gibbs

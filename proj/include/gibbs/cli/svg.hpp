#pragma once

#include <iosfwd>

#include "gibbs/cli/csv.hpp"
#include "gibbs/stats.hpp"

namespace gibbs::cli {

/// Scatter of the first two coordinates on [0,1]^2 (1-d samples on a line),
/// with a circle of radius r around each point. Type-2 points are shaded.
void write_sample_svg(std::ostream& out, const SampleTable& table, double r);

/// Mean iterations against K on a log axis, one curve per (model, kappa0,
/// gamma) series, with standard-error bars.
void write_sweep_svg(std::ostream& out, const SweepResult& result);

}  // namespace gibbs::cli

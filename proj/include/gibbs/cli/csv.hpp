#pragma once

#include <iosfwd>

#include "gibbs/point_config.hpp"

namespace gibbs::cli {

struct SampleTable {
  int dim = 2;
  PointConfig points;

  friend bool operator==(const SampleTable&, const SampleTable&) = default;
};

/// Header `x1,...,xd,mark`; mark 0 for unmarked points, 1 or 2 for PSM types.
/// Coordinates are written with enough digits to round-trip exactly.
void write_sample_csv(std::ostream& out, const SampleTable& table);
SampleTable read_sample_csv(std::istream& in);

}  // namespace gibbs::cli

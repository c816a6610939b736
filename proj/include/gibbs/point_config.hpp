#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace gibbs {

inline constexpr int kMaxDim = 3;

using Coords = std::array<double, kMaxDim>;

// 0 = unmarked; 1 and 2 are the two PSM types.
using Mark = std::uint8_t;

struct MarkedPoint {
  Coords x{};
  Mark mark = 0;

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

using PointConfig = std::vector<MarkedPoint>;

}  // namespace gibbs

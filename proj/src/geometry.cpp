#include "gibbs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gibbs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack when deciding how many cells of edge 2r fit along an axis,
// so that 2r = 1/K yields exactly K cells despite rounding in 1/(1/K).
constexpr double kCountSlack = 1e-9;

double interval_gap(double x, double lo, double hi) {
  return std::max({0.0, lo - x, x - hi});
}

double interval_interval_gap(double a_lo, double a_hi, double b_lo, double b_hi) {
  return std::max({0.0, b_lo - a_hi, a_lo - b_hi});
}

}  // namespace

BoxDomain BoxDomain::unit(int dim, bool periodic) {
  return BoxDomain{dim, 1.0, 0.0, periodic};
}

double BoxDomain::volume() const {
  return std::pow(side, dim);
}

bool BoxDomain::contains(const Coords& x) const {
  for (int k = 0; k < dim; ++k) {
    if (x[k] < lower || x[k] > lower + side) return false;
  }
  return true;
}

double BoxDomain::axis_delta(double a, double b) const {
  double d = b - a;
  if (periodic) {
    d -= side * std::round(d / side);
  }
  return d;
}

void BoxDomain::validate() const {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                                std::to_string(dim));
  }
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("domain side must be positive and finite");
  }
}

double Box::volume() const {
  double v = 1.0;
  for (int k = 0; k < dim; ++k) v *= std::max(0.0, hi[k] - lo[k]);
  return v;
}

bool Box::empty() const {
  for (int k = 0; k < dim; ++k) {
    if (!(hi[k] > lo[k])) return true;
  }
  return false;
}

bool Box::contains(const Coords& x) const {
  for (int k = 0; k < dim; ++k) {
    if (x[k] < lo[k] || x[k] > hi[k]) return false;
  }
  return true;
}

Box Box::intersect(const Box& other) const {
  Box out{dim, {}, {}};
  for (int k = 0; k < dim; ++k) {
    out.lo[k] = std::max(lo[k], other.lo[k]);
    out.hi[k] = std::min(hi[k], other.hi[k]);
  }
  return out;
}

double squared_distance(const Coords& a, const Coords& b, const BoxDomain& domain) {
  double sum = 0.0;
  for (int k = 0; k < domain.dim; ++k) {
    const double d = domain.axis_delta(a[k], b[k]);
    sum += d * d;
  }
  return sum;
}

double distance(const Coords& a, const Coords& b, const BoxDomain& domain) {
  return std::sqrt(squared_distance(a, b, domain));
}

double point_box_distance(const Coords& x, const Box& box, const BoxDomain& domain) {
  double sum = 0.0;
  for (int k = 0; k < domain.dim; ++k) {
    double gap = interval_gap(x[k], box.lo[k], box.hi[k]);
    if (domain.periodic) {
      gap = std::min({gap, interval_gap(x[k] + domain.side, box.lo[k], box.hi[k]),
                      interval_gap(x[k] - domain.side, box.lo[k], box.hi[k])});
    }
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

double point_cell_distance(const Coords& x, const Cell& cell, const BoxDomain& domain) {
  return point_box_distance(x, cell.bounds, domain);
}

double box_box_distance(const Box& a, const Box& b, const BoxDomain& domain) {
  double sum = 0.0;
  for (int k = 0; k < domain.dim; ++k) {
    double gap = interval_interval_gap(a.lo[k], a.hi[k], b.lo[k], b.hi[k]);
    if (domain.periodic) {
      const double s = domain.side;
      gap = std::min({gap, interval_interval_gap(a.lo[k], a.hi[k], b.lo[k] + s, b.hi[k] + s),
                      interval_interval_gap(a.lo[k], a.hi[k], b.lo[k] - s, b.hi[k] - s)});
    }
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

double config_cell_distance(const PointConfig& config, const Cell& cell, const BoxDomain& domain) {
  double best = kInf;
  for (const auto& p : config) {
    best = std::min(best, point_cell_distance(p.x, cell, domain));
    if (best == 0.0) break;
  }
  return best;
}

GridPartition::GridPartition(BoxDomain domain, double half_range)
    : domain_(domain), half_range_(half_range), per_axis_(0) {
  domain_.validate();
  const double edge = 2.0 * half_range_;
  if (!(half_range_ > 0.0) || !std::isfinite(half_range_)) {
    throw std::invalid_argument("interaction half-range r must be positive");
  }
  if (edge > domain_.side * (1.0 + kCountSlack)) {
    throw std::invalid_argument("interaction range 2r exceeds the domain side");
  }
  const double ratio = domain_.side / edge;
  per_axis_ = std::max(1, static_cast<int>(std::ceil(ratio - kCountSlack * ratio)));
  if (domain_.periodic) {
    if (std::abs(per_axis_ * edge - domain_.side) > kCountSlack * domain_.side) {
      throw std::invalid_argument("periodic domains need 2r to divide the side");
    }
    if (per_axis_ < 3) {
      throw std::invalid_argument("periodic domains need at least 3 cells per axis");
    }
  }

  std::size_t total = 1;
  for (int k = 0; k < domain_.dim; ++k) total *= static_cast<std::size_t>(per_axis_);
  cells_.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    const auto coords = grid_coords(i);
    Cell cell{i, Box{domain_.dim, {}, {}}};
    for (int k = 0; k < domain_.dim; ++k) {
      cell.bounds.lo[k] = axis_lo(coords[k]);
      cell.bounds.hi[k] = axis_hi(coords[k]);
    }
    cells_.push_back(cell);
  }
}

double GridPartition::axis_lo(int c) const {
  return domain_.lower + c * cell_edge();
}

double GridPartition::axis_hi(int c) const {
  return c == per_axis_ - 1 ? domain_.lower + domain_.side : domain_.lower + (c + 1) * cell_edge();
}

std::array<int, kMaxDim> GridPartition::grid_coords(std::size_t index) const {
  std::array<int, kMaxDim> coords{};
  for (int k = 0; k < domain_.dim; ++k) {
    coords[k] = static_cast<int>(index % static_cast<std::size_t>(per_axis_));
    index /= static_cast<std::size_t>(per_axis_);
  }
  return coords;
}

std::size_t GridPartition::index_of(const std::array<int, kMaxDim>& coords) const {
  std::size_t index = 0;
  for (int k = domain_.dim - 1; k >= 0; --k) {
    index = index * static_cast<std::size_t>(per_axis_) + static_cast<std::size_t>(coords[k]);
  }
  return index;
}

std::size_t GridPartition::cell_of(const Coords& x) const {
  std::array<int, kMaxDim> coords{};
  for (int k = 0; k < domain_.dim; ++k) {
    int c = static_cast<int>(std::floor((x[k] - domain_.lower) / cell_edge()));
    c = std::clamp(c, 0, per_axis_ - 1);
    // Settle floating-point disagreement between the division and the stored bounds.
    if (c > 0 && x[k] < axis_lo(c)) --c;
    if (c < per_axis_ - 1 && x[k] >= axis_hi(c)) ++c;
    coords[k] = c;
  }
  return index_of(coords);
}

GridPartition build_grid(const BoxDomain& domain, double half_range) {
  return GridPartition(domain, half_range);
}

DependencyGraph::DependencyGraph(std::vector<CellPair> vertices, std::size_t cell_count)
    : vertices_(std::move(vertices)), incident_(cell_count) {
  std::sort(vertices_.begin(), vertices_.end());
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const auto& e = vertices_[v];
    if (e.first >= e.second || e.second >= cell_count) {
      throw std::invalid_argument("dependency graph vertices must be ordered cell pairs");
    }
    incident_[e.first].push_back(v);
    incident_[e.second].push_back(v);
  }
  for (const auto& e : vertices_) {
    max_degree_ = std::max(max_degree_, incident_[e.first].size() + incident_[e.second].size() - 2);
  }
}

std::vector<VertexId> DependencyGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const auto& e = vertices_[v];
  for (std::uint32_t c : {e.first, e.second}) {
    for (VertexId u : incident_[c]) {
      if (u != v) out.push_back(u);
    }
  }
  return out;
}

VertexId DependencyGraph::find(std::uint32_t i, std::uint32_t j) const {
  const CellPair key{std::min(i, j), std::max(i, j)};
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key);
  if (it == vertices_.end() || *it != key) return static_cast<VertexId>(vertices_.size());
  return static_cast<VertexId>(it - vertices_.begin());
}

DependencyGraph build_dependency_graph(const GridPartition& partition) {
  const auto& domain = partition.domain();
  const int dim = domain.dim;
  const int per_axis = partition.cells_per_axis();
  const double range = partition.cell_edge();

  // Only cells at grid offset at most 1 can lie within 2r of each other: two
  // steps away along an axis there is a full interior cell of edge 2r between
  // them, so the gap equals 2r exactly (rounding of the stored bounds may
  // make it look a hair shorter, which is a tie and not an interaction).
  int offsets = 1;
  for (int k = 0; k < dim; ++k) offsets *= 3;

  std::vector<CellPair> vertices;
  for (std::size_t i = 0; i < partition.cell_count(); ++i) {
    const auto base = partition.grid_coords(i);
    for (int o = 0; o < offsets; ++o) {
      std::array<int, kMaxDim> nb = base;
      int code = o;
      bool valid = true;
      for (int k = 0; k < dim; ++k) {
        nb[k] += code % 3 - 1;
        code /= 3;
        if (nb[k] < 0 || nb[k] >= per_axis) {
          if (!domain.periodic) {
            valid = false;
            break;
          }
          nb[k] = (nb[k] + per_axis) % per_axis;
        }
      }
      if (!valid) continue;
      const std::size_t j = partition.index_of(nb);
      if (j <= i) continue;
      if (box_box_distance(partition.cell(i).bounds, partition.cell(j).bounds, domain) < range) {
        vertices.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return DependencyGraph(std::move(vertices), partition.cell_count());
}

}  // namespace gibbs

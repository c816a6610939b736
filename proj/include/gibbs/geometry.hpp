#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gibbs/point_config.hpp"

namespace gibbs {

// Axis-aligned cube [lower, lower + side]^dim, optionally wrapped on a torus.
struct BoxDomain {
  int dim = 2;
  double side = 1.0;
  double lower = 0.0;
  bool periodic = false;

  static BoxDomain unit(int dim, bool periodic = false);

  double volume() const;
  bool contains(const Coords& x) const;
  // Signed separation b - a along one axis, using the minimum image when periodic.
  double axis_delta(double a, double b) const;
  void validate() const;
};

struct Box {
  int dim = 2;
  Coords lo{};
  Coords hi{};

  double volume() const;
  bool empty() const;
  bool contains(const Coords& x) const;
  Box intersect(const Box& other) const;
};

struct Cell {
  std::size_t index = 0;
  Box bounds;
};

double squared_distance(const Coords& a, const Coords& b, const BoxDomain& domain);
double distance(const Coords& a, const Coords& b, const BoxDomain& domain);

/// Distance from a point to an axis-aligned box (0 when the point is inside).
double point_box_distance(const Coords& x, const Box& box, const BoxDomain& domain);
double point_cell_distance(const Coords& x, const Cell& cell, const BoxDomain& domain);
double box_box_distance(const Box& a, const Box& b, const BoxDomain& domain);

/// Cubic grid with cells of edge 2r; the last cell along each axis may be
/// shorter when 2r does not divide the side. Cell membership is half-open
/// [lo, hi) except for the last cell per axis, which is closed.
class GridPartition {
 public:
  GridPartition(BoxDomain domain, double half_range);

  const BoxDomain& domain() const { return domain_; }
  double half_range() const { return half_range_; }
  double cell_edge() const { return 2.0 * half_range_; }
  int cells_per_axis() const { return per_axis_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t index) const { return cells_[index]; }

  std::array<int, kMaxDim> grid_coords(std::size_t index) const;
  std::size_t index_of(const std::array<int, kMaxDim>& coords) const;
  std::size_t cell_of(const Coords& x) const;

 private:
  double axis_lo(int c) const;
  double axis_hi(int c) const;

  BoxDomain domain_;
  double half_range_;
  int per_axis_;
  std::vector<Cell> cells_;
};

GridPartition build_grid(const BoxDomain& domain, double half_range);

using VertexId = std::uint32_t;

struct CellPair {
  std::uint32_t first;
  std::uint32_t second;

  std::uint32_t other(std::uint32_t cell) const { return cell == first ? second : first; }
  friend bool operator==(const CellPair&, const CellPair&) = default;
  friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

/// Vertices are the unordered cell pairs within interaction range; two
/// vertices are adjacent when they share a cell.
class DependencyGraph {
 public:
  DependencyGraph(std::vector<CellPair> vertices, std::size_t cell_count);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t cell_count() const { return incident_.size(); }
  const std::vector<CellPair>& vertices() const { return vertices_; }
  const CellPair& vertex(VertexId v) const { return vertices_[v]; }
  std::span<const VertexId> incident(std::size_t cell) const { return incident_[cell]; }
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t max_degree() const { return max_degree_; }
  // Vertex id of {i, j}, or vertex_count() when the pair is not a vertex.
  VertexId find(std::uint32_t i, std::uint32_t j) const;

 private:
  std::vector<CellPair> vertices_;
  std::vector<std::vector<VertexId>> incident_;
  std::size_t max_degree_ = 0;
};

DependencyGraph build_dependency_graph(const GridPartition& partition);

/// Minimum point-to-cell distance over a configuration; +inf when empty.
double config_cell_distance(const PointConfig& config, const Cell& cell, const BoxDomain& domain);

}  // namespace gibbs

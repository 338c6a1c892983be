#pragma once

#include <span>
#include <vector>

#include "grid.hpp"
#include "ordering.hpp"

namespace condex {

/// One-dimensional nodal base functions on a strictly increasing node vector.
/// Each function peaks at 1 on its own node, vanishes at the neighbouring
/// nodes and outside them, and the two functions covering a cell sum to 1.
///
/// Two shapes are supported:
///   hat            - piecewise linear (triangular)
///   raised_cosine  - quarter-wave sin^2 / cos^2 pieces, one quarter period
///                    per adjacent cell (the ground-state bump shape)
class NodeBasis {
 public:
  enum class Shape { hat, raised_cosine };

  NodeBasis(Shape shape, std::vector<double> nodes);

  Shape shape() const { return shape_; }
  int count() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  double lo() const { return nodes_.front(); }
  double hi() const { return nodes_.back(); }

  /// Value of base function i at t; throws if i or t is out of range.
  double eval(int i, double t) const;

  /// Cell index c with nodes[c] <= t <= nodes[c+1] (clamped at the ends).
  int cell_of(double t) const;

  /// Value of base function i restricted to cell c; zero when the cell is
  /// outside the support of i. No range checks: t must lie in cell c.
  double eval_in_cell(int i, int cell, double t) const;

 private:
  Shape shape_;
  std::vector<double> nodes_;
};

/// Y-axis base family: functions live on the screened (distinct) node values
/// and every original node index is routed to its class representative.
struct AxisBasisY {
  NodeBasis basis;             // over strict_values
  std::vector<int> index_map;  // original index -> strict node position

  double eval_original(int original_index, double y) const;
};

NodeBasis triangular_basis_x(const EquidistantGrid& grid);
AxisBasisY triangular_basis_y(const SortedOrder& order);

/// Raised-trigonometric X family; the grid must have an even cell count
/// m = 2n, with nodes at the shared zeros/extrema of sin(n pi u), cos(n pi u)
/// for u the unit-interval coordinate of x.
NodeBasis trig_basis_x(const EquidistantGrid& grid);
AxisBasisY trig_basis_y(const SortedOrder& order);

}  // namespace condex

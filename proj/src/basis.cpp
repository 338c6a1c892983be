#include "basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace condex {

NodeBasis::NodeBasis(Shape shape, std::vector<double> nodes) : shape_(shape), nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) {
    throw std::invalid_argument("NodeBasis needs at least 2 nodes");
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1] < nodes_[i])) {
      throw std::invalid_argument("NodeBasis nodes must be strictly increasing");
    }
  }
}

int NodeBasis::cell_of(double t) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
  const int cell = static_cast<int>(it - nodes_.begin()) - 1;
  return std::clamp(cell, 0, count() - 2);
}

double NodeBasis::eval_in_cell(int i, int cell, double t) const {
  if (t == nodes_[static_cast<std::size_t>(i)]) {
    return 1.0;
  }
  if (cell == i - 1) {
    // rising piece on [nodes[i-1], nodes[i]]
    const double gap = nodes_[static_cast<std::size_t>(i)] - nodes_[static_cast<std::size_t>(i) - 1];
    const double r = (t - nodes_[static_cast<std::size_t>(i) - 1]) / gap;
    if (shape_ == Shape::hat) {
      return r;
    }
    const double s = std::sin(std::numbers::pi / 2 * r);
    return s * s;
  }
  if (cell == i) {
    // falling piece on [nodes[i], nodes[i+1]]
    const double gap = nodes_[static_cast<std::size_t>(i) + 1] - nodes_[static_cast<std::size_t>(i)];
    const double r = (t - nodes_[static_cast<std::size_t>(i)]) / gap;
    if (shape_ == Shape::hat) {
      return 1.0 - r;
    }
    const double c = std::cos(std::numbers::pi / 2 * r);
    return c * c;
  }
  return 0.0;
}

double NodeBasis::eval(int i, double t) const {
  if (i < 0 || i >= count()) {
    throw std::out_of_range("NodeBasis: index out of range");
  }
  if (t < lo() || t > hi()) {
    throw std::domain_error("NodeBasis: point outside the node span");
  }
  return eval_in_cell(i, cell_of(t), t);
}

double AxisBasisY::eval_original(int original_index, double y) const {
  if (original_index < 0 || original_index >= static_cast<int>(index_map.size())) {
    throw std::out_of_range("AxisBasisY: index out of range");
  }
  return basis.eval(index_map[static_cast<std::size_t>(original_index)], y);
}

NodeBasis triangular_basis_x(const EquidistantGrid& grid) {
  return NodeBasis(NodeBasis::Shape::hat, grid.nodes);
}

AxisBasisY triangular_basis_y(const SortedOrder& order) {
  return AxisBasisY{NodeBasis(NodeBasis::Shape::hat, order.strict_values), order.class_of};
}

NodeBasis trig_basis_x(const EquidistantGrid& grid) {
  if (grid.cells % 2 != 0) {
    throw std::invalid_argument("trig basis needs an even cell count (m = 2n)");
  }
  return NodeBasis(NodeBasis::Shape::raised_cosine, grid.nodes);
}

AxisBasisY trig_basis_y(const SortedOrder& order) {
  return AxisBasisY{NodeBasis(NodeBasis::Shape::raised_cosine, order.strict_values), order.class_of};
}

}  // namespace condex

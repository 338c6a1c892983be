#include "kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace condex {

namespace {

NodeBasis make_basis_x(Family family, const EquidistantGrid& grid) {
  return family == Family::triangular ? triangular_basis_x(grid) : trig_basis_x(grid);
}

AxisBasisY make_basis_y(Family family, const SortedOrder& order) {
  return family == Family::triangular ? triangular_basis_y(order) : trig_basis_y(order);
}

}  // namespace

MaxProductKernel::MaxProductKernel(Family family, NodeValues values)
    : family_(family),
      values_(std::move(values)),
      order_(sort_and_screen(values_.y)),
      basis_x_(make_basis_x(family, values_.grid)),
      basis_y_(make_basis_y(family, order_)) {
  if (order_.strict_values.size() < 2) {
    throw std::invalid_argument("kernel needs a non-degenerate value range (constant functions take the constant path)");
  }
}

MaxProductKernel::ActiveSet MaxProductKernel::active_at(double x) const {
  const int cell = basis_x_.cell_of(x);
  ActiveSet active;
  for (int i = cell; i <= cell + 1; ++i) {
    const double a = basis_x_.eval_in_cell(i, cell, x);
    if (a <= 0.0) {
      continue;
    }
    const int strict = basis_y_.index_map[static_cast<std::size_t>(i)];
    if (active.count == 1 && active.strict[0] == strict) {
      // both covering nodes share one base function; max is idempotent
      active.coeff[0] = std::max(active.coeff[0], a);
      continue;
    }
    active.strict[active.count] = strict;
    active.coeff[active.count] = a;
    ++active.count;
  }
  return active;
}

double MaxProductKernel::eval(double x, double y) const {
  if (x < grid().interval.lo || x > grid().interval.hi || y < y_min() || y > y_max()) {
    throw std::domain_error("kernel evaluated outside X x Y");
  }
  const ActiveSet active = active_at(x);
  const int cell_y = basis_y_.basis.cell_of(y);
  double best = 0.0;
  for (int k = 0; k < active.count; ++k) {
    best = std::max(best, active.coeff[k] * basis_y_.basis.eval_in_cell(active.strict[k], cell_y, y));
  }
  return best;
}

double MaxProductKernel::eval_reference(double x, double y) const {
  if (x < grid().interval.lo || x > grid().interval.hi || y < y_min() || y > y_max()) {
    throw std::domain_error("kernel evaluated outside X x Y");
  }
  double best = 0.0;
  for (int i = 0; i < basis_x_.count(); ++i) {
    best = std::max(best, basis_x_.eval(i, x) * basis_y_.eval_original(i, y));
  }
  return best;
}

MaxProductKernel::SliceIntegrals MaxProductKernel::y_slice_integrals(double x, const QuadratureSpec& quad) const {
  validate(quad);
  if (x < grid().interval.lo || x > grid().interval.hi) {
    throw std::domain_error("slice point outside X");
  }
  const ActiveSet active = active_at(x);
  const std::span<const double> breaks = order_.strict_values;
  const NodeBasis& by = basis_y_.basis;

  SliceIntegrals out;
  const auto accumulate = [&](int cell, double y0, double y1) {
    // Simpson over one max-smooth segment of a cell
    const double h = (y1 - y0) / quad.panels_per_cell;
    double s0 = 0.0;
    double s1 = 0.0;
    for (int k = 0; k <= quad.panels_per_cell; ++k) {
      const double y = (k == quad.panels_per_cell) ? y1 : y0 + k * h;
      double g = 0.0;
      for (int a = 0; a < active.count; ++a) {
        g = std::max(g, active.coeff[a] * by.eval_in_cell(active.strict[a], cell, y));
      }
      const double w = (k == 0 || k == quad.panels_per_cell) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
      s0 += w * g;
      s1 += w * y * g;
    }
    out.i0 += s0 * h / 3.0;
    out.i1 += s1 * h / 3.0;
  };

  for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
    const double y0 = breaks[c];
    const double y1 = breaks[c + 1];
    // A cell hosts at most one falling piece (node c) and one rising piece
    // (node c + 1); when both are active their max has exactly one interior
    // crossover, and splitting there keeps every Simpson run on a smooth arc.
    double fall = 0.0;
    double rise = 0.0;
    for (int a = 0; a < active.count; ++a) {
      if (active.strict[a] == static_cast<int>(c)) fall = active.coeff[a];
      if (active.strict[a] == static_cast<int>(c) + 1) rise = active.coeff[a];
    }
    if (fall > 0.0 && rise > 0.0) {
      const double ratio = fall / rise;
      const double r = basis_y_.basis.shape() == NodeBasis::Shape::hat
                           ? ratio / (1.0 + ratio)
                           : 2.0 / std::numbers::pi * std::atan(std::sqrt(ratio));
      const double split = y0 + r * (y1 - y0);
      if (split > y0 && split < y1) {
        accumulate(static_cast<int>(c), y0, split);
        accumulate(static_cast<int>(c), split, y1);
        continue;
      }
    }
    accumulate(static_cast<int>(c), y0, y1);
  }
  return out;
}

double MaxProductKernel::normalization_constant(const QuadratureSpec& quad) const {
  validate(quad);
  const std::span<const double> breaks = grid().nodes;
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
    const double x0 = breaks[c];
    const double x1 = breaks[c + 1];
    const double h = (x1 - x0) / quad.panels_per_cell;
    double acc = 0.0;
    for (int k = 0; k <= quad.panels_per_cell; ++k) {
      const double x = (k == quad.panels_per_cell) ? x1 : x0 + k * h;
      const double w = (k == 0 || k == quad.panels_per_cell) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
      acc += w * y_slice_integrals(x, quad).i0;
    }
    total += acc * h / 3.0;
  }
  return total;
}

double MaxProductKernel::denominator_floor() const {
  return 1e-14 * (y_max() - y_min());
}

JointDensity::JointDensity(MaxProductKernel kernel, QuadratureSpec quad) : kernel_(std::move(kernel)), quad_(quad) {
  validate(quad_);
  h_ = kernel_.normalization_constant(quad_);
  if (!(h_ > kernel_.denominator_floor())) {
    throw std::runtime_error("density normalization constant is not positive");
  }
}

double JointDensity::value(double x, double y) const {
  const EquidistantGrid& grid = kernel_.grid();
  if (x < grid.interval.lo || x > grid.interval.hi || y < kernel_.y_min() || y > kernel_.y_max()) {
    return 0.0;
  }
  return kernel_.eval(x, y) / h_;
}

JointDensity normalize(MaxProductKernel kernel, const QuadratureSpec& quad) {
  return JointDensity(std::move(kernel), quad);
}

}  // namespace condex

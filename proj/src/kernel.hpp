#pragma once

#include <span>

#include "basis.hpp"
#include "grid.hpp"
#include "ordering.hpp"
#include "quadrature.hpp"

namespace condex {

enum class Family { triangular, trig };

/// Max-product surface R(x, y) = max_i A_i(x) * B_i(y) over the diagonal
/// index pairing, with duplicate y-values routed to one shared base function.
/// Values lie in [0, 1]; R is continuous on the X x Y rectangle.
class MaxProductKernel {
 public:
  MaxProductKernel(Family family, NodeValues values);

  Family family() const { return family_; }
  const EquidistantGrid& grid() const { return values_.grid; }
  const NodeValues& values() const { return values_; }
  const SortedOrder& order() const { return order_; }
  const NodeBasis& basis_x() const { return basis_x_; }
  const AxisBasisY& basis_y() const { return basis_y_; }
  double y_min() const { return order_.strict_values.front(); }
  double y_max() const { return order_.strict_values.back(); }

  /// Kernel value through the cell-lookup path; errors outside X x Y.
  double eval(double x, double y) const;

  /// Same value by scanning every index pair; reference for testing.
  double eval_reference(double x, double y) const;

  struct SliceIntegrals {
    double i0 = 0.0;  // integral of R(x, .) over Y
    double i1 = 0.0;  // integral of y * R(x, .) over Y
  };

  /// Y-axis integrals at fixed x. Panels align to the screened node cells
  /// and each cell splits at the max-crossover of its two covering pieces,
  /// so every Simpson run sees a smooth integrand.
  SliceIntegrals y_slice_integrals(double x, const QuadratureSpec& quad) const;

  /// H = double integral of R over X x Y (tensor composite Simpson).
  double normalization_constant(const QuadratureSpec& quad) const;

  /// Denominator floor below which a slice is treated as degenerate.
  double denominator_floor() const;

 private:
  struct ActiveSet {
    int count = 0;
    int strict[2] = {0, 0};
    double coeff[2] = {0.0, 0.0};
  };
  ActiveSet active_at(double x) const;

  Family family_;
  NodeValues values_;
  SortedOrder order_;
  NodeBasis basis_x_;
  AxisBasisY basis_y_;
};

/// Normalized joint density p(x, y) = R(x, y) / H on X x Y, zero outside.
class JointDensity {
 public:
  JointDensity(MaxProductKernel kernel, QuadratureSpec quad);

  const MaxProductKernel& kernel() const { return kernel_; }
  const QuadratureSpec& quad() const { return quad_; }
  double normalization() const { return h_; }

  /// p(x, y); follows the indicator convention outside the support.
  double value(double x, double y) const;

 private:
  MaxProductKernel kernel_;
  QuadratureSpec quad_;
  double h_ = 0.0;
};

JointDensity normalize(MaxProductKernel kernel, const QuadratureSpec& quad);

}  // namespace condex

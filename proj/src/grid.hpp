#pragma once

#include <functional>
#include <vector>

namespace condex {

/// Scalar map used as the approximation target.
using RealFn = std::function<double(double)>;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Validates lo < hi with both endpoints finite.
Interval make_interval(double lo, double hi);

/// Equidistant partition lo = nodes[0] < ... < nodes[cells] = hi.
struct EquidistantGrid {
  Interval interval;
  int cells = 0;
  double step = 0.0;
  std::vector<double> nodes;
};

EquidistantGrid make_grid(const Interval& interval, int cells);

/// Target-function samples at the grid nodes.
struct NodeValues {
  EquidistantGrid grid;
  std::vector<double> y;
  double y_min = 0.0;
  double y_max = 0.0;
};

/// Samples f at every node; rejects non-finite values.
NodeValues sample_nodes(const RealFn& f, const EquidistantGrid& grid);

/// Equispaced probe grid with both endpoints included (count >= 2).
std::vector<double> probe_grid(const Interval& interval, int count);

}  // namespace condex

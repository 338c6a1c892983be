#include "grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace condex {

Interval make_interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("interval endpoints must be finite");
  }
  if (!(lo < hi)) {
    std::ostringstream msg;
    msg << "invalid interval [" << lo << ", " << hi << "]: lo must be < hi";
    throw std::invalid_argument(msg.str());
  }
  return Interval{lo, hi};
}

EquidistantGrid make_grid(const Interval& interval, int cells) {
  make_interval(interval.lo, interval.hi);
  if (cells < 1) {
    throw std::invalid_argument("grid needs at least one cell");
  }

  EquidistantGrid grid;
  grid.interval = interval;
  grid.cells = cells;
  grid.step = (interval.hi - interval.lo) / cells;
  grid.nodes.resize(static_cast<std::size_t>(cells) + 1);
  // lo + i*step rather than repeated addition; the last node is pinned to hi.
  for (int i = 0; i <= cells; ++i) {
    grid.nodes[static_cast<std::size_t>(i)] = interval.lo + i * grid.step;
  }
  grid.nodes.back() = interval.hi;

  for (int i = 0; i < cells; ++i) {
    if (!(grid.nodes[static_cast<std::size_t>(i)] < grid.nodes[static_cast<std::size_t>(i) + 1])) {
      throw std::invalid_argument("grid nodes collapse: interval too narrow for this cell count");
    }
  }
  return grid;
}

NodeValues sample_nodes(const RealFn& f, const EquidistantGrid& grid) {
  if (!f) {
    throw std::invalid_argument("sample_nodes: empty function");
  }
  NodeValues values;
  values.grid = grid;
  values.y.resize(grid.nodes.size());
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double yi = f(grid.nodes[i]);
    if (!std::isfinite(yi)) {
      std::ostringstream msg;
      msg << "function returned non-finite value at x = " << grid.nodes[i];
      throw std::domain_error(msg.str());
    }
    values.y[i] = yi;
  }
  values.y_min = values.y[0];
  values.y_max = values.y[0];
  for (double yi : values.y) {
    values.y_min = std::min(values.y_min, yi);
    values.y_max = std::max(values.y_max, yi);
  }
  return values;
}

std::vector<double> probe_grid(const Interval& interval, int count) {
  if (count < 2) {
    throw std::invalid_argument("probe grid needs at least 2 points");
  }
  std::vector<double> xs(static_cast<std::size_t>(count));
  const double width = interval.hi - interval.lo;
  for (int k = 0; k < count; ++k) {
    xs[static_cast<std::size_t>(k)] = interval.lo + width * k / (count - 1);
  }
  xs.front() = interval.lo;
  xs.back() = interval.hi;
  return xs;
}

}  // namespace condex

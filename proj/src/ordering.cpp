#include "ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace condex {

namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sequence contains a non-finite value");
    }
  }
}

}  // namespace

SortedOrder sort_and_screen(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("sort_and_screen: empty sequence");
  }
  require_finite(values);

  const int count = static_cast<int>(values.size());
  SortedOrder order;
  order.perm.resize(values.size());
  std::iota(order.perm.begin(), order.perm.end(), 0);
  // Stable sort keeps ties in original index order, so the first member of
  // each equal-value run is automatically the least index.
  std::stable_sort(order.perm.begin(), order.perm.end(),
                   [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });

  order.sorted_values.resize(values.size());
  order.sorted_pos.resize(values.size());
  for (int t = 0; t < count; ++t) {
    const int original = order.perm[static_cast<std::size_t>(t)];
    order.sorted_values[static_cast<std::size_t>(t)] = values[static_cast<std::size_t>(original)];
    order.sorted_pos[static_cast<std::size_t>(original)] = t;
  }

  order.class_of.resize(values.size());
  for (int t = 0; t < count; ++t) {
    const int original = order.perm[static_cast<std::size_t>(t)];
    const double value = order.sorted_values[static_cast<std::size_t>(t)];
    if (order.strict_values.empty() || order.strict_values.back() != value) {
      order.strict_values.push_back(value);
      order.classes.emplace_back();
      order.reps.push_back(original);
    }
    order.classes.back().push_back(original);
    order.class_of[static_cast<std::size_t>(original)] = static_cast<int>(order.classes.size()) - 1;
  }
  return order;
}

GapReport gap_report(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("gap_report needs at least 2 values");
  }
  require_finite(values);

  GapReport report;
  for (std::size_t i = 1; i < values.size(); ++i) {
    report.e = std::max(report.e, std::abs(values[i] - values[i - 1]));
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    report.d = std::max(report.d, sorted[i] - sorted[i - 1]);
  }
  return report;
}

}  // namespace condex

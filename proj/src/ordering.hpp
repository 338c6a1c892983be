#pragma once

#include <span>
#include <vector>

namespace condex {

/// Stable sorting permutation of a value sequence together with the
/// duplicate screening used on the Y axis: equal values form one class,
/// the class representative is the least original index, and
/// strict_values enumerates the distinct values in increasing order.
struct SortedOrder {
  std::vector<int> perm;                  // perm[t] = original index of the t-th smallest value
  std::vector<double> sorted_values;      // values[perm[t]], non-decreasing
  std::vector<std::vector<int>> classes;  // original indices per distinct value, ascending
  std::vector<int> reps;                  // least original index of each class
  std::vector<double> strict_values;      // distinct values, strictly increasing
  std::vector<int> class_of;              // original index -> class position
  std::vector<int> sorted_pos;            // original index -> position in perm
};

SortedOrder sort_and_screen(std::span<const double> values);

/// d = max adjacent gap after sorting, e = max adjacent |difference| as given.
/// The sorted gaps never exceed the original ones (d <= e).
struct GapReport {
  double d = 0.0;
  double e = 0.0;
};

GapReport gap_report(std::span<const double> values);

}  // namespace condex

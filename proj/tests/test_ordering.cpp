#include <algorithm>
#include <random>
#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "ordering.hpp"

using condex::gap_report;
using condex::GapReport;
using condex::sort_and_screen;
using condex::SortedOrder;

namespace {

// brute-force oracle: both maxima by direct enumeration
GapReport gap_oracle(std::vector<double> values) {
  GapReport expected;
  for (std::size_t i = 1; i < values.size(); ++i) {
    expected.e = std::max(expected.e, std::abs(values[i] - values[i - 1]));
  }
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    expected.d = std::max(expected.d, values[i] - values[i - 1]);
  }
  return expected;
}

}  // namespace

TEST_CASE("screening a single duplicate") {
  const std::vector<double> values{0.0, 1.0, 1.0, 2.0};
  const SortedOrder order = sort_and_screen(values);
  CHECK(order.perm == std::vector<int>{0, 1, 2, 3});
  REQUIRE(order.classes.size() == 3);
  CHECK(order.classes[0] == std::vector<int>{0});
  CHECK(order.classes[1] == std::vector<int>{1, 2});
  CHECK(order.classes[2] == std::vector<int>{3});
  CHECK(order.reps == std::vector<int>{0, 1, 3});
  CHECK(order.strict_values == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(order.class_of == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("sorting a rotated triple") {
  const std::vector<double> values{3.0, 1.0, 2.0};
  const SortedOrder order = sort_and_screen(values);
  CHECK(order.perm == std::vector<int>{1, 2, 0});
  CHECK(order.strict_values == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(order.sorted_pos == std::vector<int>{2, 0, 1});
}

TEST_CASE("all-equal input collapses to one class") {
  const SortedOrder order = sort_and_screen(std::vector<double>{5.0, 5.0, 5.0});
  REQUIRE(order.classes.size() == 1);
  CHECK(order.reps == std::vector<int>{0});
  CHECK(order.strict_values == std::vector<double>{5.0});
}

TEST_CASE("ordering rejects bad input") {
  CHECK_THROWS_AS(sort_and_screen(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(sort_and_screen(std::vector<double>{1.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(gap_report(std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("gap report hand cases") {
  GapReport r = gap_report(std::vector<double>{3.0, 1.0, 2.0});
  CHECK(r.d == 1.0);
  CHECK(r.e == 2.0);

  r = gap_report(std::vector<double>{1.0, 2.0, 4.0});
  CHECK(r.d == 2.0);
  CHECK(r.e == 2.0);

  r = gap_report(std::vector<double>{0.0, 10.0, 5.0});
  CHECK(r.d == 5.0);
  CHECK(r.e == 10.0);
}

TEST_CASE("sorted gaps never exceed adjacent differences") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> pick_len(2, 50);
  std::uniform_real_distribution<double> pick_value(-10.0, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> values(pick_len(rng));
    for (double& v : values) v = pick_value(rng);
    const GapReport r = gap_report(values);
    const GapReport expected = gap_oracle(values);
    CHECK(r.d == expected.d);
    CHECK(r.e == expected.e);
    CHECK(r.d <= r.e);
  }
}

TEST_CASE("screened values are strictly increasing") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> pick_len(1, 40);
  std::uniform_int_distribution<int> pick_value(-3, 3);  // integer values force duplicates
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> values(pick_len(rng));
    for (double& v : values) v = pick_value(rng);
    const SortedOrder order = sort_and_screen(values);
    for (std::size_t s = 1; s < order.strict_values.size(); ++s) {
      CHECK(order.strict_values[s - 1] < order.strict_values[s]);
    }
    for (std::size_t t = 1; t < order.sorted_values.size(); ++t) {
      CHECK(order.sorted_values[t - 1] <= order.sorted_values[t]);
    }
    for (std::size_t t = 0; t < order.perm.size(); ++t) {
      CHECK(order.sorted_values[t] == values[order.perm[t]]);
    }
    // representative = least original index of its class
    for (std::size_t c = 0; c < order.classes.size(); ++c) {
      CHECK(order.reps[c] == *std::min_element(order.classes[c].begin(), order.classes[c].end()));
    }
  }
}

TEST_CASE("strictly increasing input is a fixed point") {
  const std::vector<double> values{-4.0, -1.5, 0.0, 2.25, 9.0};
  const SortedOrder order = sort_and_screen(values);
  CHECK(order.perm == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(order.strict_values == values);
  for (const auto& cls : order.classes) CHECK(cls.size() == 1);
}

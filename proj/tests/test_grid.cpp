#include <cmath>
#include <limits>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "grid.hpp"

using condex::EquidistantGrid;
using condex::Interval;
using condex::make_grid;
using condex::make_interval;
using condex::NodeValues;
using condex::sample_nodes;

TEST_CASE("unit interval split in two") {
  const EquidistantGrid grid = make_grid({0.0, 1.0}, 2);
  REQUIRE(grid.nodes.size() == 3);
  CHECK(grid.nodes[0] == 0.0);
  CHECK(grid.nodes[1] == 0.5);
  CHECK(grid.nodes[2] == 1.0);
  CHECK(grid.step == 0.5);
}

TEST_CASE("single cell keeps only the endpoints") {
  const EquidistantGrid grid = make_grid({0.0, 1.0}, 1);
  REQUIRE(grid.nodes.size() == 2);
  CHECK(grid.nodes[0] == 0.0);
  CHECK(grid.nodes[1] == 1.0);
}

TEST_CASE("doubled cell count gives 2n+1 nodes") {
  for (int n : {1, 3, 7}) {
    const EquidistantGrid grid = make_grid({0.0, 1.0}, 2 * n);
    CHECK(grid.nodes.size() == static_cast<std::size_t>(2 * n + 1));
  }
}

TEST_CASE("grid construction rejects bad input") {
  CHECK_THROWS_AS(make_interval(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_interval(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_interval(0.0, std::numeric_limits<double>::infinity()), std::invalid_argument);
  CHECK_THROWS_AS((make_grid({0.0, 1.0}, 0)), std::invalid_argument);
  CHECK_THROWS_AS((make_grid({1.0, 0.0}, 4)), std::invalid_argument);
}

TEST_CASE("random grids are equidistant and tight") {
  std::mt19937_64 rng(991);
  std::uniform_real_distribution<double> pick(-20.0, 20.0);
  std::uniform_int_distribution<int> pick_n(1, 200);
  for (int trial = 0; trial < 200; ++trial) {
    double lo = pick(rng);
    double hi = pick(rng);
    if (lo == hi) continue;
    if (lo > hi) std::swap(lo, hi);
    const int n = pick_n(rng);
    const EquidistantGrid grid = make_grid({lo, hi}, n);
    CHECK(grid.nodes.front() == lo);
    CHECK(grid.nodes.back() == hi);
    CHECK(std::abs(grid.step * n - (hi - lo)) <= 1e-12 * std::abs(hi - lo));
    for (int i = 0; i <= n; ++i) {
      CHECK(std::abs(grid.nodes[i] - (lo + i * grid.step)) <= 1e-12);
      if (i > 0) CHECK(grid.nodes[i - 1] < grid.nodes[i]);
    }
  }
}

TEST_CASE("sampling the launch arc at five nodes") {
  const auto f = [](double x) { return x - x * x; };
  const NodeValues values = sample_nodes(f, make_grid({0.0, 1.0}, 4));
  REQUIRE(values.y.size() == 5);
  CHECK(values.y[0] == 0.0);
  CHECK(values.y[1] == 0.1875);
  CHECK(values.y[2] == 0.25);
  CHECK(values.y[3] == 0.1875);
  CHECK(values.y[4] == 0.0);
  CHECK(values.y_min == 0.0);
  CHECK(values.y_max == 0.25);
}

TEST_CASE("sampling a constant") {
  const NodeValues values = sample_nodes([](double) { return 3.0; }, make_grid({-1.0, 2.0}, 6));
  for (double y : values.y) CHECK(y == 3.0);
  CHECK(values.y_min == 3.0);
  CHECK(values.y_max == 3.0);
}

TEST_CASE("sampling the identity") {
  const NodeValues values = sample_nodes([](double x) { return x; }, make_grid({0.0, 1.0}, 2));
  CHECK(values.y[0] == 0.0);
  CHECK(values.y[1] == 0.5);
  CHECK(values.y[2] == 1.0);
}

TEST_CASE("non-finite samples abort construction") {
  const auto f = [](double x) { return 1.0 / x; };
  CHECK_THROWS_AS((sample_nodes(f, make_grid({0.0, 1.0}, 2))), std::domain_error);
  const auto g = [](double x) { return std::sqrt(x); };
  CHECK_THROWS_AS((sample_nodes(g, make_grid({-1.0, 1.0}, 2))), std::domain_error);
}

TEST_CASE("sampling commutes with affine domain rescaling") {
  const auto f = [](double x) { return std::sin(x) + 0.25 * x * x; };
  const double lo = 2.0;
  const double hi = 5.0;
  const auto g = [&](double u) { return f((hi - lo) * u + lo); };
  const NodeValues direct = sample_nodes(f, make_grid({lo, hi}, 16));
  const NodeValues rescaled = sample_nodes(g, make_grid({0.0, 1.0}, 16));
  for (std::size_t i = 0; i < direct.y.size(); ++i) {
    CHECK(direct.y[i] == doctest::Approx(rescaled.y[i]).epsilon(1e-12));
  }
}

#include "well.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace condex {
namespace well {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void check_level(int n) {
  if (n < 1) {
    throw std::invalid_argument("quantum number must be >= 1");
  }
}

void check_unit(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("well coordinate must lie in [0, 1]");
  }
}

}  // namespace

double adam_essence(int n, double x) {
  check_level(n);
  check_unit(x);
  return std::sin(n * std::numbers::pi * x);
}

double adam_wave(int n, double x) { return kSqrt2 * adam_essence(n, x); }

double eve_essence(int n, double x) {
  check_level(n);
  check_unit(x);
  return std::cos(n * std::numbers::pi * x);
}

double eve_wave(int n, double x) { return kSqrt2 * eve_essence(n, x); }

std::complex<double> complex_wave(int n, double x) {
  return {eve_wave(n, x), adam_wave(n, x)};
}

std::complex<double> adam_wave_at_time(int n, double x, double t, double energy_scale) {
  const double phase = energy(n, energy_scale) * t;
  return adam_wave(n, x) * std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> eve_wave_at_time(int n, double x, double t, double energy_scale) {
  const double phase = energy(n, energy_scale) * t;
  return eve_wave(n, x) * std::complex<double>(std::cos(phase), -std::sin(phase));
}

double energy(int n, double energy_scale) {
  check_level(n);
  if (!(energy_scale > 0.0)) {
    throw std::invalid_argument("energy scale must be positive");
  }
  return static_cast<double>(n) * static_cast<double>(n) * energy_scale;
}

DualityNumbers duality_numbers(int n) {
  check_level(n);
  DualityNumbers out;
  out.nu = n / 2.0;
  out.lambda = 2.0 / n;
  // nu * lambda = (n * 2) / (2 * n): cancel as a ratio of equal integers
  out.product = static_cast<double>(2LL * n) / static_cast<double>(2LL * n);
  return out;
}

LocalGroundState local_ground_state(double lo, double hi, double y) {
  if (!(lo < hi)) {
    throw std::invalid_argument("degenerate subinterval");
  }
  if (!(y >= lo && y <= hi)) {
    throw std::domain_error("point outside the subinterval");
  }
  const double theta = std::numbers::pi / 2 * (y - lo) / (hi - lo);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return LocalGroundState{s * s, c * c};
}

DescendantLedger descendant_ledger(const NodeValues& values, int level) {
  check_level(level);
  if (values.grid.cells != 2 * level) {
    throw std::invalid_argument("descendant ledger needs a grid with 2 * level cells");
  }
  std::vector<double> sorted = values.y;
  std::sort(sorted.begin(), sorted.end());

  DescendantLedger ledger;
  ledger.level = level;
  ledger.count = 2 * level;
  ledger.subintervals.reserve(sorted.size() - 1);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    ledger.subintervals.emplace_back(sorted[i], sorted[i + 1]);
  }
  return ledger;
}

}  // namespace well
}  // namespace condex

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "grid.hpp"

namespace condex {
namespace well {

/// sqrt(2) sin(n pi x) on [0, 1] (Dirichlet-boundary eigenstate).
double adam_wave(int n, double x);
/// sin(n pi x): the amplitude-stripped companion of adam_wave.
double adam_essence(int n, double x);

/// sqrt(2) cos(n pi x) on [0, 1] (derivative-boundary eigenstate).
double eve_wave(int n, double x);
double eve_essence(int n, double x);

/// eve + i * adam; the squared modulus is 2 everywhere.
std::complex<double> complex_wave(int n, double x);

/// Stationary phase factors applied at a fixed time; modulus preserving.
std::complex<double> adam_wave_at_time(int n, double x, double t, double energy_scale = 1.0);
std::complex<double> eve_wave_at_time(int n, double x, double t, double energy_scale = 1.0);

/// E_n = n^2 * scale; the scale stands in for the ground-level constant.
double energy(int n, double energy_scale = 1.0);

struct DualityNumbers {
  double nu = 0.0;      // frequency n / 2
  double lambda = 0.0;  // wavelength 2 / n
  double product = 0.0; // exactly 1
};

DualityNumbers duality_numbers(int n);

struct LocalGroundState {
  double adam_sq = 0.0;  // sin^2 quarter-wave over the subinterval
  double eve_sq = 0.0;   // cos^2 counterpart; the two always sum to 1
};

/// Ground-state probability shapes on [lo, hi] evaluated at y.
LocalGroundState local_ground_state(double lo, double hi, double y);

/// Bookkeeping of the 2n value-axis subintervals spawned at one level.
struct DescendantLedger {
  int level = 0;
  int count = 0;  // always 2 * level
  std::vector<std::pair<double, double>> subintervals;
};

/// Requires a grid with 2 * level cells; subintervals are consecutive pairs
/// of the sorted node values.
DescendantLedger descendant_ledger(const NodeValues& values, int level);

}  // namespace well
}  // namespace condex

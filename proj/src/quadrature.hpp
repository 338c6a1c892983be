#pragma once

#include <span>
#include <stdexcept>

namespace condex {

/// Quadrature configuration: composite Simpson with panels aligned to the
/// axis cell boundaries. panels_per_cell must be even and >= 2.
struct QuadratureSpec {
  int panels_per_cell = 64;
};

inline void validate(const QuadratureSpec& spec) {
  if (spec.panels_per_cell < 2 || spec.panels_per_cell % 2 != 0) {
    throw std::invalid_argument("panels_per_cell must be even and >= 2");
  }
}

/// Composite Simpson over [t0, t1] with an even panel count.
template <class F>
double simpson(F&& f, double t0, double t1, int panels) {
  const double h = (t1 - t0) / panels;
  double acc = f(t0) + f(t1);
  for (int k = 1; k < panels; ++k) {
    acc += (k % 2 == 1 ? 4.0 : 2.0) * f(t0 + k * h);
  }
  return acc * h / 3.0;
}

/// Composite Simpson over consecutive cells given by breakpoints, so that a
/// piecewise-smooth integrand is smooth within every panel run.
template <class F>
double simpson_cells(std::span<const double> breaks, int panels_per_cell, F&& f) {
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
    total += simpson(f, breaks[c], breaks[c + 1], panels_per_cell);
  }
  return total;
}

}  // namespace condex

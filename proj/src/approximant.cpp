#include "approximant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace condex {

namespace {

bool all_equal(std::span<const double> y) {
  for (double v : y) {
    if (v != y.front()) {
      return false;
    }
  }
  return true;
}

double slice_expectation(const MaxProductKernel& kernel, double x, const QuadratureSpec& quad) {
  const auto slice = kernel.y_slice_integrals(x, quad);
  if (!(slice.i0 > kernel.denominator_floor())) {
    throw std::runtime_error("slice integral below the denominator floor");
  }
  return slice.i1 / slice.i0;
}

}  // namespace

Approximant Approximant::build(const RealFn& f, const Interval& interval, int n, Family family,
                               std::optional<Mode> mode, QuadratureSpec quad) {
  if (n < 1) {
    throw std::invalid_argument("approximant needs n >= 1");
  }
  validate(quad);
  if (mode == Mode::constant) {
    throw std::invalid_argument("constant mode is detected from the samples, not requested");
  }

  const int cells = family == Family::trig ? 2 * n : n;
  const EquidistantGrid grid = make_grid(interval, cells);
  NodeValues values = sample_nodes(f, grid);

  Approximant appx;
  appx.family_ = family;
  appx.n_ = n;
  appx.quad_ = quad;
  appx.values_ = std::move(values);

  if (all_equal(appx.values_.y)) {
    appx.mode_ = Mode::constant;
    appx.beta_ = appx.values_.y.front();
    return appx;
  }

  const Mode resolved = mode.value_or(family == Family::triangular ? Mode::closed_form : Mode::quadrature);
  if (resolved == Mode::closed_form && family != Family::triangular) {
    throw std::invalid_argument("closed form is only defined for the triangular family");
  }
  appx.mode_ = resolved;

  if (resolved == Mode::quadrature) {
    appx.density_ = std::make_shared<const JointDensity>(MaxProductKernel(family, appx.values_), quad);
    return appx;
  }

  const SortedOrder order = sort_and_screen(appx.values_.y);
  std::vector<double> gap_sorted(appx.values_.y.size(), 0.0);
  for (std::size_t t = 1; t < order.sorted_values.size(); ++t) {
    gap_sorted[t] = order.sorted_values[t] - order.sorted_values[t - 1];
  }
  gap_sorted[0] = gap_sorted[1];

  auto closed = std::make_shared<ClosedForm>(ClosedForm{triangular_basis_x(appx.values_.grid), {}});
  closed->weight_gap.resize(appx.values_.y.size());
  for (std::size_t i = 0; i < appx.values_.y.size(); ++i) {
    closed->weight_gap[i] = gap_sorted[static_cast<std::size_t>(order.sorted_pos[i])];
  }
  appx.closed_ = std::move(closed);
  return appx;
}

double Approximant::beta() const {
  if (mode_ != Mode::constant) {
    throw std::logic_error("beta is only defined in constant mode");
  }
  return beta_;
}

const JointDensity* Approximant::density() const { return density_.get(); }

double Approximant::denominator_floor() const { return 1e-14 * (values_.y_max - values_.y_min); }

double Approximant::eval_closed_form(double x) const {
  const NodeBasis& bx = closed_->basis_x;
  const int cell = bx.cell_of(x);
  const int i0 = cell;
  const int i1 = cell + 1;
  const double a0 = bx.eval_in_cell(i0, cell, x);
  const double a1 = bx.eval_in_cell(i1, cell, x);
  const double w0 = a0 * closed_->weight_gap[static_cast<std::size_t>(i0)];
  const double w1 = a1 * closed_->weight_gap[static_cast<std::size_t>(i1)];
  const double den = w0 + w1;
  const double y0 = values_.y[static_cast<std::size_t>(i0)];
  const double y1 = values_.y[static_cast<std::size_t>(i1)];
  if (!(den > denominator_floor())) {
    // locally flat stretch: both sorted gaps vanish, fall back to the chord
    const std::span<const double> nodes = values_.grid.nodes;
    const double t = (x - nodes[static_cast<std::size_t>(i0)]) /
                     (nodes[static_cast<std::size_t>(i1)] - nodes[static_cast<std::size_t>(i0)]);
    return y0 + (y1 - y0) * t;
  }
  return (w0 * y0 + w1 * y1) / den;
}

double Approximant::eval_quadrature(double x) const {
  return slice_expectation(density_->kernel(), x, quad_);
}

double Approximant::eval(double x) const {
  if (x < values_.grid.interval.lo || x > values_.grid.interval.hi) {
    throw std::domain_error("approximant evaluated outside the interval");
  }
  switch (mode_) {
    case Mode::constant:
      return beta_;
    case Mode::closed_form:
      return eval_closed_form(x);
    case Mode::quadrature:
      return eval_quadrature(x);
  }
  throw std::logic_error("unreachable");
}

double Approximant::closed_form_denominator(double x) const {
  if (mode_ != Mode::closed_form) {
    throw std::logic_error("denominator is only defined in closed-form mode");
  }
  if (x < values_.grid.interval.lo || x > values_.grid.interval.hi) {
    throw std::domain_error("point outside the interval");
  }
  const NodeBasis& bx = closed_->basis_x;
  const int cell = bx.cell_of(x);
  return bx.eval_in_cell(cell, cell, x) * closed_->weight_gap[static_cast<std::size_t>(cell)] +
         bx.eval_in_cell(cell + 1, cell, x) * closed_->weight_gap[static_cast<std::size_t>(cell) + 1];
}

double Approximant::closed_form_weight(int l, double x) const {
  if (mode_ != Mode::closed_form) {
    throw std::logic_error("weights are only defined in closed-form mode");
  }
  if (l < 0 || l >= static_cast<int>(values_.y.size())) {
    throw std::out_of_range("weight index out of range");
  }
  const double den = closed_form_denominator(x);
  if (!(den > denominator_floor())) {
    throw std::runtime_error("weight denominator below the floor");
  }
  const NodeBasis& bx = closed_->basis_x;
  return bx.eval(l, x) * closed_->weight_gap[static_cast<std::size_t>(l)] / den;
}

ErrorReport Approximant::error_report(const RealFn& f, int probes) const {
  if (probes < 101) {
    throw std::invalid_argument("error report needs at least 101 probes");
  }
  ErrorReport report;
  report.n = n_;
  report.probe_count = probes;
  report.bound_3dy = 3.0 * gap_report(values_.y).d;
  for (double x : probe_grid(values_.grid.interval, probes)) {
    report.sup_error = std::max(report.sup_error, std::abs(eval(x) - f(x)));
  }
  for (std::size_t i = 0; i < values_.grid.nodes.size(); ++i) {
    report.max_node_residual = std::max(report.max_node_residual, std::abs(eval(values_.grid.nodes[i]) - values_.y[i]));
  }
  return report;
}

ResidualReport Approximant::residual_report(const RealFn& f, int probes) const {
  if (mode_ == Mode::constant) {
    return ResidualReport{n_, 0.0};
  }
  if (mode_ != Mode::quadrature) {
    throw std::logic_error("residual report needs a density (quadrature mode)");
  }
  ResidualReport report = condex::residual_report(*density_, f, probes);
  report.n = n_;
  return report;
}

ResidualReport residual_report(const JointDensity& density, const RealFn& f, int probes) {
  if (probes < 2) {
    throw std::invalid_argument("residual report needs at least 2 probes");
  }
  const MaxProductKernel& kernel = density.kernel();
  ResidualReport report;
  report.n = kernel.family() == Family::trig ? kernel.grid().cells / 2 : kernel.grid().cells;
  for (double x : probe_grid(kernel.grid().interval, probes)) {
    const double expectation = slice_expectation(kernel, x, density.quad());
    report.residual_sup = std::max(report.residual_sup, std::abs(expectation - f(x)));
  }
  return report;
}

std::vector<StudyRow> convergence_study(const RealFn& f, const Interval& interval, std::span<const int> ns,
                                        Family family, std::optional<Mode> mode, QuadratureSpec quad, int probes) {
  if (ns.empty()) {
    throw std::invalid_argument("convergence study needs at least one n");
  }
  std::vector<StudyRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    const Approximant appx = Approximant::build(f, interval, n, family, mode, quad);
    StudyRow row;
    row.report = appx.error_report(f, probes);
    switch (appx.mode()) {
      case Mode::constant:
        row.residual_sup = 0.0;
        break;
      case Mode::quadrature:
        row.residual_sup = appx.residual_report(f, probes).residual_sup;
        break;
      case Mode::closed_form: {
        const JointDensity density(MaxProductKernel(family, appx.node_values()), quad);
        row.residual_sup = residual_report(density, f, probes).residual_sup;
        break;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace condex

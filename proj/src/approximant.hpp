#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "kernel.hpp"

namespace condex {

enum class Mode { quadrature, closed_form, constant };

struct ErrorReport {
  int n = 0;
  double sup_error = 0.0;
  double bound_3dy = 0.0;  // 3 * max sorted gap of the node values
  int probe_count = 0;
  double max_node_residual = 0.0;
};

struct ResidualReport {
  int n = 0;
  double residual_sup = 0.0;
};

/// Evaluator of the conditional-expectation approximant f_n.
///
/// quadrature  - ratio of the Y-slice integrals of the max-product kernel
/// closed_form - normalized interpolation weights (triangular family only)
/// constant    - degenerate path taken whenever every node value is equal
class Approximant {
 public:
  static Approximant build(const RealFn& f, const Interval& interval, int n, Family family,
                           std::optional<Mode> mode = std::nullopt, QuadratureSpec quad = {});

  Mode mode() const { return mode_; }
  Family family() const { return family_; }
  int n() const { return n_; }
  double beta() const;                      // constant mode only
  const JointDensity* density() const;      // non-null only in quadrature mode
  const NodeValues& node_values() const { return values_; }
  double y_min() const { return values_.y_min; }
  double y_max() const { return values_.y_max; }

  double eval(double x) const;

  /// Interpolation weight phi_l(x) of the closed form; throws when the
  /// denominator is at or below the floor (see closed_form_denominator).
  double closed_form_weight(int l, double x) const;
  double closed_form_denominator(double x) const;
  double denominator_floor() const;

  ErrorReport error_report(const RealFn& f, int probes) const;
  ResidualReport residual_report(const RealFn& f, int probes) const;

 private:
  Approximant() = default;

  struct ClosedForm {
    NodeBasis basis_x;
    std::vector<double> weight_gap;  // per original index: sorted-space gap, first gap copied down
  };

  double eval_closed_form(double x) const;
  double eval_quadrature(double x) const;

  Mode mode_ = Mode::constant;
  Family family_ = Family::triangular;
  int n_ = 0;
  double beta_ = 0.0;
  NodeValues values_;
  QuadratureSpec quad_;
  std::shared_ptr<const JointDensity> density_;
  std::shared_ptr<const ClosedForm> closed_;
};

/// Residual of the integral equation: sup |E(y | x) - f(x)| over a probe grid.
ResidualReport residual_report(const JointDensity& density, const RealFn& f, int probes);

struct StudyRow {
  ErrorReport report;
  double residual_sup = 0.0;
};

/// One row per n, shared probe resolution; residuals always come from the
/// quadrature density of the same family.
std::vector<StudyRow> convergence_study(const RealFn& f, const Interval& interval, std::span<const int> ns,
                                        Family family, std::optional<Mode> mode, QuadratureSpec quad, int probes);

}  // namespace condex

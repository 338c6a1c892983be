#include "condex/condex.h"

#include <cmath>
#include <limits>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "approximant.hpp"
#include "expr.hpp"
#include "grid.hpp"
#include "kernel.hpp"
#include "ordering.hpp"
#include "well.hpp"

struct cx_function {
  condex::RealFn fn;
};

struct cx_approximant {
  condex::Approximant impl;
};

namespace {

thread_local std::string g_last_error;

cx_status set_error(cx_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

cx_status run(auto&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const condex::expr::ParseError& e) {
    return set_error(CX_ERROR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(CX_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(CX_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return set_error(CX_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CX_ERROR_NUMERIC, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CX_ERROR_NUMERIC, e.what());
  }
}

cx_status require(bool ok, const char* message) {
  return ok ? CX_OK : set_error(CX_ERROR_INVALID_ARGUMENT, message);
}

cx_status make_function(condex::RealFn fn, cx_function** out) {
  *out = new cx_function{std::move(fn)};
  return CX_OK;
}

std::optional<condex::Mode> to_mode(cx_mode mode) {
  switch (mode) {
    case CX_MODE_DEFAULT: return std::nullopt;
    case CX_MODE_QUADRATURE: return condex::Mode::quadrature;
    case CX_MODE_CLOSED_FORM: return condex::Mode::closed_form;
    case CX_MODE_CONSTANT: return condex::Mode::constant;
  }
  throw std::invalid_argument("unknown mode");
}

cx_mode from_mode(condex::Mode mode) {
  switch (mode) {
    case condex::Mode::quadrature: return CX_MODE_QUADRATURE;
    case condex::Mode::closed_form: return CX_MODE_CLOSED_FORM;
    case condex::Mode::constant: return CX_MODE_CONSTANT;
  }
  return CX_MODE_DEFAULT;
}

condex::Family to_family(cx_family family) {
  switch (family) {
    case CX_FAMILY_TRIANGULAR: return condex::Family::triangular;
    case CX_FAMILY_TRIG: return condex::Family::trig;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

extern "C" {

const char* cx_status_name(cx_status status) {
  switch (status) {
    case CX_OK: return "ok";
    case CX_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CX_ERROR_DOMAIN: return "domain error";
    case CX_ERROR_PARSE: return "parse error";
    case CX_ERROR_NUMERIC: return "numeric error";
  }
  return "unknown";
}

const char* cx_last_error(void) { return g_last_error.c_str(); }

cx_status cx_function_from_callback(cx_real_fn fn, void* user, cx_function** out) {
  if (cx_status s = require(fn && out, "callback and output must be non-null"); s != CX_OK) return s;
  return run([&] { return make_function([fn, user](double x) { return fn(x, user); }, out); });
}

cx_status cx_function_from_expression(const char* source, cx_function** out) {
  if (cx_status s = require(source && out, "source and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    auto parsed = condex::expr::Expression::parse(source);
    return make_function(parsed.fn(), out);
  });
}

cx_status cx_function_polynomial(const double* coeffs, size_t count, cx_function** out) {
  if (cx_status s = require(coeffs && out && count > 0, "need coefficients and an output"); s != CX_OK) return s;
  return run([&] {
    std::vector<double> c(coeffs, coeffs + count);
    for (double v : c) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("polynomial coefficients must be finite");
      }
    }
    return make_function(
        [c = std::move(c)](double x) {
          double acc = 0.0;
          for (std::size_t i = c.size(); i-- > 0;) {
            acc = acc * x + c[i];
          }
          return acc;
        },
        out);
  });
}

cx_status cx_function_projectile(double alpha, double v0, double g, cx_function** out) {
  if (cx_status s = require(out != nullptr, "output must be non-null"); s != CX_OK) return s;
  return run([&] {
    if (!(alpha > 0.0) || !(alpha < 1.5707963267948966) || !(v0 > 0.0) || !(g > 0.0)) {
      throw std::invalid_argument("projectile needs alpha in (0, pi/2), v0 > 0, g > 0");
    }
    const double slope = std::tan(alpha);
    const double c = std::cos(alpha);
    const double curvature = g / (2.0 * v0 * v0 * c * c);
    return make_function([slope, curvature](double x) { return x * slope - curvature * x * x; }, out);
  });
}

cx_status cx_function_constant(double value, cx_function** out) {
  if (cx_status s = require(out != nullptr, "output must be non-null"); s != CX_OK) return s;
  return run([&] {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("constant must be finite");
    }
    return make_function([value](double) { return value; }, out);
  });
}

cx_status cx_function_identity(cx_function** out) {
  if (cx_status s = require(out != nullptr, "output must be non-null"); s != CX_OK) return s;
  return run([&] { return make_function([](double x) { return x; }, out); });
}

cx_status cx_function_eval(const cx_function* f, double x, double* out) {
  if (cx_status s = require(f && out, "function and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    *out = f->fn(x);
    return CX_OK;
  });
}

void cx_function_free(cx_function* f) { delete f; }

cx_status cx_approximant_build(const cx_function* f, double lo, double hi, unsigned n, cx_family family,
                               cx_mode mode, unsigned panels_per_cell, cx_approximant** out) {
  if (cx_status s = require(f && out, "function and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::Interval interval = condex::make_interval(lo, hi);
    condex::QuadratureSpec quad;
    quad.panels_per_cell = static_cast<int>(panels_per_cell);
    *out = new cx_approximant{condex::Approximant::build(f->fn, interval, static_cast<int>(n),
                                                         to_family(family), to_mode(mode), quad)};
    return CX_OK;
  });
}

cx_status cx_approximant_eval(const cx_approximant* appx, double x, double* out) {
  if (cx_status s = require(appx && out, "approximant and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    *out = appx->impl.eval(x);
    return CX_OK;
  });
}

cx_status cx_approximant_get_info(const cx_approximant* appx, cx_approximant_info* out) {
  if (cx_status s = require(appx && out, "approximant and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::Approximant& impl = appx->impl;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out->n = static_cast<unsigned>(impl.n());
    out->cells = static_cast<unsigned>(impl.node_values().grid.cells);
    out->family = impl.family() == condex::Family::triangular ? CX_FAMILY_TRIANGULAR : CX_FAMILY_TRIG;
    out->mode = from_mode(impl.mode());
    out->lo = impl.node_values().grid.interval.lo;
    out->hi = impl.node_values().grid.interval.hi;
    out->y_min = impl.y_min();
    out->y_max = impl.y_max();
    out->normalization = impl.density() ? impl.density()->normalization() : nan;
    out->beta = impl.mode() == condex::Mode::constant ? impl.beta() : nan;
    return CX_OK;
  });
}

cx_status cx_approximant_error_report(const cx_approximant* appx, const cx_function* f, unsigned probes,
                                      cx_error_report* out) {
  if (cx_status s = require(appx && f && out, "approximant, function and output must be non-null"); s != CX_OK)
    return s;
  return run([&] {
    const condex::ErrorReport report = appx->impl.error_report(f->fn, static_cast<int>(probes));
    out->n = static_cast<unsigned>(report.n);
    out->sup_error = report.sup_error;
    out->bound_3dy = report.bound_3dy;
    out->probe_count = static_cast<unsigned>(report.probe_count);
    out->max_node_residual = report.max_node_residual;
    return CX_OK;
  });
}

cx_status cx_approximant_residual_sup(const cx_approximant* appx, const cx_function* f, unsigned probes,
                                      double* out) {
  if (cx_status s = require(appx && f && out, "approximant, function and output must be non-null"); s != CX_OK)
    return s;
  return run([&] {
    *out = appx->impl.residual_report(f->fn, static_cast<int>(probes)).residual_sup;
    return CX_OK;
  });
}

cx_status cx_approximant_kernel_value(const cx_approximant* appx, double x, double y, double* out) {
  if (cx_status s = require(appx && out, "approximant and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::JointDensity* density = appx->impl.density();
    if (!density) {
      throw std::invalid_argument("kernel values need quadrature mode");
    }
    *out = density->kernel().eval(x, y);
    return CX_OK;
  });
}

cx_status cx_approximant_density_value(const cx_approximant* appx, double x, double y, double* out) {
  if (cx_status s = require(appx && out, "approximant and output must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::JointDensity* density = appx->impl.density();
    if (!density) {
      throw std::invalid_argument("density values need quadrature mode");
    }
    *out = density->value(x, y);
    return CX_OK;
  });
}

cx_status cx_approximant_density_grid(const cx_approximant* appx, size_t res_x, size_t res_y, double* out) {
  if (cx_status s = require(appx && out && res_x > 0 && res_y > 0, "need an approximant, output and resolution");
      s != CX_OK)
    return s;
  return run([&] {
    const condex::JointDensity* density = appx->impl.density();
    if (!density) {
      throw std::invalid_argument("density grids need quadrature mode");
    }
    const condex::Interval interval = appx->impl.node_values().grid.interval;
    const double y_min = appx->impl.y_min();
    const double y_max = appx->impl.y_max();
    const double dx = (interval.hi - interval.lo) / static_cast<double>(res_x);
    const double dy = (y_max - y_min) / static_cast<double>(res_y);
    for (size_t j = 0; j < res_x; ++j) {
      const double x = interval.lo + (static_cast<double>(j) + 0.5) * dx;
      for (size_t k = 0; k < res_y; ++k) {
        const double y = y_min + (static_cast<double>(k) + 0.5) * dy;
        out[j * res_y + k] = density->value(x, y);
      }
    }
    return CX_OK;
  });
}

void cx_approximant_free(cx_approximant* appx) { delete appx; }

cx_status cx_convergence_study(const cx_function* f, double lo, double hi, const unsigned* ns, size_t count,
                               cx_family family, cx_mode mode, unsigned panels_per_cell, unsigned probes,
                               cx_study_row* rows) {
  if (cx_status s = require(f && ns && rows && count > 0, "need a function, orders and row storage"); s != CX_OK)
    return s;
  return run([&] {
    std::vector<int> orders(ns, ns + count);
    condex::QuadratureSpec quad;
    quad.panels_per_cell = static_cast<int>(panels_per_cell);
    const auto study = condex::convergence_study(f->fn, condex::make_interval(lo, hi), orders,
                                                 to_family(family), to_mode(mode), quad, static_cast<int>(probes));
    for (std::size_t i = 0; i < study.size(); ++i) {
      rows[i].n = static_cast<unsigned>(study[i].report.n);
      rows[i].sup_error = study[i].report.sup_error;
      rows[i].bound_3dy = study[i].report.bound_3dy;
      rows[i].residual_sup = study[i].residual_sup;
    }
    return CX_OK;
  });
}

cx_status cx_gap_report(const double* values, size_t count, double* d, double* e) {
  if (cx_status s = require(values && d && e, "values and outputs must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::GapReport report = condex::gap_report(std::span<const double>(values, count));
    *d = report.d;
    *e = report.e;
    return CX_OK;
  });
}

cx_status cx_well_adam(unsigned n, double x, double* out) {
  if (cx_status s = require(out != nullptr, "output must be non-null"); s != CX_OK) return s;
  return run([&] {
    *out = condex::well::adam_wave(static_cast<int>(n), x);
    return CX_OK;
  });
}

cx_status cx_well_eve(unsigned n, double x, double* out) {
  if (cx_status s = require(out != nullptr, "output must be non-null"); s != CX_OK) return s;
  return run([&] {
    *out = condex::well::eve_wave(static_cast<int>(n), x);
    return CX_OK;
  });
}

cx_status cx_well_complex(unsigned n, double x, double* re, double* im) {
  if (cx_status s = require(re && im, "outputs must be non-null"); s != CX_OK) return s;
  return run([&] {
    const std::complex<double> value = condex::well::complex_wave(static_cast<int>(n), x);
    *re = value.real();
    *im = value.imag();
    return CX_OK;
  });
}

cx_status cx_well_energy(unsigned n, double scale, double* out) {
  if (cx_status s = require(out != nullptr, "output must be non-null"); s != CX_OK) return s;
  return run([&] {
    *out = condex::well::energy(static_cast<int>(n), scale);
    return CX_OK;
  });
}

cx_status cx_well_duality(unsigned n, double* nu, double* lambda, double* product) {
  if (cx_status s = require(nu && lambda && product, "outputs must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::well::DualityNumbers numbers = condex::well::duality_numbers(static_cast<int>(n));
    *nu = numbers.nu;
    *lambda = numbers.lambda;
    *product = numbers.product;
    return CX_OK;
  });
}

cx_status cx_well_local_ground(double lo, double hi, double y, double* adam_sq, double* eve_sq) {
  if (cx_status s = require(adam_sq && eve_sq, "outputs must be non-null"); s != CX_OK) return s;
  return run([&] {
    const condex::well::LocalGroundState state = condex::well::local_ground_state(lo, hi, y);
    *adam_sq = state.adam_sq;
    *eve_sq = state.eve_sq;
    return CX_OK;
  });
}

}  // extern "C"

#ifndef APMEAN_NORMS_HPP
#define APMEAN_NORMS_HPP

#include <string>
#include <vector>

#include "apmean/quadrature.hpp"
#include "apmean/signal.hpp"

namespace apmean {

/// Windows/steps for seminorm limits.  l_values doubles as T_values for the
/// Besicovitch schedule.
struct SeminormSchedule {
  Window window;
  std::vector<double> l_values;  // strictly increasing, positive
  double sup_step = 0.0;         // 0 → default: inner quadrature step
  double rtol = 1e-2;            // Cauchy certification tolerance
};

struct LimitReport {
  double estimate = 0.0;
  std::vector<double> per_l;  // value per schedule entry
  bool converged = false;
};

double sup_norm(const Signal& s, const Window& window, double step = 0.01);

/// ‖s‖_{S^p_l} = sup_x [(1/l)∫_x^{x+l}|s|^p]^{1/p}, outer sup on a grid.
double stepanoff(const Signal& s, double p, double l, const Window& window,
                 double sup_step = 0.0, const QuadratureConfig& q = {});

/// Weyl seminorm proxy: Stepanoff values along schedule.l_values; converged
/// certifies only Cauchy behaviour of the finite schedule.
LimitReport weyl(const Signal& s, double p, const SeminormSchedule& schedule,
                 const QuadratureConfig& q = {});

/// Besicovitch proxy over symmetric windows [-T, T]; estimate = max over the
/// tail half of the schedule (limsup under/over-estimate, no error bars).
LimitReport besicovitch(const Signal& s, double p, const SeminormSchedule& schedule,
                        const QuadratureConfig& q = {});

/// ‖f‖_u = ‖f/w‖_∞ + sup_{h∈[0,1]} ‖f − f_h‖_∞ with w(t) = 1+|t|.
double u_norm(const Signal& s, const Window& window, double step = 0.01,
              double shift_step = 0.05);

struct EnvelopeReport {
  int m = 0;
  bool holds = false;
};

/// Smallest m ≤ 64 with |s(t)| ≤ m·w(t) on grid points with |t| ≥ m.
EnvelopeReport envelope_check(const Signal& s, const Signal& w, const Window& window,
                              double step = 0.01);

/// Report JSON: {"norm": name, "params": {...}, "value": v, "series": [...]}.
std::string norm_report_json(const std::string& name, const std::string& params_json,
                             double value, const std::vector<double>& series);

}  // namespace apmean

#endif

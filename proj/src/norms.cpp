#include "apmean/norms.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace apmean {

namespace {

// |s|^p as a signal, for the inner Stepanoff/Besicovitch integrals.
Signal abs_pow(const Signal& s, double p) {
  return Signal::from_function([s, p](double t) {
    double a = std::abs(s.eval(t));
    return Complex(p == 1.0 ? a : std::pow(a, p), 0.0);
  });
}

std::size_t grid_count(double a, double b, double step) {
  if (b < a) return 0;
  return static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
}

}  // namespace

double sup_norm(const Signal& s, const Window& window, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("sup_norm step must be positive");
  std::size_t n = grid_count(window.a, window.b, step);
  if (n == 0) throw EmptyWindow("sup_norm: empty window");
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    best = std::max(best, std::abs(s.eval(window.a + static_cast<double>(i) * step)));
  // include the right endpoint even when step does not divide the window
  best = std::max(best, std::abs(s.eval(window.b)));
  return best;
}

double stepanoff(const Signal& s, double p, double l, const Window& window,
                 double sup_step, const QuadratureConfig& q) {
  if (!(p >= 1.0)) throw BadP(p);
  if (!(l > 0.0)) throw NonPositiveL(l);
  if (sup_step <= 0.0) sup_step = 1.0 / q.panels_per_unit;
  IntegralCache cache(abs_pow(s, p), q, window.a);
  double xmax = window.b - l;
  double best = 0.0;
  if (xmax < window.a) xmax = window.a;  // window shorter than l: single anchored mean
  std::size_t n = grid_count(window.a, xmax, sup_step);
  for (std::size_t i = 0; i < n; ++i) {
    double x = window.a + static_cast<double>(i) * sup_step;
    double v = cache.between(x, x + l).real() / l;
    best = std::max(best, v);
  }
  best = std::max(best, 0.0);
  return std::pow(best, 1.0 / p);
}

LimitReport weyl(const Signal& s, double p, const SeminormSchedule& schedule,
                 const QuadratureConfig& q) {
  if (schedule.l_values.empty()) throw EmptyRange("weyl: empty l schedule");
  LimitReport rep;
  for (double l : schedule.l_values)
    rep.per_l.push_back(stepanoff(s, p, l, schedule.window, schedule.sup_step, q));
  rep.estimate = rep.per_l.back();
  if (rep.per_l.size() >= 2) {
    double a = rep.per_l[rep.per_l.size() - 2], b = rep.per_l.back();
    rep.converged = std::abs(a - b) <= schedule.rtol * (1.0 + std::abs(b));
  }
  return rep;
}

LimitReport besicovitch(const Signal& s, double p, const SeminormSchedule& schedule,
                        const QuadratureConfig& q) {
  if (!(p >= 1.0)) throw BadP(p);
  if (schedule.l_values.empty()) throw EmptyRange("besicovitch: empty T schedule");
  LimitReport rep;
  IntegralCache cache(abs_pow(s, p), q, 0.0);
  for (double T : schedule.l_values) {
    if (!(T > 0.0)) throw EmptyRange("besicovitch: T values must be positive");
    double v;
    try {
      v = cache.between(-T, T).real() / (2.0 * T);
    } catch (const OutOfDomain&) {
      throw DomainNotSymmetric("signal not evaluable on [-T, T] for T = " + std::to_string(T));
    }
    rep.per_l.push_back(std::pow(std::max(v, 0.0), 1.0 / p));
  }
  std::size_t tail_start = rep.per_l.size() / 2;
  rep.estimate = *std::max_element(rep.per_l.begin() + tail_start, rep.per_l.end());
  if (rep.per_l.size() >= 2) {
    double a = rep.per_l[rep.per_l.size() - 2], b = rep.per_l.back();
    rep.converged = std::abs(a - b) <= schedule.rtol * (1.0 + std::abs(b));
  }
  return rep;
}

double u_norm(const Signal& s, const Window& window, double step, double shift_step) {
  std::size_t n = grid_count(window.a, window.b, step);
  if (n == 0) throw EmptyWindow("u_norm: empty window");
  double part1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double t = window.a + static_cast<double>(i) * step;
    part1 = std::max(part1, std::abs(s.eval(t)) / (1.0 + std::abs(t)));
  }
  double part2 = 0.0;
  std::size_t m = grid_count(0.0, 1.0, shift_step);
  for (std::size_t j = 0; j < m; ++j) {
    double h = std::min(1.0, static_cast<double>(j) * shift_step);
    if (h == 0.0) continue;
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double t = window.a + static_cast<double>(i) * step;
      if (t + h > window.b) break;
      sup = std::max(sup, std::abs(s.eval(t + h) - s.eval(t)));
    }
    part2 = std::max(part2, sup);
  }
  // h = 1 endpoint
  {
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double t = window.a + static_cast<double>(i) * step;
      if (t + 1.0 > window.b) break;
      sup = std::max(sup, std::abs(s.eval(t + 1.0) - s.eval(t)));
    }
    part2 = std::max(part2, sup);
  }
  return part1 + part2;
}

EnvelopeReport envelope_check(const Signal& s, const Signal& w, const Window& window,
                              double step) {
  std::size_t n = grid_count(window.a, window.b, step);
  for (int m = 1; m <= 64; ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      double t = window.a + static_cast<double>(i) * step;
      if (std::abs(t) < static_cast<double>(m)) continue;
      double wv = w.eval(t).real();
      if (std::abs(s.eval(t)) > static_cast<double>(m) * wv) ok = false;
    }
    if (ok) return {m, true};
  }
  return {0, false};
}

std::string norm_report_json(const std::string& name, const std::string& params_json,
                             double value, const std::vector<double>& series) {
  std::ostringstream out;
  out.precision(15);
  out << "{\"norm\":\"" << name << "\",\"params\":" << params_json << ",\"value\":" << value
      << ",\"series\":[";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i) out << ',';
    out << series[i];
  }
  out << "]}";
  return out.str();
}

}  // namespace apmean

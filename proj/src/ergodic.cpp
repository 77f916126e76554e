#include "apmean/ergodic.hpp"

#include "apmean/mean_ops.hpp"
#include "apmean/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace apmean {

namespace {

const Complex kI(0.0, 1.0);

Complex cis(double x) { return Complex(std::cos(x), std::sin(x)); }

Complex trig_mean_factor(double omega, double T) {
  if (omega == 0.0) return Complex(1.0, 0.0);
  double x = omega * T;
  return (cis(x) - 1.0) / (kI * x);
}

// (1/T)∫_x^{x+T} s, exact on the trig-poly path.
class WindowMean {
 public:
  WindowMean(const Signal& s, const QuadratureConfig& q) : poly_(s.as_trig_poly()) {
    if (!poly_) cache_ = std::make_shared<IntegralCache>(s, q);
  }

  Complex operator()(double x, double T) const {
    if (poly_) {
      Complex acc(0.0, 0.0);
      for (const auto& term : poly_->terms)
        acc += term.coeff * cis(term.omega * x) * trig_mean_factor(term.omega, T);
      return acc;
    }
    return cache_->between(x, x + T) / T;
  }

 private:
  std::optional<TrigPolyData> poly_;
  IntegralCachePtr cache_;
};

// |c_ω| at averaging horizon T, sharing one sample pass on the numeric path.
class CoefficientProbe {
 public:
  CoefficientProbe(const Signal& s, double base, const QuadratureConfig& q)
      : signal_(s), base_(base), q_(q), poly_(s.as_trig_poly()) {}

  Complex at(double omega, double T) const {
    if (poly_) {
      Complex acc(0.0, 0.0);
      for (const auto& term : poly_->terms) {
        double d = term.omega - omega;
        acc += term.coeff * cis(d * base_) * trig_mean_factor(d, T);
      }
      return acc;
    }
    ensure_samples(T);
    // trapezoid with an incremental phase rotation over the shared lattice
    std::size_t n = static_cast<std::size_t>(std::llround(T * q_.panels_per_unit));
    if (n >= samples_.size()) n = samples_.size() - 1;
    double hp = 1.0 / q_.panels_per_unit;
    Complex rot = cis(-omega * base_);
    Complex step = cis(-omega * hp);
    Complex acc = 0.5 * rot * samples_[0];
    for (std::size_t k = 1; k < n; ++k) {
      rot *= step;
      acc += rot * samples_[k];
    }
    rot *= step;
    acc += 0.5 * rot * samples_[n];
    return acc * hp / T;
  }

 private:
  void ensure_samples(double T) const {
    std::size_t need = static_cast<std::size_t>(std::llround(T * q_.panels_per_unit)) + 1;
    if (samples_.size() >= need) return;
    double hp = 1.0 / q_.panels_per_unit;
    std::size_t old = samples_.size();
    samples_.resize(need);
    for (std::size_t k = old; k < need; ++k)
      samples_[k] = signal_.eval(base_ + static_cast<double>(k) * hp);
  }

  Signal signal_;
  double base_;
  QuadratureConfig q_;
  std::optional<TrigPolyData> poly_;
  mutable std::vector<Complex> samples_;
};

}  // namespace

MeanReport ergodic_mean(const Signal& s, const std::vector<double>& T_values,
                        const std::vector<double>& base_points, double rtol,
                        const QuadratureConfig& q) {
  if (T_values.empty()) throw EmptyRange("ergodic_mean: empty T schedule");
  if (base_points.empty()) throw EmptyRange("ergodic_mean: no base points");
  WindowMean mean(s, q);
  MeanReport rep;
  rep.T_values = T_values;
  rep.base_points = base_points;
  rep.rtol = rtol;
  double T_max = T_values.back();
  Complex value(0.0, 0.0);
  for (double x : base_points) value += mean(x, T_max);
  value /= static_cast<double>(base_points.size());
  rep.value = value;
  for (double T : T_values) {
    double dev = 0.0;
    for (double x : base_points) dev = std::max(dev, std::abs(mean(x, T) - value));
    rep.sup_dev.push_back(dev);
  }
  // Cauchy certification over the schedule tail: the last deviation alone is
  // trivially small (value is defined at T_max), so include the previous one.
  double tail = rep.sup_dev.back();
  if (rep.sup_dev.size() >= 2) tail = std::max(tail, rep.sup_dev[rep.sup_dev.size() - 2]);
  rep.converged = tail <= rtol * (1.0 + std::abs(value));
  return rep;
}

Complex bohr_coefficient(const Signal& s, double omega, double T, double base,
                         const QuadratureConfig& q) {
  if (!(T > 0.0)) throw EmptyRange("bohr_coefficient: T must be positive");
  return CoefficientProbe(s, base, q).at(omega, T);
}

SpectrumEstimate bohr_spectrum_scan(const Signal& s, double omega_min, double omega_max,
                                    double omega_step, double T, double threshold,
                                    const QuadratureConfig& q) {
  if (!(omega_step > 0.0) || !(omega_max >= omega_min))
    throw EmptyRange("bohr_spectrum_scan: bad omega grid");
  SpectrumEstimate out;
  out.threshold = threshold;
  out.omega_min = omega_min;
  out.omega_max = omega_max;
  out.omega_step = omega_step;
  out.T = T;

  CoefficientProbe probe(s, 0.0, q);
  // Detection horizon matched to the grid: at T_det the coefficient main lobe
  // spans a few grid cells, so peaks cannot fall between grid points.
  double T_det = std::min(T, std::max(64.0, 2.0 / omega_step));

  std::size_t n = static_cast<std::size_t>(std::floor((omega_max - omega_min) / omega_step + 1e-9)) + 1;
  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i)
    mag[i] = std::abs(probe.at(omega_min + static_cast<double>(i) * omega_step, T_det));

  // candidate clusters: maximal runs of grid points above threshold
  std::vector<double> peaks;
  std::size_t i = 0;
  while (i < n) {
    if (mag[i] <= threshold) {
      ++i;
      continue;
    }
    std::size_t best = i;
    std::size_t j = i;
    while (j < n && mag[j] > threshold) {
      if (mag[j] > mag[best]) best = j;
      ++j;
    }
    peaks.push_back(omega_min + static_cast<double>(best) * omega_step);
    i = j;
  }

  // Staged golden-section refinement: locate the peak at the current horizon
  // to a tenth of its main lobe, then re-center with a pad of 0.75/T_r (the
  // apparent peak is displaced by interference from neighbouring lines, which
  // decays like 1/T²) and grow the horizon tenfold.  The pad keeps the true
  // line inside the next bracket while staying short of the first sidelobe,
  // so |c_ω| remains unimodal on every bracket.
  const double invphi = 0.6180339887498949;
  for (double peak : peaks) {
    double lo = std::max(omega_min, peak - omega_step);
    double hi = std::min(omega_max, peak + omega_step);
    double T_r = T_det;
    while (true) {
      bool last = T_r >= T;
      double tol = last ? 0.04 / T : 0.4 / T_r;
      double x1 = hi - invphi * (hi - lo);
      double x2 = lo + invphi * (hi - lo);
      double f1 = std::abs(probe.at(x1, T_r));
      double f2 = std::abs(probe.at(x2, T_r));
      while (hi - lo > tol) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + invphi * (hi - lo);
          f2 = std::abs(probe.at(x2, T_r));
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - invphi * (hi - lo);
          f1 = std::abs(probe.at(x1, T_r));
        }
      }
      if (last) break;
      double mid = 0.5 * (lo + hi);
      lo = std::max(omega_min, mid - 0.75 / T_r);
      hi = std::min(omega_max, mid + 0.75 / T_r);
      T_r = std::min(T, 10.0 * T_r);
    }
    double omega = 0.5 * (lo + hi);
    Complex c = probe.at(omega, T);
    if (std::abs(c) > threshold) out.entries.push_back({omega, c});
  }

  // dedupe refined peaks that collapsed onto the same line
  std::sort(out.entries.begin(), out.entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.omega < b.omega; });
  std::vector<SpectrumEntry> dedup;
  for (const auto& e : out.entries) {
    if (!dedup.empty() && std::abs(e.omega - dedup.back().omega) < omega_step) {
      if (std::abs(e.c) > std::abs(dedup.back().c)) dedup.back() = e;
    } else {
      dedup.push_back(e);
    }
  }
  out.entries = std::move(dedup);
  return out;
}

std::map<double, MeanReport> totally_ergodic_probe(const Signal& s,
                                                   const std::vector<double>& omega_set,
                                                   const std::vector<double>& T_values,
                                                   const std::vector<double>& base_points,
                                                   double rtol, const QuadratureConfig& q) {
  std::map<double, MeanReport> out;
  for (double omega : omega_set)
    out[omega] = ergodic_mean(s.modulated(-omega), T_values, base_points, rtol, q);
  return out;
}

Reconstruction reconstruct(const Signal& s, const SpectrumEstimate& spec, const Window& window,
                           double step) {
  TrigPolyData data;
  for (const auto& e : spec.entries) data.add_term(e.omega, e.c);
  data.normalize();
  Reconstruction rec;
  rec.poly = Signal::trig_poly(std::move(data));
  std::size_t n = static_cast<std::size_t>(std::floor(window.length() / step)) + 1;
  double sup = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    double t = std::min(window.a + static_cast<double>(i) * step, window.b);
    sup = std::max(sup, std::abs(s.eval(t) - rec.poly.eval(t)));
  }
  rec.sup_err = sup;
  return rec;
}

BohlBohrReport bohl_bohr_check(const Signal& f, double T, const QuadratureConfig& q) {
  auto poly = f.as_trig_poly();
  if (!poly) throw std::invalid_argument("bohl_bohr_check expects a trig polynomial");
  for (const auto& term : poly->terms)
    if (std::abs(term.omega) < 1e-12 && term.coeff != Complex(0.0, 0.0))
      throw ZeroFrequencyPresent();

  Signal Pf = indefinite_integral(f, 0.0, q);
  BohlBohrReport rep;
  Window half(0.0, T / 2.0), full(0.0, T);
  rep.sup_half = sup_norm(Pf, half, std::max(T / 20000.0, 0.01));
  rep.sup_full = sup_norm(Pf, full, std::max(T / 20000.0, 0.01));
  rep.bounded = rep.sup_half > 0.0 && rep.sup_full / rep.sup_half <= 1.05;

  double err = 0.0;
  for (const auto& term : poly->terms) {
    Complex expected = term.coeff / (kI * term.omega);
    Complex got = bohr_coefficient(Pf, term.omega, T, 0.0, q);
    err = std::max(err, std::abs(got - expected));
  }
  rep.coeff_ratio_err = err;
  return rep;
}

std::string spectrum_json(const SpectrumEstimate& spec) {
  std::ostringstream out;
  out.precision(15);
  out << "{\"threshold\":" << spec.threshold << ",\"T\":" << spec.T << ",\"grid\":{\"min\":"
      << spec.omega_min << ",\"max\":" << spec.omega_max << ",\"step\":" << spec.omega_step
      << "},\"entries\":[";
  for (std::size_t i = 0; i < spec.entries.size(); ++i) {
    if (i) out << ',';
    out << "{\"omega\":" << spec.entries[i].omega << ",\"re\":" << spec.entries[i].c.real()
        << ",\"im\":" << spec.entries[i].c.imag() << '}';
  }
  out << "]}";
  return out.str();
}

std::string mean_report_json(const MeanReport& rep) {
  std::ostringstream out;
  out.precision(15);
  out << "{\"value\":{\"re\":" << rep.value.real() << ",\"im\":" << rep.value.imag()
      << "},\"rtol\":" << rep.rtol << ",\"converged\":" << (rep.converged ? "true" : "false")
      << ",\"T_values\":[";
  for (std::size_t i = 0; i < rep.T_values.size(); ++i) {
    if (i) out << ',';
    out << rep.T_values[i];
  }
  out << "],\"sup_dev\":[";
  for (std::size_t i = 0; i < rep.sup_dev.size(); ++i) {
    if (i) out << ',';
    out << rep.sup_dev[i];
  }
  out << "],\"base_points\":[";
  for (std::size_t i = 0; i < rep.base_points.size(); ++i) {
    if (i) out << ',';
    out << rep.base_points[i];
  }
  out << "]}";
  return out.str();
}

}  // namespace apmean

#ifndef APMEAN_ERGODIC_HPP
#define APMEAN_ERGODIC_HPP

#include <map>
#include <string>
#include <vector>

#include "apmean/quadrature.hpp"
#include "apmean/signal.hpp"

namespace apmean {

/// Ergodic-mean estimate with per-horizon uniform deviation diagnostics.
struct MeanReport {
  Complex value;
  std::vector<double> T_values;
  std::vector<double> sup_dev;  // sup over base points of |M_T s(x) - value|
  std::vector<double> base_points;
  bool converged = false;
  double rtol = 1e-2;
};

struct SpectrumEntry {
  double omega = 0.0;
  Complex c;
};

struct SpectrumEstimate {
  std::vector<SpectrumEntry> entries;
  double threshold = 0.0;
  double omega_min = 0.0, omega_max = 0.0, omega_step = 0.0;
  double T = 0.0;
};

/// value = M_{T_max} s averaged over base points; sup_dev[i] = max over base
/// points of |M_{T_i}s(x) − value|; converged iff the last sup_dev is within
/// rtol·(1+|value|).
MeanReport ergodic_mean(const Signal& s, const std::vector<double>& T_values,
                        const std::vector<double>& base_points = {0.0, 1.0, 2.718281828459045},
                        double rtol = 1e-2, const QuadratureConfig& q = {});

/// c_ω ≈ (1/T)∫_base^{base+T} e^{−iωt}s(t)dt; exact closed form on the trig
/// polynomial path.
Complex bohr_coefficient(const Signal& s, double omega, double T, double base = 0.0,
                         const QuadratureConfig& q = {});

/// Grid scan with detection at a horizon matched to the grid resolution,
/// staged golden-section peak refinement, and final coefficients at T.
SpectrumEstimate bohr_spectrum_scan(const Signal& s, double omega_min, double omega_max,
                                    double omega_step, double T, double threshold,
                                    const QuadratureConfig& q = {});

std::map<double, MeanReport> totally_ergodic_probe(
    const Signal& s, const std::vector<double>& omega_set, const std::vector<double>& T_values,
    const std::vector<double>& base_points = {0.0, 1.0, 2.718281828459045}, double rtol = 1e-2,
    const QuadratureConfig& q = {});

struct Reconstruction {
  Signal poly;        // Σ c_ω γ_ω over detected entries (unit summation weights)
  double sup_err = 0.0;
};

Reconstruction reconstruct(const Signal& s, const SpectrumEstimate& spec, const Window& window,
                           double step = 0.05);

struct BohlBohrReport {
  bool bounded = false;
  double coeff_ratio_err = 0.0;
  double sup_half = 0.0, sup_full = 0.0;
};

/// For a trig polynomial f with no zero frequency: checks that Pf stays
/// bounded (sup over [0,T/2] vs [0,T] ratio ≤ 1.05) and that c_{ω_j}(Pf)
/// matches a_j/(iω_j) at horizon T.
BohlBohrReport bohl_bohr_check(const Signal& f, double T, const QuadratureConfig& q = {});

std::string spectrum_json(const SpectrumEstimate& spec);
std::string mean_report_json(const MeanReport& rep);

}  // namespace apmean

#endif

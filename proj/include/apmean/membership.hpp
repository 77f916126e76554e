#ifndef APMEAN_MEMBERSHIP_HPP
#define APMEAN_MEMBERSHIP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apmean/ergodic.hpp"
#include "apmean/signal.hpp"

namespace apmean {

/// Class tags.  APMod is the chirp-modulated surrogate class (x is a member
/// iff e^{-it²}x passes the AP test) used by the difference-condition probe.
struct ClassTag {
  enum class Kind { AP, SpAP, C0, Cub, E, E0, TE, AAP, MA, APMod };

  Kind kind = Kind::AP;
  double p = 1.0;                    // SpAP exponent
  std::vector<double> omegas;        // TE probe set
  std::shared_ptr<ClassTag> inner;   // MA inner class
  int n = 0;                         // MA iteration depth

  static ClassTag AP() { return {Kind::AP, 1.0, {}, nullptr, 0}; }
  static ClassTag SpAP(double p) { return {Kind::SpAP, p, {}, nullptr, 0}; }
  static ClassTag C0() { return {Kind::C0, 1.0, {}, nullptr, 0}; }
  static ClassTag Cub() { return {Kind::Cub, 1.0, {}, nullptr, 0}; }
  static ClassTag E() { return {Kind::E, 1.0, {}, nullptr, 0}; }
  static ClassTag E0() { return {Kind::E0, 1.0, {}, nullptr, 0}; }
  static ClassTag TE(std::vector<double> omegas) {
    return {Kind::TE, 1.0, std::move(omegas), nullptr, 0};
  }
  static ClassTag AAP() { return {Kind::AAP, 1.0, {}, nullptr, 0}; }
  static ClassTag MA(ClassTag inner_tag, int n) {
    return {Kind::MA, 1.0, {}, std::make_shared<ClassTag>(std::move(inner_tag)), n};
  }
  static ClassTag APMod() { return {Kind::APMod, 1.0, {}, nullptr, 0}; }

  std::string name() const;
};

/// Parses tag strings as used by the CLI: AP, SpAP:p, C0, Cub, E, E0,
/// TE:w1,w2,..., AAP, MA:inner:n, APMod.
ClassTag parse_tag(const std::string& text);

struct EpsPeriodReport {
  double epsilon = 0.0;
  double tau_max = 0.0;
  std::vector<double> periods;
  std::optional<double> inclusion_length;
  bool relatively_dense = false;
};

enum class Verdict { member, nonmember, inconclusive };

struct ClassVerdict {
  std::string tag;
  double score = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string evidence;  // JSON fragment describing the supporting computation
};

struct ClassifyParams {
  Window window{0.0, 40.0};
  // ε-period scan
  double eps = 0.1;
  double tau_max = 500.0;
  double tau_step = 0.01;
  int window_stride = 5;              // window grid step = window_stride·tau_step
  double dense_fraction = 0.5;        // dense iff inclusion_length ≤ fraction·tau_max
  // spectrum scan / reconstruction
  double scan_omega_min = -3.0, scan_omega_max = 3.0, scan_omega_step = 0.01;
  double scan_T = 1e4;
  double scan_threshold = 0.3;
  double recon_step = 0.05;
  // ergodic schedules
  std::vector<double> T_values{1e2, 1e3, 1e4};
  std::vector<double> base_points{0.0, 1.0, 2.718281828459045};
  double rtol = 1e-2;
  // thresholds
  double thr_ap = 0.1;
  double thr_c0 = 0.05;
  double thr_cub = 0.1;
  double cub_delta = 1e-3;
  double sup_step = 0.05;
  // MA sampling
  std::vector<double> h_samples{0.7, 1.0, 1.4142135623730951};
  QuadratureConfig quad{};
};

/// τ included iff sup_{t on the window grid} |s(t+τ) − s(t)| ≤ ε; evaluation
/// happens on a shared lattice of step tau_step so both scans share samples.
EpsPeriodReport eps_periods(const Signal& s, double eps, double tau_max, const Window& window,
                            double tau_step = 0.01, int window_stride = 5,
                            double dense_fraction = 0.5);

ClassVerdict classify(const Signal& s, const ClassTag& tag, const ClassifyParams& params = {});

struct DeltaProbeReport {
  std::vector<std::pair<double, ClassVerdict>> difference_verdicts;  // Δ_{s_i} s
  std::vector<std::pair<double, ClassVerdict>> residual_verdicts;    // s − M_h s
  bool consistent = false;  // the (Δ)-implication is not violated on the samples
};

DeltaProbeReport delta_probe(const Signal& s, const ClassTag& tag,
                             const std::vector<double>& s_samples,
                             const std::vector<double>& h_samples,
                             const ClassifyParams& params = {});

std::string verdict_json(const ClassVerdict& v);
std::string eps_report_json(const EpsPeriodReport& rep);

}  // namespace apmean

#endif

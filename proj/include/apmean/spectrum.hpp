#ifndef APMEAN_SPECTRUM_HPP
#define APMEAN_SPECTRUM_HPP

#include <vector>

#include "apmean/membership.hpp"
#include "apmean/signal.hpp"

namespace apmean {

/// Band-pass probe kernel k(t) = w_L(t)·(b/π)·sinc(bt)·e^{iω0 t} with a
/// raised-cosine window w_L(t) = cos²(πt/L) on [−L/2, L/2].
class BandKernel {
 public:
  BandKernel(double center, double bandwidth, double length = 400.0, int panels_per_unit = 20);

  Complex eval(double t) const;
  /// k̂(ω) = ∫ e^{−iωt} k(t) dt by quadrature (cached per ω).
  Complex transform(double omega) const;

  /// s*k as an evaluable signal (closed form on the trig-poly path).
  Signal convolve(const Signal& s) const;

  double center() const { return center_; }
  double bandwidth() const { return bandwidth_; }
  double length() const { return length_; }

 private:
  double center_, bandwidth_, length_;
  int panels_;
};

struct SpBankParams {
  std::vector<double> bandwidths{0.2, 0.5};
  double length = 400.0;
  double pass_level = 0.5;  // kernel participates at ω when |k̂(ω)| ≥ this
};

/// sp_{A}(s) over-approximation: ω stays in the estimate iff classify(s*k, tag)
/// is not a member for every bank kernel passing at ω.  Kernels are centered
/// on the scan grid.
std::vector<double> sp_estimate(const Signal& s, const ClassTag& tag, double omega_min,
                                double omega_max, double omega_step,
                                const SpBankParams& bank = {},
                                const ClassifyParams& params = {});

struct BeurlingPoint {
  double omega = 0.0;
  double magnitude = 0.0;
};

/// Raised-cosine-tapered windowed Fourier magnitudes, normalized by the taper
/// mass so a pure character of unit amplitude peaks near 1.
std::vector<BeurlingPoint> beurling_support(const Signal& s, double omega_min, double omega_max,
                                            double omega_step, const Window& window,
                                            double sample_step = 0.02);

}  // namespace apmean

#endif

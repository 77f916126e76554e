#ifndef APMEAN_MEAN_OPS_HPP
#define APMEAN_MEAN_OPS_HPP

#include <vector>

#include "apmean/quadrature.hpp"
#include "apmean/signal.hpp"

namespace apmean {

/// Sliding mean M_h s(t) = (1/h)∫_0^h s(t+u)du.  Trig polynomials get the
/// closed form a_j e^{iω_j t}(e^{iω_j h}-1)/(iω_j h) (analytic limit 1 at
/// ω_j = 0); everything else goes through a shared prefix-integral cache.
Signal mean_M(const Signal& s, double h, const QuadratureConfig& q = {});

/// M_{h_1}⋯M_{h_k} s, applied left to right.
Signal iterated_mean(const Signal& s, const std::vector<double>& hs,
                     const QuadratureConfig& q = {});

/// Δ_h s(t) = s(t+h) − s(t).
Signal difference(const Signal& s, double h);

/// P s(t) = ∫_base^t s, with P s(base) = 0.
Signal indefinite_integral(const Signal& s, double base = 0.0,
                           const QuadratureConfig& q = {});

/// Closed-form mean factor (e^{iωh}-1)/(iωh) with its ω→0 limit.
Complex mean_factor(double omega, double h);

}  // namespace apmean

#endif

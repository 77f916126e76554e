#ifndef APMEAN_DISTRIBUTIONS_HPP
#define APMEAN_DISTRIBUTIONS_HPP

#include <string>
#include <vector>

#include "apmean/quadrature.hpp"
#include "apmean/signal.hpp"

namespace apmean {

inline constexpr int kMaxDistroOrder = 6;

/// Compactly supported bump φ(x) = amplitude·exp(−1/(1−u²)), u = (x−center)/radius.
/// Derivatives up to order 6 come from the analytic recurrence
/// φ^{(k)} = (amplitude/radius^k)·R_k(u)·exp(−1/(1−u²)) with R_k polynomial in
/// u and 1/(1−u²).
class TestFunction {
 public:
  TestFunction(double center, double radius, Complex amplitude);

  Complex eval(double x, int order = 0) const;
  double support_lo() const { return center_ - radius_; }
  double support_hi() const { return center_ + radius_; }

  /// ∫φ^{(order)} e^{−iωx} dx by composite trapezoid (512 panels).
  Complex fourier(double omega, int order = 0, int panels = 512) const;
  /// ∫φ.
  Complex integral(int panels = 512) const;

  double center() const { return center_; }
  double radius() const { return radius_; }
  Complex amplitude() const { return amplitude_; }

 private:
  double center_, radius_;
  Complex amplitude_;
};

/// T = Σ_j base_j^{(order_j)} as a distribution; empty list is the zero rep.
struct DistroRep {
  struct Term {
    Signal base;
    int order = 0;
  };
  std::vector<Term> terms;
};

/// T*φ = Σ_j base_j * φ^{(order_j)} as an evaluable signal.  Trig-polynomial
/// bases convolve in closed form (the quadrature transform values of φ^{(k)}
/// factor out exactly); other bases integrate over the kernel support.
Signal convolve(const DistroRep& T, const TestFunction& phi, int max_order = kMaxDistroOrder,
                int panels = 512);

/// M̃_h T: term-wise mean of the bases; representation preserved.
DistroRep distro_mean(const DistroRep& T, double h, const QuadratureConfig& q = {});

/// T′: each order bumped by one.
DistroRep distro_derivative(const DistroRep& T, int max_order = kMaxDistroOrder);

/// c_ω(T) = bohr_coefficient(T*φ, ω, T_horizon)/φ̂(ω).
Complex distro_fourier_coeff(const DistroRep& T, double omega, const TestFunction& phi,
                             double T_horizon, const QuadratureConfig& q = {});

std::string distro_rep_json(const DistroRep& T);

}  // namespace apmean

#endif

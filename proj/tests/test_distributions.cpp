#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "apmean/distributions.hpp"
#include "apmean/mean_ops.hpp"
#include "apmean/signal.hpp"

using namespace apmean;

namespace {

double sup_diff(const Signal& a, const Signal& b, double lo, double hi, double step) {
  double worst = 0.0;
  for (double t = lo; t <= hi + 1e-12; t += step)
    worst = std::max(worst, std::abs(a.eval(t) - b.eval(t)));
  return worst;
}

}  // namespace

TEST_CASE("bump derivatives match finite differences") {
  TestFunction phi(0.3, 1.2, Complex(1.0, 0.0));
  double eps = 1e-5;
  for (int k = 1; k <= 4; ++k) {
    for (double x : {-0.4, 0.0, 0.3, 0.9}) {
      Complex fd = (phi.eval(x + eps, k - 1) - phi.eval(x - eps, k - 1)) / (2.0 * eps);
      Complex an = phi.eval(x, k);
      CHECK(std::abs(fd - an) < 1e-4 * (1.0 + std::abs(an)));
    }
  }
}

TEST_CASE("bump vanishes smoothly at the support boundary") {
  TestFunction phi(0.0, 1.0, Complex(1.0, 0.0));
  for (int k = 0; k <= 6; ++k) {
    CHECK(std::abs(phi.eval(1.0, k)) == 0.0);
    CHECK(std::abs(phi.eval(1.5, k)) == 0.0);
    CHECK(std::abs(phi.eval(0.999, k)) < 1.0e3);  // no blow-up approaching the edge
  }
}

TEST_CASE("derivative order cap is enforced") {
  TestFunction phi(0.0, 1.0, Complex(1.0, 0.0));
  CHECK_THROWS_AS(phi.eval(0.0, kMaxDistroOrder + 1), OrderTooHigh);
  DistroRep d{{{Signal::character(1.0), kMaxDistroOrder}}};
  CHECK_THROWS_AS(distro_derivative(d), OrderTooHigh);
}

TEST_CASE("convolving the derivative rep of the sine gives the cosine rep") {
  // (sin)' = cos as distributions: both reps must convolve identically
  Signal sin_s = Signal::trig_poly({{1.0, Complex(0.0, -0.5)}, {-1.0, Complex(0.0, 0.5)}});
  Signal cos_s = Signal::trig_poly({{1.0, Complex(0.5, 0.0)}, {-1.0, Complex(0.5, 0.0)}});
  DistroRep via_deriv{{{sin_s, 1}}};
  DistroRep direct{{{cos_s, 0}}};
  for (auto [c, r] : {std::pair{0.0, 1.0}, std::pair{0.3, 2.0}}) {
    TestFunction phi(c, r, Complex(1.0, 0.0));
    Signal a = convolve(via_deriv, phi);
    Signal b = convolve(direct, phi);
    CHECK(sup_diff(a, b, 0.0, 20.0, 0.37) < 1e-7);
  }
}

TEST_CASE("distribution mean commutes with the derivative") {
  Signal base = Signal::trig_poly({{1.0, Complex(1.0, 0.0)}, {2.3, Complex(0.0, 0.4)}});
  DistroRep d{{{base, 1}}};
  TestFunction phi(0.0, 1.5, Complex(1.0, 0.0));
  Signal a = convolve(distro_mean(distro_derivative(d), 0.8), phi);
  Signal b = convolve(distro_derivative(distro_mean(d, 0.8)), phi);
  CHECK(sup_diff(a, b, 0.0, 15.0, 0.29) < 1e-7);
}

TEST_CASE("distribution mean agrees with the signal mean through convolution") {
  Signal base = Signal::character(1.3);
  DistroRep d{{{base, 0}}};
  TestFunction phi(0.0, 1.0, Complex(1.0, 0.0));
  Signal a = convolve(distro_mean(d, 0.6), phi);
  Signal b = mean_M(convolve(d, phi), 0.6);
  CHECK(sup_diff(a, b, 0.0, 15.0, 0.31) < 1e-7);
}

TEST_CASE("fourier coefficient of a represented character") {
  DistroRep d{{{Signal::character(1.0), 1}}};
  TestFunction phi(0.0, 1.0, Complex(1.0, 0.0));
  // derivative of e^{it} contributes the factor i at omega = 1
  Complex c1 = distro_fourier_coeff(d, 1.0, phi, 1e4);
  CHECK(std::abs(c1 - Complex(0.0, 1.0)) < 5e-2);
  Complex c0 = distro_fourier_coeff(d, 0.0, phi, 1e4);
  CHECK(std::abs(c0) < 2e-3);
}

TEST_CASE("fourier coefficient refuses a vanishing kernel transform") {
  DistroRep d{{{Signal::character(1.0), 0}}};
  TestFunction phi(0.0, 1.0, Complex(1.0, 0.0));
  // the bump transform decays superpolynomially; far out it underflows the guard
  CHECK_THROWS_AS(distro_fourier_coeff(d, 400.0, phi, 1e3), KernelZeroAtOmega);
}

TEST_CASE("empty rep is the zero distribution") {
  DistroRep d;
  TestFunction phi(0.0, 1.0, Complex(1.0, 0.0));
  Signal z = convolve(d, phi);
  for (double t : {0.0, 2.0, 11.0}) CHECK(std::abs(z.eval(t)) == 0.0);
}

TEST_CASE("rep json is deterministic") {
  DistroRep d{{{Signal::character(1.0), 2}}};
  CHECK(distro_rep_json(d) == distro_rep_json(d));
}

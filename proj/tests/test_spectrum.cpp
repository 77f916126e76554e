#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "apmean/spectrum.hpp"
#include "apmean/signal.hpp"

using namespace apmean;

TEST_CASE("band kernel transform is near one at its center") {
  for (double center : {0.0, 1.0, -1.5}) {
    BandKernel k(center, 0.5);
    CHECK(std::abs(k.transform(center) - Complex(1.0, 0.0)) <= 0.1);
  }
}

TEST_CASE("band kernel transform decays outside the band") {
  BandKernel k(0.0, 0.3);
  CHECK(std::abs(k.transform(2.0)) < 0.05);
  CHECK(std::abs(k.transform(-3.0)) < 0.05);
}

TEST_CASE("convolution with a character multiplies by the transform") {
  BandKernel k(1.0, 0.5);
  Signal g = Signal::character(1.0);
  Signal c = k.convolve(g);
  Complex factor = k.transform(1.0);
  for (double t : {0.0, 3.0, 10.0})
    CHECK(std::abs(c.eval(t) - factor * g.eval(t)) < 1e-9);
}

TEST_CASE("band-probe estimate of the chirp is empty") {
  // every band-pass of the chirp has vanishing energy (the instantaneous
  // frequency sweeps through any fixed band), so each omega gets cleared
  ClassifyParams p;
  p.window = Window{0.0, 200.0};
  p.sup_step = 1.0;
  std::vector<double> est =
      sp_estimate(Signal::chirp(Complex(1.0, 0.0)), ClassTag::AP(), -0.5, 0.5, 1.0, {}, p);
  CHECK(est.empty());
}

TEST_CASE("band-probe keeps a line that fails the smaller class") {
  ClassifyParams p;
  p.window = Window{0.0, 200.0};
  p.sup_step = 1.0;
  Signal g = Signal::character(1.0);
  std::vector<double> est = sp_estimate(g, ClassTag::C0(), 1.0, 1.0, 0.5, {}, p);
  REQUIRE(est.size() == 1);
  CHECK(est[0] == doctest::Approx(1.0));
}

TEST_CASE("band-probe estimate clears an almost periodic line") {
  ClassifyParams p;
  p.window = Window{0.0, 200.0};
  p.sup_step = 1.0;
  Signal g = Signal::character(1.0);
  std::vector<double> est = sp_estimate(g, ClassTag::AP(), 0.5, 1.5, 0.5, {}, p);
  CHECK(std::find(est.begin(), est.end(), 1.0) == est.end());
}

TEST_CASE("estimate relative to a smaller class contains the larger-class estimate") {
  // C0 is smaller than E, so clearing omega for C0 is harder: sp over C0
  // contains sp over E pointwise on the same run
  ClassifyParams p;
  p.window = Window{0.0, 200.0};
  p.sup_step = 1.0;
  Signal s = Signal::character(1.0);
  std::vector<double> over_c0 = sp_estimate(s, ClassTag::C0(), 0.0, 2.0, 0.5, {}, p);
  std::vector<double> over_e = sp_estimate(s, ClassTag::E(), 0.0, 2.0, 0.5, {}, p);
  CHECK(std::includes(over_c0.begin(), over_c0.end(), over_e.begin(), over_e.end()));
}

TEST_CASE("beurling support peaks near one for a unit character") {
  Signal g = Signal::character(1.0);
  auto pts = beurling_support(g, 0.0, 2.0, 0.05, Window{0.0, 200.0});
  double best_mag = 0.0, best_omega = 0.0;
  for (const auto& p : pts)
    if (p.magnitude > best_mag) { best_mag = p.magnitude; best_omega = p.omega; }
  CHECK(std::abs(best_omega - 1.0) <= 0.05);
  CHECK(best_mag == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("beurling support is flat for the chirp") {
  auto pts = beurling_support(Signal::chirp(Complex(1.0, 0.0)), -1.0, 1.0, 0.1,
                              Window{0.0, 200.0});
  for (const auto& p : pts) CHECK(p.magnitude < 0.3);
}
